//! Spectra, trace norms, global and K-way negativities, and negativity fonts.

use crate::basis::{BasisIndex, Qubit};
use crate::density::{density, DensityOperator};
use crate::eigen::{jacobi_eigen, tridiagonal_eigenvalues};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{Real, C};
use crate::state::PureState;
use crate::transpose::{global_pt, k_label, kway_pt, KLabel};

/// Real eigenvalues of a Hermitian matrix, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T: Real> {
    eigenvalues: Vec<T>,
}

impl<T: Real> Spectrum<T> {
    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn sum(&self) -> T {
        self.eigenvalues.iter().copied().sum()
    }

    pub fn min(&self) -> Option<T> {
        self.eigenvalues.first().copied()
    }

    pub fn trace_norm(&self) -> T {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// Eigenvalues below `-T::zero_tol()`; anything in `(-zero_tol, 0)` counts as zero.
    pub fn negative(&self) -> impl Iterator<Item = T> + '_ {
        self.eigenvalues.iter().copied().filter(|&x| x < -T::zero_tol())
    }

    /// `2 * sum |lambda^-|`.
    pub fn negativity(&self) -> T {
        T::lit(2.0) * self.negative().map(|x| x.abs()).sum::<T>()
    }
}

pub fn hermitian_eigenvalues<T: Real>(m: &CMatrix<T>) -> Result<Spectrum<T>> {
    Ok(Spectrum { eigenvalues: tridiagonal_eigenvalues(m)? })
}

/// Sum of absolute eigenvalues.
pub fn trace_norm<T: Real>(m: &CMatrix<T>) -> Result<T> {
    Ok(hermitian_eigenvalues(m)?.trace_norm())
}

/// `||rho_G^{T_p}||_1 - 1` for `|psi><psi|`.
pub fn global_negativity<T: Real>(state: &PureState<T>, p: Qubit) -> Result<T> {
    p.check(state.n_qubits())?;
    let pt = global_pt(&density(state), p)?;
    let n = trace_norm(pt.matrix())? - T::one();
    Ok(if n < T::zero() && n > -T::zero_tol() { T::zero() } else { n })
}

/// Twice the absolute sum of the negative eigenvalues of `rho_K^{T_p}`.
pub fn kway_negativity<T: Real>(state: &PureState<T>, p: Qubit, k: usize) -> Result<T> {
    let pt = kway_pt(&density(state), p, k)?;
    Ok(hermitian_eigenvalues(pt.matrix())?.negativity())
}

/// Negativity of an already-built partial transpose, eigenvalue route.
pub fn transpose_negativity<T: Real>(pt: &DensityOperator<T>) -> Result<T> {
    Ok(hermitian_eigenvalues(pt.matrix())?.negativity())
}

/// Four basis vectors `|i>, |j>, |i with bit p flipped>, |j with bit p flipped>`
/// spanning a 4x4 principal block of the global partial transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FontLocation {
    pub i: BasisIndex,
    pub j: BasisIndex,
    pub p: Qubit,
    pub k: KLabel,
}

/// One negativity font: its location, `det nu` and the block's negative eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Font<T: Real> {
    pub location: FontLocation,
    /// `a_i a_j - a_{i'} a_{j'}`, primes denoting the flipped `p` bit.
    pub det: C<T>,
    /// `-|det|`.
    pub lambda_minus: T,
    /// `|det| <= 1e-14`: the block is positive semidefinite.
    pub non_negative: bool,
}

const FONT_ZERO_TOL: f64 = 1e-14;

/// All negativity fonts of the global transpose on `p`.
///
/// Each font is listed once: `i` has bit `p` clear, `j` has it set, and `i`
/// precedes `j` with its `p` bit cleared. Pairs differing only in bit `p`
/// do not span four distinct vectors and are skipped.
pub fn enumerate_fonts<T: Real>(state: &PureState<T>, p: Qubit) -> Result<Vec<Font<T>>> {
    let n = state.n_qubits();
    p.check(n)?;
    let mask = p.mask(n);
    let a = state.amplitudes();
    let lows: Vec<usize> = (0..state.dim()).filter(|x| x & mask == 0).collect();
    let mut fonts = Vec::with_capacity(lows.len() * lows.len().saturating_sub(1) / 2);
    for (s, &i) in lows.iter().enumerate() {
        for &j_flipped in &lows[s + 1..] {
            let j = j_flipped | mask;
            let det = a[i] * a[j] - a[i ^ mask] * a[j_flipped];
            let bi = BasisIndex::new(i, n)?;
            let bj = BasisIndex::new(j, n)?;
            fonts.push(Font {
                location: FontLocation { i: bi, j: bj, p, k: k_label(bi, bj)? },
                det,
                lambda_minus: -det.norm(),
                non_negative: det.norm() <= T::lit(FONT_ZERO_TOL),
            });
        }
    }
    Ok(fonts)
}

/// `2 |a00 a11 - a01 a10|` for a two-qubit pure state.
pub fn font_negativity_2q<T: Real>(state: &PureState<T>) -> Result<T> {
    state.require_qubits(2)?;
    let a = state.amplitudes();
    Ok(T::lit(2.0) * (a[0] * a[3] - a[1] * a[2]).norm())
}

/// Wootters concurrence of a two-qubit density operator.
pub fn concurrence_2q<T: Real>(rho: &DensityOperator<T>) -> Result<T> {
    if rho.n_qubits() != 2 {
        return Err(Error::WrongQubitCount { expected: "2".into(), actual: rho.n_qubits() });
    }
    let m = rho.matrix();
    let tol = T::validation_tol() * T::lit(10.0);
    let herm = m.hermiticity_defect();
    if !(herm <= tol) {
        return Err(Error::NotHermitian(herm.to_f64_lossy()));
    }
    let tr = m.trace();
    if !((tr.re - T::one()).abs() <= tol && tr.im.abs() <= tol) {
        return Err(Error::InvalidDensity(format!("trace {tr}")));
    }
    let dec = jacobi_eigen(m)?;
    if dec.values[0] < -tol {
        return Err(Error::InvalidDensity(format!("negative eigenvalue {}", dec.values[0])));
    }

    // rho = W W† with W = V diag(sqrt(lambda)) over the numerically nonzero
    // spectrum. The square roots of the eigenvalues of rho (sy⊗sy) rho* (sy⊗sy)
    // are the singular values of the complex-symmetric W^T (sy⊗sy) W.
    let cutoff = dec.values[3].max(T::zero()) * T::epsilon() * T::lit(64.0);
    let kept: Vec<usize> = (0..4).filter(|&k| dec.values[k] > cutoff).collect();
    let r = kept.len();
    // sy ⊗ sy maps |b> to sign(b) |3 - b>
    let sign = |b: usize| if b == 0 || b == 3 { -T::one() } else { T::one() };
    let w = |row: usize, col: usize| dec.vectors[(row, kept[col])] * dec.values[kept[col]].sqrt();
    let mut dilation = CMatrix::zeros(2 * r);
    for a in 0..r {
        for b in 0..r {
            let mut acc = C::new(T::zero(), T::zero());
            for row in 0..4 {
                acc += w(row, a) * w(3 - row, b) * sign(3 - row);
            }
            dilation[(a, r + b)] = acc;
            dilation[(r + b, a)] = acc.conj();
        }
    }
    // eigenvalues of [[0, X], [X†, 0]] are ±(singular values of X)
    let mut mu: Vec<T> = jacobi_eigen(&dilation)?.values.into_iter().skip(r).map(|x| x.max(T::zero())).collect();
    mu.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    mu.resize(4, T::zero());
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).max(T::zero()))
}
