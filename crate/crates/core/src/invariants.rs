//! Determinant fonts, three- and four-tangle, and local-unitary covariance checks.
//!
//! Every determinant here is a 2x2 determinant of amplitudes, evaluated
//! directly. Qubits `A, B, C, D` are bit positions 1 to 4.

use rayon::prelude::*;

use crate::basis::Qubit;
use crate::density::density;
use crate::error::{Error, Result};
use crate::random::{rng_for, sample_unitary};
use crate::scalar::{Real, C};
use crate::spectra::{concurrence_2q, global_negativity};
use crate::state::{LocalUnitary, PureState};

/// Primary and alternate three-tangle forms must agree to this before a value is returned.
const TANGLE_FORM_TOL: f64 = 1e-8;

#[inline]
fn a3<T: Real>(s: &PureState<T>, i1: usize, i2: usize, i3: usize) -> C<T> {
    s.amp((i1 << 2) | (i2 << 1) | i3)
}

#[inline]
fn a4<T: Real>(s: &PureState<T>, i1: usize, i2: usize, i3: usize, i4: usize) -> C<T> {
    s.amp(((i1 & 1) << 3) | ((i2 & 1) << 2) | ((i3 & 1) << 1) | (i4 & 1))
}

/// Three-qubit font determinants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FontDeterminants3<T: Real> {
    /// `a000 a111 - a011 a100`
    pub t000: C<T>,
    /// `a001 a110 - a010 a101`
    pub t001: C<T>,
    /// `a000 a101 - a001 a100`
    pub pb0: C<T>,
    /// `a010 a111 - a011 a110`
    pub pb1: C<T>,
    /// `a000 a110 - a010 a100`
    pub pc0: C<T>,
    /// `a001 a111 - a011 a101`
    pub pc1: C<T>,
}

impl<T: Real> FontDeterminants3<T> {
    /// `(T001 - T000)^2 - 4 PB1 PB0`
    pub fn invariant(&self) -> C<T> {
        let d = self.t001 - self.t000;
        d * d - self.pb1 * self.pb0 * T::lit(4.0)
    }

    /// `(T001 + T000)^2 - 4 PC0 PC1`
    pub fn alternate_invariant(&self) -> C<T> {
        let s = self.t001 + self.t000;
        s * s - self.pc0 * self.pc1 * T::lit(4.0)
    }

    /// `|T001 T000 - (PC0 PC1 - PB1 PB0)|`
    pub fn product_identity_residual(&self) -> T {
        (self.t001 * self.t000 - (self.pc0 * self.pc1 - self.pb1 * self.pb0)).norm()
    }
}

pub fn three_fonts<T: Real>(state: &PureState<T>) -> Result<FontDeterminants3<T>> {
    state.require_qubits(3)?;
    let a = |i, j, k| a3(state, i, j, k);
    Ok(FontDeterminants3 {
        t000: a(0, 0, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 0),
        t001: a(0, 0, 1) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 1),
        pb0: a(0, 0, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 0, 0),
        pb1: a(0, 1, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 1, 0),
        pc0: a(0, 0, 0) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 0),
        pc1: a(0, 0, 1) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 1),
    })
}

/// Both three-tangle forms, unchecked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeTangleForms<T: Real> {
    pub primary: T,
    pub alternate: T,
}

pub fn three_tangle_forms<T: Real>(state: &PureState<T>) -> Result<ThreeTangleForms<T>> {
    let f = three_fonts(state)?;
    let four = T::lit(4.0);
    Ok(ThreeTangleForms { primary: four * f.invariant().norm(), alternate: four * f.alternate_invariant().norm() })
}

/// `4 |(T001 - T000)^2 - 4 PB1 PB0|`, cross-checked against the alternate form.
pub fn three_tangle<T: Real>(state: &PureState<T>) -> Result<T> {
    let forms = three_tangle_forms(state)?;
    let gap = (forms.primary - forms.alternate).abs();
    if !(gap <= T::lit(TANGLE_FORM_TOL)) {
        return Err(Error::TangleFormMismatch(gap.to_f64_lossy()));
    }
    Ok(forms.primary)
}

/// `|tau3 - (C²_{A(BC)} - C²_{AB} - C²_{AC})|`, where the one-versus-rest
/// concurrence is the global negativity on `A` and the pairwise values are
/// Wootters concurrences of the reduced states.
pub fn ckw_residual<T: Real>(state: &PureState<T>) -> Result<T> {
    state.require_qubits(3)?;
    let tau = three_tangle(state)?;
    let rho = density(state);
    let c_a_bc = global_negativity(state, Qubit::A)?;
    let c_ab = concurrence_2q(&rho.partial_trace(&[Qubit::A, Qubit::B])?)?;
    let c_ac = concurrence_2q(&rho.partial_trace(&[Qubit::A, Qubit::C])?)?;
    Ok((tau - (c_a_bc * c_a_bc - c_ab * c_ab - c_ac * c_ac)).abs())
}

/// Scalar multiplying one side of a covariance relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prefactor {
    One,
    /// `1/(1+|x|^2)`
    InverseNormSquared,
    /// `1/sqrt(1+|x|^2)`
    InverseNorm,
}

impl Prefactor {
    pub const CANDIDATES: [Prefactor; 3] = [Prefactor::One, Prefactor::InverseNormSquared, Prefactor::InverseNorm];

    pub fn value<T: Real>(self, x: C<T>) -> T {
        let q = T::one() + x.norm_sqr();
        match self {
            Prefactor::One => T::one(),
            Prefactor::InverseNormSquared => q.recip(),
            Prefactor::InverseNorm => q.sqrt().recip(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Prefactor::One => "1",
            Prefactor::InverseNormSquared => "1/(1+|x|^2)",
            Prefactor::InverseNorm => "1/sqrt(1+|x|^2)",
        }
    }
}

/// Residual of one covariance relation `lhs = prefactor * rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceReport<T: Real> {
    pub relation: String,
    /// Max absolute difference between the two sides, at `prefactor`.
    pub residual: T,
    pub prefactor: Prefactor,
    pub prefactor_used: T,
    /// Residual under every candidate that was tried, in candidate order.
    pub candidates: Vec<(Prefactor, T)>,
}

impl<T: Real> CovarianceReport<T> {
    fn fixed(relation: impl Into<String>, lhs: C<T>, rhs: C<T>, prefactor: Prefactor, x: C<T>) -> Self {
        let pf = prefactor.value(x);
        let residual = (lhs - rhs * pf).norm();
        Self {
            relation: relation.into(),
            residual,
            prefactor,
            prefactor_used: pf,
            candidates: vec![(prefactor, residual)],
        }
    }

    /// Tries every candidate prefactor and keeps the first one with minimal residual.
    fn best(relation: impl Into<String>, lhs: C<T>, rhs: C<T>, x: C<T>) -> Self {
        let candidates: Vec<(Prefactor, T)> =
            Prefactor::CANDIDATES.iter().map(|&p| (p, (lhs - rhs * p.value(x)).norm())).collect();
        let (prefactor, residual) =
            candidates.iter().copied().fold(candidates[0], |best, cur| if cur.1 < best.1 { cur } else { best });
        Self { relation: relation.into(), residual, prefactor, prefactor_used: prefactor.value(x), candidates }
    }
}

/// Transformation laws of the three-qubit determinants under
/// `{1, -x*; x, 1}/sqrt(1+|x|²)` on `B`, and invariance of
/// `T001 - T000`, `PB0`, `PB1` under the same unitary on `A` or `C`.
pub fn covariance_check_3<T: Real>(state: &PureState<T>, x: C<T>) -> Result<Vec<CovarianceReport<T>>> {
    state.require_qubits(3)?;
    let f = three_fonts(state)?;
    let g = three_fonts(&state.apply(&LocalUnitary::parametrized(Qubit::B, x))?)?;
    let xc = x.conj();
    let x2 = x.norm_sqr();
    let diff = f.t001 - f.t000;
    let pf = Prefactor::InverseNormSquared;
    let mut out = vec![
        CovarianceReport::fixed("UB1", g.t000, f.t000 + f.t001 * x2 - xc * f.pb1 + x * f.pb0, pf, x),
        CovarianceReport::fixed("UB2", g.t001, f.t001 + f.t000 * x2 + xc * f.pb1 - x * f.pb0, pf, x),
        CovarianceReport::fixed("UB3", g.pb0, f.pb0 + xc * xc * f.pb1 + xc * diff, pf, x),
        CovarianceReport::fixed("UB4", g.pb1, f.pb1 + x * x * f.pb0 - x * diff, pf, x),
    ];
    for q in [Qubit::A, Qubit::C] {
        let h = three_fonts(&state.apply(&LocalUnitary::parametrized(q, x))?)?;
        out.push(CovarianceReport::fixed(format!("{q}:T001-T000"), h.t001 - h.t000, diff, Prefactor::One, x));
        out.push(CovarianceReport::fixed(format!("{q}:PB0"), h.pb0, f.pb0, Prefactor::One, x));
        out.push(CovarianceReport::fixed(format!("{q}:PB1"), h.pb1, f.pb1, Prefactor::One, x));
    }
    Ok(out)
}

/// Four-qubit font determinants with qubits `A` and `B` leading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FontDeterminants4<T: Real> {
    /// `f[i3][i4] = a_{00 i3 i4} a_{11 ~i3 ~i4} - a_{01 ~i3 ~i4} a_{10 i3 i4}`
    pub f: [[C<T>; 2]; 2],
    /// `tc[i3][i4] = a_{00 i3 i4} a_{11 i3 ~i4} - a_{01 i3 ~i4} a_{10 i3 i4}`
    pub tc: [[C<T>; 2]; 2],
    /// `tb[i2][i4] = a_{0 i2 0 i4} a_{1 i2 1 ~i4} - a_{0 i2 1 ~i4} a_{1 i2 0 i4}`
    pub tb: [[C<T>; 2]; 2],
}

impl<T: Real> FontDeterminants4<T> {
    /// `(F0001 - F0000) + (F0010 - F0011)`
    pub fn invariant(&self) -> C<T> {
        (self.f[0][1] - self.f[0][0]) + (self.f[1][0] - self.f[1][1])
    }
}

pub fn four_fonts<T: Real>(state: &PureState<T>) -> Result<FontDeterminants4<T>> {
    state.require_qubits(4)?;
    let a = |i1, i2, i3, i4| a4(state, i1, i2, i3, i4);
    let mut f = [[C::new(T::zero(), T::zero()); 2]; 2];
    let mut tc = f;
    let mut tb = f;
    for u in 0..2 {
        for v in 0..2 {
            f[u][v] = a(0, 0, u, v) * a(1, 1, u + 1, v + 1) - a(0, 1, u + 1, v + 1) * a(1, 0, u, v);
            tc[u][v] = a(0, 0, u, v) * a(1, 1, u, v + 1) - a(0, 1, u, v + 1) * a(1, 0, u, v);
            tb[u][v] = a(0, u, 0, v) * a(1, u, 1, v + 1) - a(0, u, 1, v + 1) * a(1, u, 0, v);
        }
    }
    Ok(FontDeterminants4 { f, tc, tb })
}

/// `(F0001 - F0000) + (F0010 - F0011)`.
pub fn four_invariant<T: Real>(state: &PureState<T>) -> Result<C<T>> {
    Ok(four_fonts(state)?.invariant())
}

/// `4 |F^{ABCD}|^2`.
pub fn four_tangle<T: Real>(state: &PureState<T>) -> Result<T> {
    Ok(T::lit(4.0) * four_invariant(state)?.norm_sqr())
}

/// Applies `{1, -x*; x, 1}/sqrt(1+|x|²)` to `qubit` and reports the
/// transformation laws of the four-qubit fonts for that qubit. Relations are
/// tested against every candidate prefactor; the last report is always the
/// bottom line `| |F'| - |F| |`.
pub fn covariance_check_4<T: Real>(state: &PureState<T>, qubit: Qubit, x: C<T>) -> Result<Vec<CovarianceReport<T>>> {
    state.require_qubits(4)?;
    qubit.check(4)?;
    let f0 = four_fonts(state)?;
    let f1 = four_fonts(&state.apply(&LocalUnitary::parametrized(qubit, x))?)?;
    let (f, g) = (&f0.f, &f1.f);
    let xc = x.conj();
    let x2 = x.norm_sqr();
    let mut out = Vec::new();
    match qubit.position() {
        1 => {
            for (u, v) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                out.push(CovarianceReport::best(format!("A:F00{u}{v}"), g[u][v], f[u][v], x));
            }
        }
        2 => {
            let tb = &f0.tb;
            let laws = [
                ("UB:F0000", g[0][0], f[0][0] + f[1][1] * x2 - xc * tb[1][0] + x * tb[0][0]),
                ("UB:F0001", g[0][1], f[0][1] + f[1][0] * x2 - xc * tb[1][1] + x * tb[0][1]),
                ("UB:F0011", g[1][1], f[1][1] + f[0][0] * x2 + xc * tb[1][0] - x * tb[0][0]),
                ("UB:F0010", g[1][0], f[1][0] + f[0][1] * x2 + xc * tb[1][1] - x * tb[0][1]),
            ];
            for (name, lhs, rhs) in laws {
                out.push(CovarianceReport::best(name, lhs, rhs, x));
            }
            let (s, t) = (g[0][1] + g[1][0], g[0][0] + g[1][1]);
            let (s0, t0) = (f[0][1] + f[1][0], f[0][0] + f[1][1]);
            out.push(CovarianceReport::best("UB+", s + t, s0 + t0, x));
            out.push(CovarianceReport::best("UB-", s - t, s0 - t0, x));
        }
        3 => {
            let tc = &f0.tc;
            let (d1, d2) = (f[0][1] - f[0][0], f[1][0] - f[1][1]);
            let (e1, e2) = (g[0][1] - g[0][0], g[1][0] - g[1][1]);
            let c1 = tc[1][0] - tc[1][1];
            let c0 = tc[0][0] - tc[0][1];
            out.push(CovarianceReport::best("UC:F0001-F0000", e1, d1 + d2 * x2 + xc * c1 - x * c0, x));
            out.push(CovarianceReport::best("UC:F0010-F0011", e2, d2 + d1 * x2 - xc * c1 + x * c0, x));
            out.push(CovarianceReport::best("UC+", e1 + e2, d1 + d2, x));
        }
        4 => {
            let (d1, d2) = (f[0][1] - f[0][0], f[1][0] - f[1][1]);
            let (e1, e2) = (g[0][1] - g[0][0], g[1][0] - g[1][1]);
            out.push(CovarianceReport::best("UD+", e1 + e2, d1 + d2, x));
            out.push(CovarianceReport::best("UD-", e1 - e2, d1 - d2, x));
        }
        _ => unreachable!("checked above"),
    }
    let (before, after) = (f0.invariant().norm(), f1.invariant().norm());
    out.push(CovarianceReport::fixed(
        "|F^ABCD|",
        C::new(after, T::zero()),
        C::new(before, T::zero()),
        Prefactor::One,
        x,
    ));
    Ok(out)
}

/// Max `|tau(U_1 ⊗ ... ⊗ U_n |psi>) - tau(|psi>)|` over `trials` products of
/// Haar-random single-qubit unitaries. `tau` is the three-tangle for three
/// qubits and the four-tangle for four. Trial `t` draws from stream `t` of
/// `seed`, so the result does not depend on scheduling.
pub fn lu_invariance_sweep<T: Real>(state: &PureState<T>, trials: usize, seed: u64) -> Result<T> {
    let n = state.n_qubits();
    let tau: fn(&PureState<T>) -> Result<T> = match n {
        3 => three_tangle,
        4 => four_tangle,
        _ => return Err(Error::WrongQubitCount { expected: "3 or 4".into(), actual: n }),
    };
    let reference = tau(state)?;
    (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for(seed, t);
            let lus: Vec<_> =
                Qubit::all(n).map(|q| LocalUnitary { target: q, matrix: sample_unitary(&mut rng) }).collect();
            Ok((tau(&state.apply_all(&lus)?)? - reference).abs())
        })
        .try_reduce(T::zero, |a, b| Ok(a.max(b)))
}
