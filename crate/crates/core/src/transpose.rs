//! Global and K-way partial transposes with respect to a single qubit.
//!
//! Every matrix element `<i|rho|j>` carries a label `K`, the number of qubit
//! positions where `i` and `j` differ. The global transpose on qubit `p`
//! swaps the `p` bits of the two labels for every element with `i_p != j_p`.
//! The K-way transpose applies that swap only to elements carrying label `K`
//! (or label 1 or 2 when `K = 2`), so that
//!
//! ```text
//! rho_G^{T_p} = sum_{K=2}^{N} rho_K^{T_p} - (N - 2) rho
//! ```

use crate::basis::{BasisIndex, Qubit};
use crate::density::DensityOperator;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Real;

/// Hamming distance between the bit strings of a matrix element's row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KLabel(pub usize);

pub fn k_label(i: BasisIndex, j: BasisIndex) -> Result<KLabel> {
    if i.len() != j.len() {
        return Err(Error::Dimension(format!("bit strings of length {} and {}", i.len(), j.len())));
    }
    Ok(KLabel((i.value() ^ j.value()).count_ones() as usize))
}

/// Which elements a transpose touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Selection {
    All,
    /// Label exactly `K`, for `K > 2`.
    Exactly(usize),
    /// Labels 1 and 2.
    OneOrTwo,
}

impl Selection {
    #[inline]
    fn selects(self, label: usize) -> bool {
        match self {
            Selection::All => true,
            Selection::Exactly(k) => label == k,
            Selection::OneOrTwo => label == 1 || label == 2,
        }
    }
}

fn selective_transpose<T: Real>(rho: &DensityOperator<T>, p: Qubit, sel: Selection) -> DensityOperator<T> {
    let n = rho.n_qubits();
    let mask = p.mask(n);
    let src = rho.matrix();
    let mut out = src.clone();
    let dim = rho.dim();
    for i in 0..dim {
        for j in 0..dim {
            let diff = i ^ j;
            if diff & mask != 0 && sel.selects(diff.count_ones() as usize) {
                out[(i, j)] = src[(i ^ mask, j ^ mask)];
            }
        }
    }
    DensityOperator::from_parts(n, out)
}

/// Global partial transpose of `rho` on qubit `p`.
pub fn global_pt<T: Real>(rho: &DensityOperator<T>, p: Qubit) -> Result<DensityOperator<T>> {
    p.check(rho.n_qubits())?;
    Ok(selective_transpose(rho, p, Selection::All))
}

/// K-way partial transpose of `rho` on qubit `p`, `2 <= K <= n`.
///
/// `K = 2` also transposes the label-1 elements; this is what makes the sum
/// over `K` reproduce the global transpose.
pub fn kway_pt<T: Real>(rho: &DensityOperator<T>, p: Qubit, k: usize) -> Result<DensityOperator<T>> {
    let n = rho.n_qubits();
    p.check(n)?;
    if k < 2 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let sel = if k == 2 { Selection::OneOrTwo } else { Selection::Exactly(k) };
    Ok(selective_transpose(rho, p, sel))
}

/// Max elementwise `|rho_G^{T_p} - (sum_K rho_K^{T_p} - (N-2) rho)|`.
pub fn decomposition_residual<T: Real>(rho: &DensityOperator<T>, p: Qubit) -> Result<T> {
    let n = rho.n_qubits();
    p.check(n)?;
    if n < 2 {
        return Err(Error::WrongQubitCount { expected: ">= 2".into(), actual: n });
    }
    let global = global_pt(rho, p)?;
    let mut sum: CMatrix<T> = rho.matrix().scale(-T::lit((n - 2) as f64));
    for k in 2..=n {
        sum = sum.add_scaled(kway_pt(rho, p, k)?.matrix(), T::one())?;
    }
    Ok(global.matrix().max_abs_diff(&sum))
}
