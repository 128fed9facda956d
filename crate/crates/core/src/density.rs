//! Density operators of N-qubit registers.

use crate::basis::{BasisIndex, Qubit};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{czero, Real, C};
use crate::state::PureState;

/// Hermitian, unit-trace `2^n x 2^n` operator. Partial transposes of a
/// density operator are represented by this type as well; positivity is not
/// required.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator<T: Real> {
    n_qubits: usize,
    matrix: CMatrix<T>,
}

impl<T: Real> DensityOperator<T> {
    /// `|psi><psi|`.
    pub fn from_state(state: &PureState<T>) -> Self {
        let a = state.amplitudes();
        let dim = a.len();
        let mut data = Vec::with_capacity(dim * dim);
        for &ai in a {
            data.extend(a.iter().map(|aj| ai * aj.conj()));
        }
        Self { n_qubits: state.n_qubits(), matrix: CMatrix::from_row_major(dim, data).expect("dim*dim entries") }
    }

    /// Accepts any Hermitian unit-trace matrix of dimension `2^n`.
    pub fn from_matrix(matrix: CMatrix<T>) -> Result<Self> {
        let dim = matrix.dim();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidDensity(format!("dimension {dim} is not 2^n with n >= 1")));
        }
        let herm = matrix.hermiticity_defect();
        if !(herm <= T::validation_tol()) {
            return Err(Error::NotHermitian(herm.to_f64_lossy()));
        }
        let tr = matrix.trace();
        if !((tr - C::new(T::one(), T::zero())).norm() <= T::validation_tol()) {
            return Err(Error::InvalidDensity(format!("trace {tr}")));
        }
        Ok(Self { n_qubits: dim.trailing_zeros() as usize, matrix })
    }

    pub(crate) fn from_parts(n_qubits: usize, matrix: CMatrix<T>) -> Self {
        Self { n_qubits, matrix }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C<T> {
        self.matrix[(i, j)]
    }

    /// `<i|rho|j>` addressed by bit strings.
    pub fn element(&self, i: &str, j: &str) -> Result<C<T>> {
        let i = BasisIndex::parse_with_len(i, self.n_qubits)?;
        let j = BasisIndex::parse_with_len(j, self.n_qubits)?;
        Ok(self.matrix[(i.value(), j.value())])
    }

    pub fn trace(&self) -> C<T> {
        self.matrix.trace()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.matrix.max_abs_diff(&other.matrix)
    }

    /// Reduced operator on `keep` (in the given order), tracing out every other qubit.
    pub fn partial_trace(&self, keep: &[Qubit]) -> Result<Self> {
        let n = self.n_qubits;
        for q in keep {
            q.check(n)?;
        }
        let mut sorted: Vec<_> = keep.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != keep.len() || keep.is_empty() {
            return Err(Error::Dimension("partial trace needs distinct, non-empty qubits".into()));
        }
        let traced: Vec<Qubit> = Qubit::all(n).filter(|q| !keep.contains(q)).collect();
        let m = keep.len();
        let embed = |sub: usize, qubits: &[Qubit]| -> usize {
            qubits.iter().enumerate().fold(0, |acc, (k, q)| {
                if (sub >> (qubits.len() - 1 - k)) & 1 == 1 {
                    acc | q.mask(n)
                } else {
                    acc
                }
            })
        };
        let kept_idx: Vec<usize> = (0..1 << m).map(|s| embed(s, keep)).collect();
        let env_idx: Vec<usize> = (0..1 << traced.len()).map(|s| embed(s, &traced)).collect();
        let mut out = CMatrix::zeros(1 << m);
        for (a, &ka) in kept_idx.iter().enumerate() {
            for (b, &kb) in kept_idx.iter().enumerate() {
                out[(a, b)] = env_idx.iter().fold(czero(), |acc, &e| acc + self.matrix[(ka | e, kb | e)]);
            }
        }
        Ok(Self { n_qubits: m, matrix: out })
    }
}

/// Free-function form of [`DensityOperator::from_state`].
pub fn density<T: Real>(state: &PureState<T>) -> DensityOperator<T> {
    DensityOperator::from_state(state)
}
