//! N-qubit pure states and single-qubit unitaries.

use crate::basis::{BasisIndex, Qubit};
use crate::error::{Error, Result};
use crate::scalar::{c, cone, creal, czero, Real, C};

/// Default upper bound on the number of qubits accepted by constructors.
pub const DEFAULT_MAX_QUBITS: usize = 10;

/// 2x2 complex matrix, row-major.
pub type Mat2<T> = [[C<T>; 2]; 2];

/// Normalized N-qubit pure state. Position `b` of the amplitude vector holds
/// the coefficient of the basis vector whose bit string is `b` in binary,
/// qubit 1 most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T: Real> {
    n_qubits: usize,
    amplitudes: Vec<C<T>>,
    norm_correction: T,
}

impl<T: Real> PureState<T> {
    /// Builds a state from sparse `(bit string, amplitude)` entries and
    /// normalizes it. Unlisted amplitudes are zero.
    pub fn from_entries<S: AsRef<str>>(n: usize, entries: &[(S, C<T>)]) -> Result<Self> {
        Self::from_entries_with_limit(n, entries, DEFAULT_MAX_QUBITS)
    }

    pub fn from_entries_with_limit<S: AsRef<str>>(n: usize, entries: &[(S, C<T>)], max_qubits: usize) -> Result<Self> {
        check_qubit_count(n, max_qubits)?;
        let mut amplitudes = vec![czero(); 1 << n];
        let mut seen = vec![false; 1 << n];
        for (label, amp) in entries {
            let label = label.as_ref();
            let idx = BasisIndex::parse_with_len(label, n)?;
            if std::mem::replace(&mut seen[idx.value()], true) {
                return Err(Error::DuplicateIndex(label.to_string()));
            }
            amplitudes[idx.value()] = *amp;
        }
        Self::normalize(n, amplitudes)
    }

    /// Wraps a full amplitude vector, dividing by its norm.
    pub fn normalize(n: usize, amplitudes: Vec<C<T>>) -> Result<Self> {
        if n == 0 || n >= usize::BITS as usize || amplitudes.len() != 1 << n {
            return Err(Error::AmplitudeLength { len: amplitudes.len(), n });
        }
        if amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sqr: T = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr <= T::min_positive_value() {
            return Err(Error::ZeroState);
        }
        let norm = norm_sqr.sqrt();
        let amplitudes = amplitudes.into_iter().map(|a| a / norm).collect();
        Ok(Self { n_qubits: n, amplitudes, norm_correction: (norm - T::one()).abs() })
    }

    /// Wraps an amplitude vector that must already have unit norm.
    pub fn from_amplitudes(n: usize, amplitudes: Vec<C<T>>) -> Result<Self> {
        if n == 0 || n >= usize::BITS as usize || amplitudes.len() != 1 << n {
            return Err(Error::AmplitudeLength { len: amplitudes.len(), n });
        }
        let norm_sqr: T = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || (norm_sqr - T::one()).abs() > T::validation_tol() {
            return Err(Error::NotNormalized(norm_sqr.to_f64_lossy()));
        }
        Ok(Self { n_qubits: n, amplitudes, norm_correction: T::zero() })
    }

    /// `(|0...0> + |1...1>)/sqrt(2)`.
    pub fn ghz(n: usize) -> Result<Self> {
        check_fixture_n(n)?;
        let h = T::FRAC_1_SQRT_2();
        let mut amps = vec![czero(); 1 << n];
        amps[0] = creal(h);
        amps[(1 << n) - 1] = creal(h);
        Ok(Self { n_qubits: n, amplitudes: amps, norm_correction: T::zero() })
    }

    /// Equal superposition of the `n` weight-one bit strings.
    pub fn w(n: usize) -> Result<Self> {
        check_fixture_n(n)?;
        let a = T::one() / T::lit(n as f64).sqrt();
        let mut amps = vec![czero(); 1 << n];
        for k in 0..n {
            amps[1 << k] = creal(a);
        }
        Ok(Self { n_qubits: n, amplitudes: amps, norm_correction: T::zero() })
    }

    /// `(|0000> + |0011> + |1100> - |1111>)/2`.
    pub fn cluster4() -> Self {
        let h = T::lit(0.5);
        let mut amps = vec![czero(); 16];
        amps[0b0000] = creal(h);
        amps[0b0011] = creal(h);
        amps[0b1100] = creal(h);
        amps[0b1111] = creal(-h);
        Self { n_qubits: 4, amplitudes: amps, norm_correction: T::zero() }
    }

    /// Tensor product of single-qubit states `(a0, a1)`, qubit 1 first.
    /// Each factor is normalized.
    pub fn product(factors: &[(C<T>, C<T>)]) -> Result<Self> {
        check_qubit_count(factors.len(), DEFAULT_MAX_QUBITS)?;
        let mut amps = vec![cone::<T>()];
        for &(a0, a1) in factors {
            let norm = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
            if !(norm > T::zero()) {
                return Err(Error::ZeroState);
            }
            let (a0, a1) = (a0 / norm, a1 / norm);
            amps = amps.iter().flat_map(|&x| [x * a0, x * a1]).collect();
        }
        Self::normalize(factors.len(), amps)
    }

    /// Tensor product `self ⊗ other`; `self` supplies the leading qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n_qubits + other.n_qubits;
        check_qubit_count(n, usize::BITS as usize - 1)?;
        let amps = self.amplitudes.iter().flat_map(|&x| other.amplitudes.iter().map(move |&y| x * y)).collect();
        Self::normalize(n, amps)
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    #[inline]
    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amplitudes
    }

    /// `|norm - 1|` of the input before normalization (zero for exact inputs).
    pub fn norm_correction(&self) -> T {
        self.norm_correction
    }

    /// Whether construction changed the input norm by more than the validation tolerance.
    pub fn was_renormalized(&self) -> bool {
        self.norm_correction > T::validation_tol()
    }

    pub fn norm(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt()
    }

    #[inline]
    pub fn amp(&self, idx: usize) -> C<T> {
        self.amplitudes[idx]
    }

    /// Amplitude of the basis vector labelled by `bits`.
    pub fn amplitude(&self, bits: &str) -> Result<C<T>> {
        let idx = BasisIndex::parse_with_len(bits, self.n_qubits)?;
        Ok(self.amplitudes[idx.value()])
    }

    /// Applies `lu` to its target qubit.
    pub fn apply(&self, lu: &LocalUnitary<T>) -> Result<Self> {
        lu.target.check(self.n_qubits)?;
        let mask = lu.target.mask(self.n_qubits);
        let m = &lu.matrix;
        let mut out = self.amplitudes.clone();
        for i0 in (0..self.dim()).filter(|i| i & mask == 0) {
            let i1 = i0 | mask;
            let (a0, a1) = (self.amplitudes[i0], self.amplitudes[i1]);
            out[i0] = m[0][0] * a0 + m[0][1] * a1;
            out[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
        Ok(Self { n_qubits: self.n_qubits, amplitudes: out, norm_correction: T::zero() })
    }

    /// Applies one unitary per entry of `lus`, in order.
    pub fn apply_all(&self, lus: &[LocalUnitary<T>]) -> Result<Self> {
        lus.iter().try_fold(self.clone(), |s, lu| s.apply(lu))
    }

    pub(crate) fn require_qubits(&self, n: usize) -> Result<()> {
        if self.n_qubits != n {
            return Err(Error::WrongQubitCount { expected: n.to_string(), actual: self.n_qubits });
        }
        Ok(())
    }
}

/// Free-function form of [`PureState::apply`].
pub fn apply_local_unitary<T: Real>(state: &PureState<T>, lu: &LocalUnitary<T>) -> Result<PureState<T>> {
    state.apply(lu)
}

fn check_qubit_count(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::QubitCount { n, min: 1, max });
    }
    Ok(())
}

fn check_fixture_n(n: usize) -> Result<()> {
    if !(2..=DEFAULT_MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCount { n, min: 2, max: DEFAULT_MAX_QUBITS });
    }
    Ok(())
}

/// Single-qubit unitary bound to a target qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalUnitary<T: Real> {
    pub(crate) target: Qubit,
    pub(crate) matrix: Mat2<T>,
}

impl<T: Real> LocalUnitary<T> {
    /// Validates `U†U = I` elementwise within `100 * epsilon`.
    pub fn new(target: Qubit, matrix: Mat2<T>) -> Result<Self> {
        let dev = unitarity_defect(&matrix);
        if !(dev <= T::epsilon() * T::lit(100.0)) {
            return Err(Error::NotUnitary(dev.to_f64_lossy()));
        }
        Ok(Self { target, matrix })
    }

    pub fn identity(target: Qubit) -> Self {
        Self { target, matrix: [[cone(), czero()], [czero(), cone()]] }
    }

    /// The determinant-one family `{1, -x*; x, 1}/sqrt(1+|x|²)` on `target`.
    pub fn parametrized(target: Qubit, x: C<T>) -> Self {
        Self { target, matrix: param_unitary(x) }
    }

    pub fn target(&self) -> Qubit {
        self.target
    }

    pub fn matrix(&self) -> &Mat2<T> {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.matrix;
        Self { target: self.target, matrix: [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]] }
    }

    pub fn det(&self) -> C<T> {
        det2(&self.matrix)
    }
}

/// `{1, -x*; x, 1}/sqrt(1+|x|²)`: unitary with determinant one for every `x`.
pub fn param_unitary<T: Real>(x: C<T>) -> Mat2<T> {
    let s = T::one() / (T::one() + x.norm_sqr()).sqrt();
    [[c(s, T::zero()), -x.conj() * s], [x * s, c(s, T::zero())]]
}

pub(crate) fn det2<T: Real>(m: &Mat2<T>) -> C<T> {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Max elementwise deviation of `U†U` from the identity.
pub fn unitarity_defect<T: Real>(m: &Mat2<T>) -> T {
    let mut worst = T::zero();
    for i in 0..2 {
        for j in 0..2 {
            let acc = m.iter().fold(czero::<T>(), |acc, row| acc + row[i].conj() * row[j]);
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((acc - creal(target)).norm());
        }
    }
    worst
}
