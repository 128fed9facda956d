use thiserror::Error;

/// Errors raised by state construction, transposes, spectra and invariants.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count {n} outside [{min}, {max}]")]
    QubitCount { n: usize, min: usize, max: usize },

    #[error("bit string {0:?} has wrong length (expected {1})")]
    BitStringLength(String, usize),

    #[error("invalid bit string {0:?}")]
    BitString(String),

    #[error("duplicate basis index {0:?}")]
    DuplicateIndex(String),

    #[error("amplitude list is all zero")]
    ZeroState,

    #[error("amplitude vector length {len} is not 2^{n}")]
    AmplitudeLength { len: usize, n: usize },

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("non-finite amplitude")]
    NonFinite,

    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },

    #[error("unknown qubit label {0:?}")]
    QubitLabel(String),

    #[error("K = {k} outside [2, {n}]")]
    KOutOfRange { k: usize, n: usize },

    #[error("operation requires {expected} qubits, state has {actual}")]
    WrongQubitCount { expected: String, actual: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (max deviation {0:e})")]
    NotUnitary(f64),

    #[error("invalid density operator: {0}")]
    InvalidDensity(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("three-tangle forms disagree by {0:e}")]
    TangleFormMismatch(f64),

    #[error("state file: {0}")]
    StateFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
