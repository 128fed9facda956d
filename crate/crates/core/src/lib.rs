//! Negativity fonts, K-way partial transposes, global and K-way negativities,
//! and the three- and four-tangle of N-qubit pure states.
//!
//! All numerics are generic over a [`Real`] scalar (`f32` or `f64`). The
//! aliases at the crate root fix the scalar to `f64`, which is what the
//! tolerances in the test suites are calibrated for.
//!
//! ```
//! use tangle_core::{State, three_tangle};
//!
//! let ghz = State::ghz(3).unwrap();
//! assert!((three_tangle(&ghz).unwrap() - 1.0).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x <= tol)` also rejects NaN.

pub mod basis;
pub mod density;
pub mod eigen;
pub mod error;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod spectra;
pub mod state;
pub mod transpose;

pub use basis::{BasisIndex, Qubit};
pub use density::{density, DensityOperator};
pub use error::{Error, Result};
pub use invariants::{
    ckw_residual, covariance_check_3, covariance_check_4, four_fonts, four_invariant, four_tangle, lu_invariance_sweep,
    three_fonts, three_tangle, three_tangle_forms, CovarianceReport, FontDeterminants3, FontDeterminants4, Prefactor,
    ThreeTangleForms,
};
pub use io::StateFile;
pub use matrix::CMatrix;
pub use random::{random_local_unitary, random_product_state, random_state};
pub use scalar::Real;
pub use spectra::{
    concurrence_2q, enumerate_fonts, font_negativity_2q, global_negativity, hermitian_eigenvalues, kway_negativity,
    trace_norm, Font, FontLocation, Spectrum,
};
pub use state::{apply_local_unitary, param_unitary, LocalUnitary, Mat2, PureState, DEFAULT_MAX_QUBITS};
pub use transpose::{decomposition_residual, global_pt, k_label, kway_pt, KLabel};

pub use num_complex::{Complex32, Complex64};

/// Double-precision pure state.
pub type State = PureState<f64>;
/// Double-precision density operator.
pub type Density = DensityOperator<f64>;
/// Double-precision local unitary.
pub type Unitary = LocalUnitary<f64>;
/// Double-precision dense complex matrix.
pub type Matrix = CMatrix<f64>;
pub type Fonts3 = FontDeterminants3<f64>;
pub type Fonts4 = FontDeterminants4<f64>;

/// Single-precision pure state.
pub type State32 = PureState<f32>;
