//! Generalized spin-1/2 operators built from probability amplitudes between
//! arbitrary quantization directions.
//!
//! Every operator here is expressed in the basis of an intermediate direction
//! `b` and measures spin along a final direction `c`. In the limit `b == c`
//! the three components reduce to the Pauli matrices.
//!
//! The [`oracle`] module holds independent reference constructions and the
//! [`verify`] module runs the full property catalogue against them.

pub mod amplitude;
pub mod direction;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod operators;
pub mod oracle;
pub mod sampling;
pub mod spinors;
pub mod verify;

pub use amplitude::{amplitude, amplitude_table, compose_amplitudes, AmplitudeTable};
pub use direction::{normalize_direction, unit_vector, Direction, Sign};
pub use error::SpinError;
pub use frame::{frame_axes, Frame};
pub use linalg::{CMatrix2, Complex, Spinor2, Vec3};
pub use operators::{
    build_observable_matrix, literature_form, shift_x, shift_y, sigma_c, sigma_squared, sigma_x,
    sigma_y, Rvalues, ShiftMethod, SquareMethod,
};
pub use spinors::{eigvec_sigma_c, eigvec_sigma_x, eigvec_sigma_y, expectation, state};
pub use verify::{run_suite, PropertyResult, VerificationReport};
