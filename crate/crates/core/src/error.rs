use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("angle is not finite: theta={theta}, phi={phi}")]
    NonFiniteAngle { theta: f64, phi: f64 },

    #[error("amplitude tables do not share an intermediate direction")]
    MismatchedIntermediate,

    #[error("matrix is not Hermitian (deviation {deviation:e} exceeds {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("sample count must be at least 1")]
    ZeroSamples,
}
