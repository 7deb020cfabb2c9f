use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension parameter must satisfy n ≥ 2, got n = {0}")]
    DimensionTooSmall(i64),

    #[error("highest weight is not weakly decreasing: {0}")]
    NotDecreasing(String),

    #[error("highest weight mixes integer and half-odd-integer entries: {0}")]
    MixedParity(String),

    #[error("radial quantum number k starts at 1, got 0")]
    ZeroRadialIndex,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureDiverged(String),

    #[error("base point Z must be nonzero")]
    ZeroBasePoint,

    #[error("vector length mismatch: base point has {base} entries, tangent has {tangent}")]
    LengthMismatch { base: usize, tangent: usize },

    #[error("test function rejected: {0}")]
    RejectedTestFunction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
