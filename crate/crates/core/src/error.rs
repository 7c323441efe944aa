use thiserror::Error;

/// Errors produced by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric: entry ({row},{col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("negative Hadamard power of a matrix with a zero entry at ({row},{col})")]
    ZeroEntry { row: usize, col: usize },
    #[error("zero polynomial has no sign-change count")]
    ZeroPolynomial,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(
        "mu increment {index} is {increment}, which is not a non-negative integer; \
         non-integer increments need transcendental gamma values and are outside the exact path"
    )]
    NonIntegerIncrement { index: usize, increment: String },
    #[error("matrix of size {size} exceeds the exhaustive-minor guard {guard}; use the contiguous-minor total positivity test")]
    TooLarge { size: usize, guard: usize },
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal consistency check failed. This signals an arithmetic bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
