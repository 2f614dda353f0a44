use thiserror::Error;

/// Errors raised by the counting engine and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 0..={max}", max = crate::MAX_DIM)]
    DimensionOutOfRange(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("point {raw:#x} does not fit in dimension {dim}")]
    PointOutOfRange { raw: u32, dim: usize },

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("pivot set is not contained in the poset")]
    NotASubset,

    #[error("poset has {size} points, more than the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
