use thiserror::Error;

/// Error type shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("data length {got} does not match the expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },
    #[error("dimension arithmetic overflowed 64-bit range while computing {context}")]
    Overflow { context: &'static str },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("angle is undefined for a zero-norm operand")]
    ZeroNorm,
    #[error("sensing matrix column {index} is identically zero")]
    ZeroColumn { index: usize },
    #[error("{cols} columns exceed the exhaustive spark search bound of {limit}")]
    SparkCapacity { cols: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
