use thiserror::Error;

/// Hard failures: malformed input, shape mismatches, exceeded guards.
///
/// Axiom violations found by validators are not errors; validators return
/// witness-carrying report types so that callers can distinguish "the
/// input does not satisfy the law" from "the input could not be read".
#[derive(Debug, Error)]
pub enum Error {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema: {0}")]
    Schema(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("base mismatch: {0}")]
    BaseMismatch(String),

    #[error("source category mismatch: {0}")]
    SourceMismatch(String),

    #[error("arity cap mismatch: expected {expected}, got {got}")]
    CapMismatch { expected: usize, got: usize },

    #[error("enumeration guard exceeded: search space of size {size} over guard {guard}")]
    GuardExceeded { size: u128, guard: u128 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported in this base: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("closure violation: {0}")]
    Closure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
