use thiserror::Error;

/// Errors reported by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid window: lower bound {lo} is not below upper bound {hi}")]
    InvalidWindow { lo: String, hi: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not a square-free integer >= 2")]
    InvalidField(u64),

    #[error("cannot mix elements of Q(sqrt({0})) and Q(sqrt({1}))")]
    FieldMismatch(u32, u32),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("search budget exhausted after {tried} candidates")]
    SearchExhausted { tried: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
