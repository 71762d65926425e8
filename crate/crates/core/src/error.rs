use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("polynomial is not divisible by the given divisor")]
    NonDivisible,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("inconsistent vector length: expected {expected}, got {got}")]
    InconsistentLength { expected: usize, got: usize },
    #[error("mismatched group parameters")]
    Mismatched,
    #[error("element leaves the subring: T-exponent sum {sum} is not divisible by {p}")]
    SubringViolation { sum: i64, p: u32 },
    #[error("charge universe is not closed under the order-p shift")]
    UniverseNotClosed,
}

pub type Result<T> = std::result::Result<T, CoreError>;
