use thiserror::Error;

/// Failures of exact operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("infinite valuation: v_p(0)")]
    InfiniteValuation,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("reciprocal requires constant term 1")]
    ConstantTermNotOne,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
