use sjf_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("symplectic part fails ᵗg J g = J")]
    NotSymplectic,
    #[error("κ is not symmetric")]
    KappaNotSymmetric,
    #[error("element is not in the parabolic P^{{n,{r}}}: {reason}")]
    NotInParabolic { r: usize, reason: String },
    #[error("cτ + d is numerically singular (condition estimate {0:e})")]
    NearSingular(f64),
    #[error("Im τ is not positive definite (minimal eigenvalue {0:e})")]
    NotPositiveDefinite(f64),
    #[error("invalid weight/index data: {0}")]
    InvalidIndex(String),
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
