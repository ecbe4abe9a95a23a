use sjf_exact::ExactError;
use sjf_group::GroupError;
use sjf_hecke::HeckeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EisError {
    #[error("convergence needs Re(2s) > {bound}, got Re(2s) = {value}")]
    Convergence { bound: f64, value: f64 },
    #[error("character parity χ(−1) = {chi_minus_one} does not match (−1)^k for k = {k}")]
    Parity { chi_minus_one: i64, k: i64 },
    #[error("theta vanishes at the probe point (|Θ₀(τ)| = {0:e})")]
    ThetaZero(f64),
    #[error("element is not in the theta group: {0}")]
    NotThetaGroup(String),
    #[error("eigenfunction residual {residual:e} at T({m}) exceeds {limit:e}")]
    NotEigen { m: u64, residual: f64, limit: f64 },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}
