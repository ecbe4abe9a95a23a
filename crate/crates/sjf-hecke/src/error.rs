use sjf_exact::ExactError;
use sjf_fourier::FourierError;
use sjf_group::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeckeError {
    #[error("ξ must be a square integral matrix with nonzero determinant")]
    InvalidXi,
    #[error("diagonal entry {0} of the representative is not a power of a single prime")]
    NotPrimePower(String),
    #[error("character parity ψ(−1) = {psi_minus_one} does not match (−1)^k for k = {k}")]
    ParityMismatch { psi_minus_one: i64, k: i64 },
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("coefficient at key {0} is not rational")]
    NotRational(String),
    #[error("f vanishes at every probe point")]
    VanishingProbe,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
}
