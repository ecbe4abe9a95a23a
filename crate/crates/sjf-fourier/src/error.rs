use sjf_exact::ExactError;
use sjf_group::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FourierError {
    #[error("incompatible expansions: {0}")]
    Incompatible(String),
    #[error("invalid key: {0}")]
    InvalidKey(String),
    #[error("invalid metadata: {0}")]
    InvalidMeta(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
