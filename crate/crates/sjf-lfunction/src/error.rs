use sjf_exact::ExactError;
use sjf_hecke::HeckeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LfError {
    #[error("Satake parameter {0} is zero")]
    ZeroSatake(usize),
    #[error("prime {p} divides the level {level}")]
    Ramified { p: u64, level: u64 },
    #[error("S is not regular at {0}; only the regular Siegel series is available")]
    NonRegular(u64),
    #[error("Gamma pole at {0}")]
    GammaPole(String),
    #[error("inadmissible input, violated {condition}: {message}")]
    Inadmissible { condition: String, message: String },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}
