use sjf_exact::ExactError;
use sjf_fourier::FourierError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThetaError {
    #[error("index is not positive definite")]
    NotPositiveDefinite,
    #[error("lattice basis is singular")]
    SingularLattice,
    #[error("Λ₂ is not contained in Λ₁")]
    NotContained,
    #[error("key violates the support inequality 4t ≥ ᵗr S⁻¹ r: t = {t}, r = {r}")]
    SupportViolation { t: String, r: String },
    #[error("(2S)⁻¹ r = {0} is not in Λ₁")]
    NotInLattice(String),
    #[error("coefficients disagree within one theta class at h = {h}, t₂ = {t2}")]
    Inconsistent { h: String, t2: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
}
