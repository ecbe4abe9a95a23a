//! Truncated Fourier expansions
//! `f(τ, w) = Σ c(t, r) e(tr(tτ)) e(tr(ᵗr w))` of Siegel-Jacobi forms,
//! with exact rational keys and coefficients.

pub mod error;
pub mod expansion;
pub mod key;
pub mod weight;

pub use error::FourierError;
pub use expansion::{Evaluation, ExpansionMeta, FourierExpansion};
pub use key::{is_cusp_support, is_strict_support, FourierKey};
pub use weight::petersson_weight;
