//! The Jacobi group `H ⋊ Sp_n(ℚ)` of degree `n` and index size `l`.
//!
//! Elements are written `(λ, μ, κ)g` with `λ, μ ∈ M_{l,n}(ℚ)`,
//! `κ ∈ Sym_l(ℚ)` and `g ∈ Sp_n(ℚ)`. The crate provides the exact group
//! law, the embedding into `Sp_{l+n}`, the action on
//! `ℋ_{n,l} = ℍ_n × M_{l,n}(ℂ)`, the factor of automorphy `J_{k,S}`, the
//! slash operator, parabolic restriction maps and the doubling maps.

pub mod doubling;
pub mod element;
pub mod error;
pub mod factor;
pub mod numeric;
pub mod parabolic;
pub mod point;
pub mod random;
pub mod tol;

pub use element::JacobiElement;
pub use error::GroupError;
pub use factor::{act, factor_j, j_det, slash, WeightIndex};
pub use num_complex::Complex64;
pub use point::JacobiPoint;
