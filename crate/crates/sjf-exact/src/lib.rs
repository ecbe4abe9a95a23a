//! Exact arithmetic over the rationals.
//!
//! Provides normalized arbitrary-precision rationals with p-adic valuations,
//! dense rational matrices (products, inverses, determinants, the bracket
//! `S[x] = ᵗx S x`), integer lattice utilities (Hermite and Smith forms,
//! quotient enumeration), truncated formal power series and exact sums of
//! roots of unity.

pub mod cyclotomic;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod rational;
pub mod series;

pub use cyclotomic::RootSum;
pub use error::ExactError;
pub use matrix::{RatMatrix, SymMatrix};
pub use rational::Rational;
pub use series::FormalSeries;
