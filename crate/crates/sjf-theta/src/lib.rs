//! Jacobi theta series `Θ_{S,L,h}` and the decomposition
//! `f = Σ_h f_h Θ_{2S,Λ₂,h}` of a Siegel-Jacobi form into scalar
//! components indexed by `Λ₁/Λ₂`.

pub mod decomposition;
pub mod error;
pub mod lattice;
pub mod series;

pub use decomposition::{assemble, decompose, property_a, unit_components, Convention, ThetaComponents, ThetaSetup};
pub use error::ThetaError;
pub use lattice::{build_lattices, Lattice, LatticeData};
pub use series::{theta_characteristic, ThetaSpec};
