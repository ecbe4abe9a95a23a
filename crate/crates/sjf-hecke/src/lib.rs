//! Hecke operators for Siegel-Jacobi forms: explicit double-coset
//! representatives with canonical coset keys, closure checks, the Satake
//! map, and application to evaluators and degree-one expansions.

pub mod apply;
pub mod canonical;
pub mod character;
pub mod cosets;
pub mod error;
pub mod glcosets;
pub mod satake;

pub use apply::{eigenvalue_extract, eigenvalue_from_values, EigenEstimate, Evaluator, HeckeOperator};
pub use canonical::CosetKeyer;
pub use character::CharacterModN;
pub use cosets::{bad_closure_check, diag_element, full_coset_reps, jacobi_coset_reps, ClosureReport, CosetSet, CosetSource};
pub use error::HeckeError;
pub use glcosets::gl_coset_reps;
pub use satake::{satake_omega, satake_omega_double_coset, SatakeData, SatakePolynomial};
