//! Numeric degree-one Jacobi Eisenstein series of Siegel type by coset
//! summation, the theta factorization of its summands, and an end-to-end
//! check of the Euler factor through Hecke eigenvalues.

pub mod cosets;
pub mod error;
pub mod klingen;
pub mod reduce;
pub mod series;
pub mod split;
pub mod theta;
pub mod verify;

pub use cosets::{complete, siegel_cosets_deg1, CosetRep};
pub use error::EisError;
pub use klingen::{klingen_cosets_deg1, KlingenSeries};
pub use reduce::{reduce_point, reduce_tau, reduced_hecke_at, reduced_value};
pub use series::{eval_e, Bounds, EisValue, EisensteinSeries, EisensteinSpec, ThetaMethod};
pub use split::{in_theta_group, summand_theta_split, theta_character, ThetaSplit};
pub use theta::{jacobi_theta, sl2_word, theta_null, theta_vector, Generator, IndexF64, WeilData};
pub use verify::{default_points, euler_check, euler_rung, hecke_euler_verify, EulerReport, EulerRung, VerifyOptions};
