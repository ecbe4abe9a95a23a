//! Ingredients of the standard L-function of a Jacobi eigenform: local
//! Euler factors from Satake parameters, the Siegel-series normalizers,
//! twisted Euler products, complex Gamma factors and the reproducing-kernel
//! constant, pole sets of Siegel Eisenstein series, transcendence exponents
//! with their admissibility conditions, the local maximality predicate and
//! the matrix Gaussian integral.

pub mod dirichlet;
pub mod error;
pub mod euler;
pub mod exponents;
pub mod gamma;
pub mod gauss;
pub mod mplus;
pub mod poles;

pub use dirichlet::{dirichlet_l, dirichlet_l_c, hurwitz_zeta, lambda_norm};
pub use error::LfError;
pub use euler::{
    euler_factor_bad, euler_factor_good, euler_factor_good_exact, frak_l_factor, g_p_ratio, hecke_eigenvalues_from_satake, is_regular,
    satake_solve_and_predict, siegel_series_regular, twisted_l_assemble, EulerProduct, LocalFactor, Poly, RationalFunction, SatakePrediction,
};
pub use exponents::{
    admissible_exponents, eis_exponents, exponents, form_hypotheses, mu_violations, sigma_violations, ArithmeticFlags, EisExponents, Exponents, Violation,
};
pub use gamma::{g_kn, gamma, gamma_case, gamma_n, kernel_constant};
pub use gauss::gauss_integral;
pub use mplus::m_plus_check;
pub use poles::{pole_sets, PoleSets};
pub use sjf_hecke::{CharacterModN, SatakeData};
