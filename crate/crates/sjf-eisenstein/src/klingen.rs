//! Klingen-type series `Σ_{γ ∈ P_{n,r}∩Γ\Γ} f(ω_r(γz)) J(γ, z)⁻¹` in degree
//! one. Only the two parabolics of `SL₂` exist here: `r = 0` gives the
//! Siegel-type series with `f = 1`, and `r = 1` is the whole group, where
//! the series is the inducing form itself.

use crate::cosets::{siegel_cosets_deg1, CosetRep};
use crate::error::EisError;
use crate::series::{EisensteinSeries, EisensteinSpec};
use num_complex::Complex64;
use sjf_hecke::Evaluator;
use sjf_group::JacobiPoint;

/// The coset representatives `P_{1,r}∩Γ₀(N) \ Γ₀(N)` up to the bound.
pub fn klingen_cosets_deg1(r: usize, level: u64, bound: u64) -> Result<Vec<CosetRep>, EisError> {
    match r {
        0 => Ok(siegel_cosets_deg1(level, bound)),
        1 => Ok(vec![CosetRep { a: 1, b: 0, c: 0, d: 1 }]),
        _ => Err(EisError::InvalidInput(format!("r = {r} exceeds the degree"))),
    }
}

pub enum KlingenSeries<'a> {
    Siegel(EisensteinSeries),
    Inducing(&'a Evaluator<'a>),
}

impl<'a> KlingenSeries<'a> {
    /// `r = 0`: the Siegel-type series of `spec`.
    pub fn siegel(spec: EisensteinSpec) -> Result<Self, EisError> {
        Ok(KlingenSeries::Siegel(EisensteinSeries::new(spec)?))
    }

    /// `r = 1`: the single coset, so the series is `f`.
    pub fn full(f: &'a Evaluator<'a>) -> Self {
        KlingenSeries::Inducing(f)
    }

    pub fn eval(&self, z: &JacobiPoint) -> Result<Complex64, EisError> {
        match self {
            KlingenSeries::Siegel(s) => Ok(s.eval(z)?.value),
            KlingenSeries::Inducing(f) => Ok(f(z)?),
        }
    }
}
