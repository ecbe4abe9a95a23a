//! The per-summand factorization of the Eisenstein series into a
//! weight `k − l/2` summand times the weight-`l/2` slash of the theta series.

use crate::cosets::CosetRep;
use crate::error::EisError;
use crate::series::{EisensteinSeries, EisensteinSpec};
use crate::theta::{jacobi_theta, theta_null};
use num_bigint::BigInt;
use num_complex::Complex64;
use sjf_exact::RatMatrix;
use sjf_group::numeric::powi;
use sjf_group::{act, factor_j, JacobiElement, JacobiPoint, WeightIndex};
use sjf_hecke::CharacterModN;

/// Both sides of the factorization and the half-integral factor used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaSplit {
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// `h(γ, τ) = Θ₀(γτ)/Θ₀(τ)`.
    pub h: Complex64,
}

impl ThetaSplit {
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).norm() / self.lhs.norm().max(self.rhs.norm()).max(f64::MIN_POSITIVE)
    }
}

/// Membership in the theta group of level `N`: determinant one, `b` and
/// `c` even, `N | c`.
pub fn in_theta_group(g: &CosetRep, level: u64) -> bool {
    g.a * g.d - g.b * g.c == 1 && g.b % 2 == 0 && g.c % 2 == 0 && g.c % level.max(1) as i64 == 0
}

/// The quadratic character of `ℚ(√det 2S)` for an integral index `(m)`.
pub fn theta_character(m: i64) -> Result<CharacterModN, EisError> {
    let mut d0 = 2 * m;
    let mut p = 2;
    while p * p <= d0.abs() {
        while d0 % (p * p) == 0 {
            d0 /= p * p;
        }
        p += 1;
    }
    if d0 == 1 {
        return Ok(CharacterModN::trivial(1));
    }
    let disc = if d0.rem_euclid(4) == 1 { d0 } else { 4 * d0 };
    Ok(CharacterModN::kronecker(disc)?)
}

/// `lhs = χ(d) j^{−k} δ(γτ)^{s−k/2} e(−c S[w]/j) Θ_S(γz)` from the Eisenstein
/// summand; `rhs = φ(d) j^{−k} h δ(γτ)^{s−k/2} (Θ_S|_{S,1/2}γ)(z)` with
/// `j^{1/2} := h`, `φ = χψ_S`, and the slash
/// `h⁻¹ J_{0,S}(γ, z)⁻¹ Θ_S(γz)` computed through the group action.
pub fn summand_theta_split(gamma: &CosetRep, z: &JacobiPoint, spec: &EisensteinSpec) -> Result<ThetaSplit, EisError> {
    if spec.l() != 1 {
        return Err(EisError::Unsupported("the theta split is implemented for l = 1".into()));
    }
    if !in_theta_group(gamma, spec.level) {
        return Err(EisError::NotThetaGroup(format!("{:?} at level {}", gamma.matrix(), spec.level)));
    }
    let m = spec.index.matrix().get(0, 0);
    if !m.is_integer() {
        return Err(EisError::Unsupported("the theta character needs an integral index".into()));
    }
    let m: i64 = m.to_integer().try_into().map_err(|_| EisError::InvalidInput("index too large".into()))?;
    let tau = z.tau()[(0, 0)];
    let t0 = theta_null(tau);
    if t0.norm() < 1e-12 {
        return Err(EisError::ThetaZero(t0.norm()));
    }
    let mut one = spec.clone();
    one.bounds.b_cd = 1;
    let series = EisensteinSeries::new(one)?;
    let w: Vec<Complex64> = z.w().iter().cloned().collect();
    let lhs = series.summand(gamma, tau, &w);

    let l = spec.l();
    let g = JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[gamma.a, gamma.b, gamma.c, gamma.d]), l)?;
    let gz = act(&g, z)?;
    let gtau = gz.tau()[(0, 0)];
    let h = theta_null(gtau) / t0;
    let wi0 = WeightIndex::new(0, spec.index.clone(), sjf_exact::rational::one(), spec.level)?;
    let gw: Vec<Complex64> = gz.w().iter().cloned().collect();
    let index = crate::theta::IndexF64::new(&spec.index.matrix().to_f64_vec()).expect("validated index");
    let slashed = jacobi_theta(&index, gtau, &gw) / (h * factor_j(&g, z, &wi0)?);
    let d = BigInt::from(gamma.d);
    let phi = spec.chi.value(&d) * theta_character(m)?.value(&d);
    let j = tau * gamma.c as f64 + gamma.d as f64;
    let shift = spec.s - Complex64::new(spec.k as f64 / 2.0, 0.0);
    let delta = (shift * gtau.im.ln()).exp();
    let rhs = phi * powi(j, -spec.k) * h * delta * slashed;
    Ok(ThetaSplit { lhs, rhs, h })
}
