//! Action on `ℋ_{n,l}`, the factor of automorphy and the slash operator.

use crate::element::JacobiElement;
use crate::error::GroupError;
use crate::numeric::{e, inverse_checked, powi, symmetrize, to_complex, trace, CMatrix};
use crate::point::JacobiPoint;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use sjf_exact::rational::Rational;
use sjf_exact::SymMatrix;

/// Weight `k`, index `S`, and level data `𝔟 = bℤ`, `𝔠 = Nℤ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightIndex {
    pub k: i64,
    pub s: SymMatrix,
    pub level_b: Rational,
    pub level_c: u64,
}

impl WeightIndex {
    /// Validates positivity of `S`, `b > 0`, `N ≥ 1` and
    /// `tr(S y) ∈ bℤ` for integral symmetric `y`.
    pub fn new(k: i64, s: SymMatrix, level_b: Rational, level_c: u64) -> Result<Self, GroupError> {
        if !s.is_positive_definite() {
            return Err(GroupError::InvalidIndex("S is not positive definite".into()));
        }
        if !level_b.is_positive() {
            return Err(GroupError::InvalidIndex("b must be positive".into()));
        }
        if level_c == 0 {
            return Err(GroupError::InvalidIndex("N must be positive".into()));
        }
        let two = Rational::from_integer(2.into());
        for i in 0..s.dim() {
            for j in 0..=i {
                let v = if i == j { s.get(i, i).clone() } else { s.get(i, j) * &two };
                if !(v / &level_b).is_integer() {
                    return Err(GroupError::InvalidIndex(format!("tr(S y) ∉ bℤ for y = E_{i}{j} + E_{j}{i}")));
                }
            }
        }
        Ok(WeightIndex { k, s, level_b, level_c })
    }

    /// Level one with `𝔟 = ℤ`.
    pub fn level_one(k: i64, s: SymMatrix) -> Result<Self, GroupError> {
        Self::new(k, s, Rational::from_integer(1.into()), 1)
    }

    pub fn l(&self) -> usize {
        self.s.dim()
    }
}

struct Evaluated {
    cd: CMatrix,
    cd_inv: CMatrix,
    gtau: CMatrix,
}

fn evaluate(a: &JacobiElement, z: &JacobiPoint) -> Result<Evaluated, GroupError> {
    if a.n() != z.n() || a.l() != z.l() {
        return Err(GroupError::DimensionMismatch(format!(
            "element (n, l) = ({}, {}) at point ({}, {})",
            a.n(),
            a.l(),
            z.n(),
            z.l()
        )));
    }
    let (ga, gb, gc, gd) = a.blocks();
    let (ga, gb, gc, gd) = (to_complex(&ga), to_complex(&gb), to_complex(&gc), to_complex(&gd));
    let cd = &gc * z.tau() + &gd;
    let cd_inv = inverse_checked(&cd)?;
    let gtau = symmetrize(&((&ga * z.tau() + &gb) * &cd_inv));
    Ok(Evaluated { cd, cd_inv, gtau })
}

/// `j(g, τ) = det(cτ + d)`.
pub fn j_det(a: &JacobiElement, z: &JacobiPoint) -> Result<Complex64, GroupError> {
    Ok(evaluate(a, z)?.cd.determinant())
}

/// `(λ,μ,κ)g · (τ, w) = (gτ, w(cτ+d)⁻¹ + λ·gτ + μ)`.
pub fn act(a: &JacobiElement, z: &JacobiPoint) -> Result<JacobiPoint, GroupError> {
    let ev = evaluate(a, z)?;
    let lam = to_complex(a.lambda());
    let mu = to_complex(a.mu());
    let w = z.w() * &ev.cd_inv + &lam * &ev.gtau + mu;
    JacobiPoint::new(ev.gtau, w)
}

/// `J_{k,S}(a, z) = det(cτ+d)^k · e(−tr(Sκ) + tr(S[w](cτ+d)⁻¹c)
/// − 2tr(ᵗλSw(cτ+d)⁻¹) − tr(S[λ]·gτ))`.
pub fn factor_j(a: &JacobiElement, z: &JacobiPoint, wi: &WeightIndex) -> Result<Complex64, GroupError> {
    let jk = j_power(a, z, wi.k)?;
    Ok(jk * e(index_phase(a, z, wi)?))
}

fn j_power(a: &JacobiElement, z: &JacobiPoint, k: i64) -> Result<Complex64, GroupError> {
    Ok(powi(evaluate(a, z)?.cd.determinant(), k))
}

/// The exponent of the index part of `J_{k,S}`.
pub fn index_phase(a: &JacobiElement, z: &JacobiPoint, wi: &WeightIndex) -> Result<Complex64, GroupError> {
    if wi.l() != a.l() {
        return Err(GroupError::DimensionMismatch(format!("index size {} for l = {}", wi.l(), a.l())));
    }
    let ev = evaluate(a, z)?;
    let s = to_complex(wi.s.matrix());
    let (_, _, gc, _) = a.blocks();
    let gc = to_complex(&gc);
    let lam = to_complex(a.lambda());
    let w = z.w();
    let mut phase = Complex64::zero();
    if !a.kappa().is_zero() {
        phase -= trace(&(&s * to_complex(a.kappa())));
    }
    let swc = w.transpose() * &s * w;
    phase += trace(&(swc * &ev.cd_inv * gc));
    if !a.lambda().is_zero() {
        let lt_s = lam.transpose() * &s;
        phase -= Complex64::new(2.0, 0.0) * trace(&(&lt_s * w * &ev.cd_inv));
        phase -= trace(&(&lt_s * &lam * &ev.gtau));
    }
    Ok(phase)
}

/// `(f|a)(z) = J_{k,S}(a, z)⁻¹ f(az)`.
pub fn slash<F>(f: F, a: JacobiElement, wi: WeightIndex) -> impl Fn(&JacobiPoint) -> Result<Complex64, GroupError>
where
    F: Fn(&JacobiPoint) -> Result<Complex64, GroupError>,
{
    move |z: &JacobiPoint| {
        let az = act(&a, z)?;
        Ok(f(&az)? / factor_j(&a, z, &wi)?)
    }
}

/// `J_{k,S}(a, z)⁻¹ f(az)` for a single evaluation.
pub fn slash_at(
    f: &dyn Fn(&JacobiPoint) -> Result<Complex64, GroupError>,
    a: &JacobiElement,
    wi: &WeightIndex,
    z: &JacobiPoint,
) -> Result<Complex64, GroupError> {
    let az = act(a, z)?;
    Ok(f(&az)? / factor_j(a, z, wi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sjf_exact::RatMatrix;

    fn wi(k: i64) -> WeightIndex {
        WeightIndex::level_one(k, SymMatrix::from_i64(1, &[1]).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        for k in [1, 2, 3, 4, 7] {
            let s = JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[0, -1, 1, 0]), 1).unwrap();
            let z = JacobiPoint::deg1(Complex64::i(), &[Complex64::zero()]).unwrap();
            let jv = factor_j(&s, &z, &wi(k)).unwrap();
            assert!((jv - Complex64::i().powi(k as i32)).norm() < 1e-14);
        }
        let t = JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[1, 1, 0, 1]), 1).unwrap();
        let z = JacobiPoint::deg1(Complex64::i(), &[Complex64::new(0.5, 0.0)]).unwrap();
        let tz = act(&t, &z).unwrap();
        assert!((tz.tau()[(0, 0)] - Complex64::new(1.0, 1.0)).norm() < 1e-15);
        assert!((tz.w()[(0, 0)] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        let kap = JacobiElement::heisenberg(RatMatrix::zeros(1, 1), RatMatrix::zeros(1, 1), RatMatrix::from_i64(1, 1, &[1]))
            .unwrap()
            .compose(&JacobiElement::identity(1, 1))
            .unwrap();
        let kap = JacobiElement::heisenberg(
            RatMatrix::zeros(1, 1),
            RatMatrix::zeros(1, 1),
            RatMatrix::from_rows(vec![vec![sjf_exact::rational::rat(1, 8)]]),
        )
        .unwrap()
        .compose(&kap)
        .unwrap();
        let jv = factor_j(&kap, &z, &wi(3)).unwrap();
        assert!((jv - e(Complex64::new(-9.0 / 8.0, 0.0))).norm() < 1e-14);
    }

    #[test]
    fn index_validation() {
        let s = SymMatrix::from_i64(2, &[1, 1, 1, 1]).unwrap();
        assert!(WeightIndex::level_one(4, s).is_err());
        let s = SymMatrix::new(RatMatrix::from_rows(vec![vec![sjf_exact::rational::rat(1, 2)]])).unwrap();
        assert!(WeightIndex::level_one(4, s.clone()).is_err());
        assert!(WeightIndex::new(4, s, sjf_exact::rational::rat(1, 2), 1).is_ok());
    }
}
