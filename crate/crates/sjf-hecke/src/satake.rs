//! The Satake map on upper-triangular representatives.

use crate::error::HeckeError;
use crate::glcosets::{diagonal_prime, gl_coset_reps, prime_power_exponents};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_group::Complex64;
use std::collections::BTreeMap;

/// Satake parameters `μ_1, …, μ_n` at a prime `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakeData {
    pub p: u64,
    pub mu: Vec<Complex64>,
}

impl SatakeData {
    pub fn new(p: u64, mu: Vec<Complex64>) -> Result<Self, HeckeError> {
        if mu.iter().any(|m| m.norm() == 0.0) {
            return Err(HeckeError::Unsupported("Satake parameters must be nonzero".into()));
        }
        Ok(SatakeData { p, mu })
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }
}

/// A polynomial in `t₁, …, t_n`: exponent vector ↦ coefficient.
pub type SatakePolynomial = BTreeMap<Vec<u32>, Rational>;

/// `ω₀(Ed) = Π_i (p^{−i} t_i)^{e_i}` for `d` with diagonal `p^{e_1}, …, p^{e_n}`.
pub fn satake_omega(d: &RatMatrix) -> Result<(Rational, Vec<u32>), HeckeError> {
    let n = d.rows();
    let Some(p) = diagonal_prime(d)? else {
        return Ok((Rational::one(), vec![0; n]));
    };
    let e = prime_power_exponents(d, p)?;
    let weight: u64 = e.iter().enumerate().map(|(i, &ei)| (i as u64 + 1) * ei as u64).sum();
    let coeff = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(p), weight as usize));
    Ok((coeff, e))
}

/// `ω(EξE) = Σ_{d ∈ E\EξE} ω₀(Ed)`.
pub fn satake_omega_double_coset(xi: &RatMatrix) -> Result<SatakePolynomial, HeckeError> {
    let mut out = SatakePolynomial::new();
    for d in gl_coset_reps(xi)? {
        let (c, e) = satake_omega(&d)?;
        let entry = out.entry(e).or_insert_with(Rational::zero);
        *entry += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_examples() {
        let (c, e) = satake_omega(&RatMatrix::from_i64(1, 1, &[3])).unwrap();
        assert_eq!((c, e), (Rational::new(1.into(), 3.into()), vec![1]));
        let (c, e) = satake_omega(&RatMatrix::identity(2)).unwrap();
        assert_eq!((c, e), (Rational::one(), vec![0, 0]));
        let (c, e) = satake_omega(&RatMatrix::from_i64(2, 2, &[1, 0, 0, 2])).unwrap();
        assert_eq!((c, e), (Rational::new(1.into(), 4.into()), vec![0, 1]));
        assert!(satake_omega(&RatMatrix::from_i64(1, 1, &[6])).is_err());
    }

    #[test]
    fn double_coset_image_is_symmetric_for_diag_one_p() {
        // p reps contribute p·p⁻²t₂ and one contributes p⁻¹t₁.
        for p in [2i64, 3, 5] {
            let w = satake_omega_double_coset(&RatMatrix::from_i64(2, 2, &[1, 0, 0, p])).unwrap();
            let inv_p = Rational::new(1.into(), p.into());
            assert_eq!(w.get(&vec![1, 0]), Some(&inv_p));
            assert_eq!(w.get(&vec![0, 1]), Some(&inv_p));
            assert_eq!(w.len(), 2);
        }
    }
}
