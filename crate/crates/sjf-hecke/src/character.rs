//! Dirichlet characters modulo `N` stored as exact phase tables.

use crate::error::HeckeError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use sjf_exact::rational::{frac, Rational};
use sjf_group::Complex64;
use std::collections::BTreeMap;

/// `ψ(a) = e(phase[a mod N])` for `gcd(a, N) = 1` and `0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterModN {
    modulus: u64,
    phases: BTreeMap<u64, Rational>,
}

fn units(n: u64) -> Vec<u64> {
    (0..n.max(1)).filter(|a| a.gcd(&n) == 1 || n == 1).collect()
}

impl CharacterModN {
    /// Validates that the table covers `(ℤ/N)^×` and is multiplicative.
    pub fn from_phases(modulus: u64, phases: BTreeMap<u64, Rational>) -> Result<Self, HeckeError> {
        if modulus == 0 {
            return Err(HeckeError::InvalidCharacter("modulus must be positive".into()));
        }
        let us = units(modulus);
        if phases.len() != us.len() || us.iter().any(|u| !phases.contains_key(u)) {
            return Err(HeckeError::InvalidCharacter("table must cover exactly the units".into()));
        }
        let phases: BTreeMap<u64, Rational> = phases.into_iter().map(|(a, p)| (a, frac(&p))).collect();
        for &a in &us {
            for &b in &us {
                let ab = (a * b) % modulus.max(1);
                let ab = if modulus == 1 { 0 } else { ab };
                if frac(&(&phases[&a] + &phases[&b])) != phases[&ab] {
                    return Err(HeckeError::InvalidCharacter(format!("not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(CharacterModN { modulus, phases })
    }

    pub fn trivial(modulus: u64) -> Self {
        let phases = units(modulus).into_iter().map(|u| (if modulus == 1 { 0 } else { u }, Rational::zero())).collect();
        CharacterModN { modulus, phases }
    }

    /// The Kronecker symbol `(D/·)` as a character modulo `|D|`.
    pub fn kronecker(d: i64) -> Result<Self, HeckeError> {
        let m = d.unsigned_abs();
        let mut phases = BTreeMap::new();
        for a in units(m) {
            let v = kronecker_symbol(d, a as i64);
            phases.insert(a, if v == -1 { Rational::new(1.into(), 2.into()) } else { Rational::zero() });
        }
        Self::from_phases(m, phases)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The phase of `ψ(a)`, or `None` when `gcd(a, N) > 1`.
    pub fn phase(&self, a: &BigInt) -> Option<Rational> {
        let n = BigInt::from(self.modulus);
        let r = a.mod_floor(&n).to_u64()?;
        if self.modulus == 1 {
            return Some(Rational::zero());
        }
        self.phases.get(&r).cloned()
    }

    pub fn value(&self, a: &BigInt) -> Complex64 {
        match self.phase(a) {
            Some(p) => phase_to_complex(&p),
            None => Complex64::zero(),
        }
    }

    /// `ψ(−1) ∈ {±1}`.
    pub fn sign(&self) -> i64 {
        let p = self.phase(&BigInt::from(-1)).unwrap_or_else(Rational::zero);
        if p.is_zero() {
            1
        } else {
            -1
        }
    }

    /// The character `ψ^e`.
    pub fn power(&self, e: i64) -> Self {
        let phases = self.phases.iter().map(|(a, p)| (*a, frac(&(p * Rational::from_integer(BigInt::from(e)))))).collect();
        CharacterModN { modulus: self.modulus, phases }
    }

    pub fn is_trivial(&self) -> bool {
        self.phases.values().all(|p| p.is_zero())
    }

    /// Checks `ψ(−1) = (−1)^k`.
    pub fn check_parity(&self, k: i64) -> Result<(), HeckeError> {
        let want = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        if self.sign() != want {
            return Err(HeckeError::ParityMismatch { psi_minus_one: self.sign(), k });
        }
        Ok(())
    }

    /// The phase of `ψ_𝔠(x)⁻¹` for `x ∈ ℚ^×`: the product over the places
    /// dividing `N` of the local components, inverted.
    ///
    /// With `ψ` trivial on `ℚ^×` this equals
    /// `ψ_∞(x) · Π_{q ∤ N} ψ(q)^{v_q(x)}`; primes dividing `N` contribute
    /// nothing.
    pub fn phase_c_inverse(&self, x: &Rational) -> Rational {
        let mut phase = Rational::zero();
        if x.is_negative() {
            phase += self.phase(&BigInt::from(-1)).unwrap_or_else(Rational::zero);
        }
        let n = BigInt::from(self.modulus);
        let strip = |mut v: BigInt| {
            let mut g = v.gcd(&n);
            while !g.is_one() {
                v /= &g;
                g = v.gcd(&n);
            }
            v
        };
        let num = strip(x.numer().abs());
        let den = strip(x.denom().clone());
        phase += self.phase(&num).unwrap_or_else(Rational::zero);
        phase -= self.phase(&den).unwrap_or_else(Rational::zero);
        frac(&phase)
    }
}

pub(crate) fn phase_to_complex(p: &Rational) -> Complex64 {
    let t = 2.0 * std::f64::consts::PI * sjf_exact::rational::to_f64(p);
    Complex64::new(t.cos(), t.sin())
}

/// The Kronecker symbol `(d/n)` for `n ≥ 0`.
pub fn kronecker_symbol(d: i64, n: i64) -> i64 {
    if n == 0 {
        return if d.abs() == 1 { 1 } else { 0 };
    }
    let mut n = n;
    let mut result = 1;
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        let m = d.rem_euclid(8);
        if twos % 2 == 1 && (m == 3 || m == 5) {
            result = -result;
        }
    }
    result * jacobi_symbol(d, n)
}

/// The Jacobi symbol `(a/n)` for odd positive `n`.
fn jacobi_symbol(a: i64, n: i64) -> i64 {
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_minus_four_is_the_odd_character_mod_four() {
        let chi = CharacterModN::kronecker(-4).unwrap();
        assert_eq!(chi.sign(), -1);
        assert!((chi.value(&BigInt::from(3)) + 1.0).norm() < 1e-15);
        assert_eq!(chi.value(&BigInt::from(2)), Complex64::zero());
        assert!(chi.check_parity(1).is_ok());
        assert!(chi.check_parity(2).is_err());
    }

    #[test]
    fn non_multiplicative_table_is_rejected() {
        let mut t = BTreeMap::new();
        t.insert(1, Rational::new(1.into(), 2.into()));
        t.insert(2, Rational::zero());
        assert!(CharacterModN::from_phases(3, t).is_err());
    }

    #[test]
    fn inverse_local_product_ignores_primes_dividing_the_level() {
        let chi = CharacterModN::kronecker(-4).unwrap();
        let third = Rational::new(1.into(), 3.into());
        assert_eq!(chi.phase_c_inverse(&third), Rational::new(1.into(), 2.into()));
        assert_eq!(chi.phase_c_inverse(&Rational::new(1.into(), 2.into())), Rational::zero());
    }
}
