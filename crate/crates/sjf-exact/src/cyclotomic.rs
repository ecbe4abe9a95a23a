//! Exact finite sums `Σ a_j e(φ_j)` of rational multiples of roots of unity.

use crate::rational::{frac, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A formal sum of `coefficient · e(phase)` with phases taken modulo 1.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootSum {
    terms: BTreeMap<Rational, Rational>,
}

impl RootSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c · e(phase)`.
    pub fn add_term(&mut self, phase: &Rational, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let key = frac(phase);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = frac(phase);
            self.terms.remove(&key);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Numerical value.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (ph, c) in &self.terms {
            let t = 2.0 * std::f64::consts::PI * crate::rational::to_f64(ph);
            let c = crate::rational::to_f64(c);
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// The exact value when it is rational.
    ///
    /// With `m` the common denominator of the phases the sum is a
    /// polynomial in `ζ_m`; it is reduced modulo the cyclotomic polynomial
    /// `Φ_m` and is rational exactly when the remainder is constant.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        let m = self.terms.keys().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let m = m.to_usize()?;
        let mut poly = vec![Rational::zero(); m];
        for (ph, c) in &self.terms {
            let j = (ph * Rational::from_integer(BigInt::from(m))).to_integer().to_usize()?;
            poly[j] += c;
        }
        let phi = cyclotomic_poly(m);
        let rem = poly_rem(poly, &phi);
        if rem.iter().skip(1).all(|c| c.is_zero()) {
            Some(rem.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_poly(m: usize) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); m + 1];
    p[0] = -Rational::one();
    p[m] = Rational::one();
    for d in 1..m {
        if m % d == 0 {
            p = poly_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn poly_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &b[db];
        for j in 0..=db {
            let v = &c * &b[j];
            r[i + j] -= v;
        }
        q[i] = c;
    }
    q
}

fn poly_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    while a.len() > db {
        let top = a.len() - 1;
        let c = &a[top] / &b[db];
        if !c.is_zero() {
            for j in 0..=db {
                let v = &c * &b[j];
                a[top - db + j] -= v;
            }
        }
        a.pop();
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![int(-1), int(1)]);
        assert_eq!(cyclotomic_poly(4), vec![int(1), int(0), int(1)]);
        assert_eq!(cyclotomic_poly(6), vec![int(1), int(-1), int(1)]);
    }

    #[test]
    fn full_character_sums_vanish() {
        let mut s = RootSum::new();
        for j in 0..5 {
            s.add_term(&rat(j, 5), &int(1));
        }
        assert_eq!(s.to_rational(), Some(int(0)));
        let mut t = RootSum::new();
        t.add_term(&rat(1, 3), &int(1));
        t.add_term(&rat(2, 3), &int(1));
        assert_eq!(t.to_rational(), Some(int(-1)));
        let mut u = RootSum::new();
        u.add_term(&rat(1, 4), &int(1));
        assert_eq!(u.to_rational(), None);
        let (re, im) = u.to_complex();
        assert!(re.abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
    }
}
