//! Canonical keys for right cosets `Γx` of the Jacobi congruence group
//! `Γ = {(λ, μ, κ)g : λ ∈ M(ℤ), μ ∈ M(𝔟⁻¹), κ ∈ Sym(𝔟⁻¹), g ∈ Γ₀(𝔟, N)}`,
//! where `Γ₀(𝔟, N)` has `a, d` integral, `b ∈ 𝔟⁻¹` and `c ∈ 𝔟N`.

use crate::error::HeckeError;
use crate::glcosets::{is_squarefree, prime_factors};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use sjf_exact::lattice::row_hnf;
use sjf_exact::rational::{modulo, Rational};
use sjf_exact::RatMatrix;
use sjf_group::element::{blocks, from_blocks, symplectic_inverse};
use sjf_group::{JacobiElement, WeightIndex};
use std::collections::HashMap;

/// Computes canonical keys of cosets `Γx`.
///
/// The symplectic class of `Γ₀(𝔟, N)g` is the Hermite form of the row
/// lattice of `δgδ⁻¹` (`δ = diag[b·1, 1]`) together with, for each prime
/// `q | N`, the row space modulo `q` of the lower half of the unimodular
/// factor. Each class gets a fixed representative `c₀`, namely the first
/// element seen with that class. `x` is moved to `γx = h·c₀` with `γ ∈ Γ`
/// and the Heisenberg part `h` is reduced modulo `Γ ∩ H`.
#[derive(Clone, Debug)]
pub struct CosetKeyer {
    n: usize,
    l: usize,
    b: Rational,
    level: u64,
    primes: Vec<u64>,
    registry: HashMap<Vec<u8>, RatMatrix>,
}

impl CosetKeyer {
    /// Requires a squarefree level.
    pub fn new(n: usize, l: usize, b: Rational, level: u64) -> Result<Self, HeckeError> {
        if level == 0 || !is_squarefree(level) {
            return Err(HeckeError::Unsupported(format!("coset keys need a squarefree level, got {level}")));
        }
        Ok(CosetKeyer { n, l, b, level, primes: prime_factors(level), registry: HashMap::new() })
    }

    pub fn for_index(n: usize, wi: &WeightIndex) -> Result<Self, HeckeError> {
        Self::new(n, wi.l(), wi.level_b.clone(), wi.level_c)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    fn conjugate(&self, g: &RatMatrix) -> RatMatrix {
        let (a, b, c, d) = blocks(g);
        let binv = Rational::one() / &self.b;
        from_blocks(&a, &b.scale(&self.b), &c.scale(&binv), &d)
    }

    /// Key of the class `Γ₀(𝔟, N)g`.
    pub fn symplectic_key(&self, g: &RatMatrix) -> Result<Vec<u8>, HeckeError> {
        let gc = self.conjugate(g);
        let den = gc.denominator();
        let m = gc.scale(&Rational::from_integer(den.clone()));
        let rows = m.to_integer_rows().expect("scaled to integers");
        let h = row_hnf(&rows)?;
        let hm = RatMatrix::from_rows(h.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect());
        let mut out = Vec::new();
        hm.scale(&(Rational::one() / Rational::from_integer(den))).encode(&mut out);
        if !self.primes.is_empty() {
            // U = M H⁻¹ is unimodular with Γ₀-equivariant lower half.
            let u = &m * &hm.inverse()?;
            let n = self.n;
            let lower: Vec<Vec<BigInt>> = (n..2 * n).map(|i| u.row(i).iter().map(|x| x.to_integer()).collect()).collect();
            for &q in &self.primes {
                let rref = rref_mod(&lower, q);
                out.extend_from_slice(&q.to_le_bytes());
                for row in rref {
                    for v in row {
                        out.extend_from_slice(&v.to_le_bytes());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Canonical key of `Γx`.
    pub fn key(&mut self, x: &JacobiElement) -> Result<Vec<u8>, HeckeError> {
        if x.n() != self.n || x.l() != self.l {
            return Err(HeckeError::Unsupported(format!("element of shape ({}, {}) for keys of shape ({}, {})", x.n(), x.l(), self.n, self.l)));
        }
        let mut out = self.symplectic_key(x.g())?;
        let c0 = self.registry.entry(out.clone()).or_insert_with(|| x.g().clone()).clone();
        let gamma = &c0 * &symplectic_inverse(x.g());
        let y = JacobiElement::symplectic(gamma, self.l)?.compose(x)?;
        debug_assert_eq!(y.g(), &c0);
        let (lam, mu, kappa) = self.reduce_heisenberg(y.lambda(), y.mu(), y.kappa());
        lam.encode(&mut out);
        mu.encode(&mut out);
        kappa.encode(&mut out);
        Ok(out)
    }

    /// Reduces `(λ, μ, κ)` modulo left multiplication by `Γ ∩ H`:
    /// `(λ₀, μ₀, κ₀)(λ, μ, κ) = (λ₀+λ, μ₀+μ, κ₀+κ+λ₀ᵗμ+μᵗλ₀)`.
    fn reduce_heisenberg(&self, lam: &RatMatrix, mu: &RatMatrix, kappa: &RatMatrix) -> (RatMatrix, RatMatrix, RatMatrix) {
        let shift = lam.map(|x| -x.floor());
        let lam_r = lam + &shift;
        let cross = &(&shift * &mu.transpose()) + &(mu * &shift.transpose());
        let kappa = kappa + &cross;
        let binv = Rational::one() / &self.b;
        let mu_r = mu.map(|x| modulo(x, &binv));
        let l = kappa.rows();
        let mut kr = RatMatrix::zeros(l, l);
        for i in 0..l {
            for j in i..l {
                let v = modulo(kappa.get(i, j), &binv);
                kr.set(i, j, v.clone());
                kr.set(j, i, v);
            }
        }
        (lam_r, mu_r, kr)
    }

    /// Membership in `Γ`.
    pub fn contains(&self, x: &JacobiElement) -> bool {
        let in_binv = |m: &RatMatrix| m.data().iter().all(|v| (v * &self.b).is_integer());
        let (a, b, c, d) = x.blocks();
        let cn = Rational::one() / (&self.b * Rational::from_integer(BigInt::from(self.level)));
        x.lambda().is_integral()
            && in_binv(x.mu())
            && in_binv(x.kappa())
            && a.is_integral()
            && d.is_integral()
            && in_binv(&b)
            && c.data().iter().all(|v| (v * &cn).is_integer())
    }
}

/// Reduced row echelon form modulo a prime.
fn rref_mod(rows: &[Vec<BigInt>], q: u64) -> Vec<Vec<u64>> {
    let qb = BigInt::from(q);
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x.mod_floor(&qb).to_u64().unwrap_or(0)).collect()).collect();
    let rows_n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pr = 0;
    for col in 0..cols {
        let Some(piv) = (pr..rows_n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(pr, piv);
        let inv = mod_inverse(a[pr][col], q);
        for v in a[pr].iter_mut() {
            *v = *v * inv % q;
        }
        for i in 0..rows_n {
            if i != pr && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + q * q - f * a[pr][j] % q) % q;
                }
            }
        }
        pr += 1;
        if pr == rows_n {
            break;
        }
    }
    a
}

fn mod_inverse(x: u64, q: u64) -> u64 {
    let e = BigInt::from(x).extended_gcd(&BigInt::from(q));
    e.x.mod_floor(&BigInt::from(q)).to_u64().unwrap_or(0)
}

/// `true` if `x` has the shape `(0, μ, 0)·[[ã, ãb], [0, a]]`, i.e. `λ = 0`,
/// `κ = 0` and `c = 0`.
pub fn is_upper_triangular_rep(x: &JacobiElement) -> bool {
    let (_, _, c, _) = x.blocks();
    x.lambda().is_zero() && x.kappa().is_zero() && c.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn sl2(a: i64, b: i64, c: i64, d: i64) -> RatMatrix {
        RatMatrix::from_i64(2, 2, &[a, b, c, d])
    }

    #[test]
    fn gamma_zero_cosets_of_sl2z_are_projective_line_classes() {
        let keyer = CosetKeyer::new(1, 1, Rational::one(), 3).unwrap();
        let reps = [sl2(1, 0, 0, 1), sl2(0, -1, 1, 0), sl2(0, -1, 1, 1), sl2(0, -1, 1, 2)];
        let keys: Vec<_> = reps.iter().map(|g| keyer.symplectic_key(g).unwrap()).collect();
        for i in 0..4 {
            for j in 0..i {
                assert_ne!(keys[i], keys[j]);
            }
        }
        // Left multiplication by an element of Γ₀(3) keeps the class.
        let g = &sl2(4, 1, 3, 1) * &reps[2];
        assert_eq!(keyer.symplectic_key(&g).unwrap(), keys[2]);
    }

    #[test]
    fn key_is_invariant_under_the_group() {
        let mut keyer = CosetKeyer::new(1, 1, Rational::one(), 2).unwrap();
        let third = Rational::new(1.into(), 3.into());
        let x = JacobiElement::new(
            RatMatrix::from_rows(vec![vec![third.clone()]]),
            RatMatrix::from_rows(vec![vec![Rational::new(1.into(), 2.into())]]),
            RatMatrix::from_rows(vec![vec![third]]),
            RatMatrix::from_rows(vec![
                vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into())],
                vec![Rational::zero(), Rational::from_integer(2.into())],
            ]),
        )
        .unwrap();
        let k0 = keyer.key(&x).unwrap();
        let gamma = JacobiElement::new(
            RatMatrix::from_i64(1, 1, &[2]),
            RatMatrix::from_i64(1, 1, &[-1]),
            RatMatrix::from_i64(1, 1, &[3]),
            sl2(3, 1, 2, 1),
        )
        .unwrap();
        assert!(keyer.contains(&gamma));
        let y = gamma.compose(&x).unwrap();
        assert_eq!(keyer.key(&y).unwrap(), k0);
        // A non-member translation changes the coset.
        let t = JacobiElement::heisenberg(RatMatrix::zeros(1, 1), RatMatrix::from_rows(vec![vec![Rational::new(1.into(), 2.into())]]), RatMatrix::zeros(1, 1)).unwrap();
        assert!(!keyer.contains(&t));
        assert_ne!(keyer.key(&t.compose(&x).unwrap()).unwrap(), k0);
    }
}
