//! Brute-force coset oracle for degree one: random products
//! `γ₁·diag[ξ⁻¹, ξ]·γ₂` with `γᵢ` in the level group, classified by
//! canonical coset key.

use crate::error::CliError;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sjf_exact::lattice::ext_gcd;
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_group::JacobiElement;
use sjf_hecke::{diag_element, CosetSet};
use std::collections::HashSet;

/// A random element of `Γ₀(N)` with small entries.
fn random_gamma0<R: Rng>(rng: &mut R, level: i64) -> RatMatrix {
    loop {
        let c = level * rng.gen_range(-4..=4);
        let d: i64 = rng.gen_range(-9..=9);
        let (g, x, y) = ext_gcd(&BigInt::from(d), &BigInt::from(c));
        if g != BigInt::from(1) && g != BigInt::from(-1) {
            continue;
        }
        let sign: i64 = if g == BigInt::from(1) { 1 } else { -1 };
        let a = sign * i64::try_from(x).expect("small");
        let b = -sign * i64::try_from(y).expect("small");
        let j: i64 = rng.gen_range(-3..=3);
        return &RatMatrix::from_i64(2, 2, &[1, j, 0, 1]) * &RatMatrix::from_i64(2, 2, &[a, b, c, d]);
    }
}

/// A random element of `H(ℤ) ⋊ Γ₀(N)`.
pub fn random_level_element<R: Rng>(rng: &mut R, l: usize, level: i64) -> Result<JacobiElement, CliError> {
    let mut v = || Rational::from_integer(rng.gen_range(-2i64..=2).into());
    let lam = RatMatrix::from_fn(l, 1, |_, _| v());
    let mu = RatMatrix::from_fn(l, 1, |_, _| v());
    let mut kappa = RatMatrix::zeros(l, l);
    for i in 0..l {
        for j in i..l {
            let x = v();
            kappa.set(i, j, x.clone());
            kappa.set(j, i, x);
        }
    }
    let h = JacobiElement::heisenberg(lam, mu, kappa)?;
    let g = JacobiElement::symplectic(random_gamma0(rng, level), l)?;
    Ok(h.compose(&g)?)
}

/// Classes reached by random double-coset products, sampling until no new
/// class has appeared for `patience` consecutive samples.
pub fn oracle_classes(set: &mut CosetSet, xi: &RatMatrix, level: i64, seed: u64, patience: usize) -> Result<HashSet<Vec<u8>>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = set.l();
    let alpha = diag_element(xi, l)?;
    let mut found = HashSet::new();
    let mut quiet = 0;
    while quiet < patience {
        let g1 = random_level_element(&mut rng, l, level)?;
        let g2 = random_level_element(&mut rng, l, level)?;
        let x = g1.compose(&alpha)?.compose(&g2)?;
        if found.insert(set.keyer_mut().key(&x)?) {
            quiet = 0;
        } else {
            quiet += 1;
        }
    }
    Ok(found)
}

/// Whether the oracle finds exactly the classes of the representatives.
pub fn oracle_agrees(set: &mut CosetSet, xi: &RatMatrix, level: i64, seed: u64, patience: usize) -> Result<(bool, usize), CliError> {
    let found = oracle_classes(set, xi, level, seed, patience)?;
    let reps: HashSet<Vec<u8>> = set.keys().iter().cloned().collect();
    Ok((found == reps, found.len()))
}
