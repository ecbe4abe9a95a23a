#![allow(dead_code)]

pub mod cohen;

use rand::Rng;
use sjf_exact::lattice::ext_gcd;
use sjf_exact::{RatMatrix, SymMatrix};
use sjf_exact::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use sjf_group::{JacobiElement, WeightIndex};

pub fn index(l: usize, level: u64, k: i64) -> WeightIndex {
    let s = match l {
        1 => SymMatrix::from_i64(1, &[1]).unwrap(),
        _ => SymMatrix::from_i64(2, &[1, 0, 0, 1]).unwrap(),
    };
    WeightIndex::new(k, s, Rational::from_integer(1.into()), level).unwrap()
}

/// A random element of `Γ₀(N)` with bounded entries.
pub fn random_gamma0<R: Rng>(rng: &mut R, level: i64) -> RatMatrix {
    loop {
        let c = level * rng.gen_range(-4..=4);
        let d: i64 = rng.gen_range(-9..=9);
        if (c as i64).gcd(&d) != 1 {
            continue;
        }
        // a d − b c = 1
        let (_, x, y) = ext_gcd(&BigInt::from(d), &BigInt::from(c));
        let a: i64 = x.try_into().unwrap();
        let b: i64 = -i64::try_from(y).unwrap();
        let j: i64 = rng.gen_range(-3..=3);
        let g = RatMatrix::from_i64(2, 2, &[a, b, c, d]);
        return &RatMatrix::from_i64(2, 2, &[1, j, 0, 1]) * &g;
    }
}

/// A random element of the level-`N` Jacobi group with `𝔟 = ℤ`.
pub fn random_level_element<R: Rng>(rng: &mut R, l: usize, level: i64) -> JacobiElement {
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
    let h = JacobiElement::heisenberg(lam, mu, kappa).unwrap();
    let g = JacobiElement::symplectic(random_gamma0(rng, level), l).unwrap();
    h.compose(&g).unwrap()
}
