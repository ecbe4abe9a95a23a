//! Exact Fourier coefficients of the index-one Jacobi Eisenstein series
//! `E_{k,1}` from generalized class numbers:
//! `e(n, r) = H(k−1, 4n−r²) / H(k−1, 0)`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

pub type Q = sjf_exact::Rational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn binom(n: usize, k: usize) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

/// Bernoulli numbers `B_0, …, B_m` with `B_1 = −1/2`.
pub fn bernoulli(m: usize) -> Vec<Q> {
    let mut b = vec![Q::one()];
    for n in 1..=m {
        let mut s = Q::zero();
        for (k, bk) in b.iter().enumerate() {
            s += binom(n + 1, k) * bk;
        }
        b.push(-s / q(n as i64 + 1));
    }
    b
}

fn bernoulli_poly(r: usize, x: &Q, b: &[Q]) -> Q {
    let mut s = Q::zero();
    let mut xp = Q::one();
    for j in (0..=r).rev() {
        s += binom(r, j) * &b[j] * &xp;
        xp *= x;
    }
    s
}

/// The Kronecker symbol `(d/n)`.
pub fn kronecker(d: i64, n: i64) -> i64 {
    if n == 0 {
        return if d.abs() == 1 { 1 } else { 0 };
    }
    let mut n = n.abs();
    let mut res = 1;
    while n % 2 == 0 {
        n /= 2;
        if d % 2 == 0 {
            return 0;
        }
        if matches!(d.rem_euclid(8), 3 | 5) {
            res = -res;
        }
    }
    // Jacobi symbol (d/n), n odd.
    let mut a = d.rem_euclid(n);
    let mut m = n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                res = -res;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            res = -res;
        }
        a %= m;
    }
    if m == 1 {
        res
    } else {
        0
    }
}

fn sigma(n: i64, e: u32) -> Q {
    let mut s = Q::zero();
    for d in 1..=n {
        if n % d == 0 {
            s += Q::from_integer(BigInt::from(d).pow(e));
        }
    }
    s
}

fn moebius(mut n: i64) -> i64 {
    let mut res = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if n > 1 {
        res = -res;
    }
    res
}

/// `−N = D f²` with `D` a fundamental discriminant.
fn fundamental(n: i64) -> (i64, i64) {
    let mut d0 = -n;
    let mut s = 1;
    let mut p = 2;
    while p * p <= d0.abs() {
        while d0 % (p * p) == 0 {
            d0 /= p * p;
            s *= p;
        }
        p += 1;
    }
    if d0.rem_euclid(4) == 1 {
        (d0, s)
    } else {
        (4 * d0, s / 2)
    }
}

/// Cohen's `H(r, N)` for odd `r ≥ 3`.
pub struct Cohen {
    r: usize,
    b: Vec<Q>,
    cache: HashMap<i64, Q>,
}

impl Cohen {
    pub fn new(r: usize) -> Self {
        assert!(r % 2 == 1 && r >= 3);
        Cohen { r, b: bernoulli(2 * r + 2), cache: HashMap::new() }
    }

    pub fn h(&mut self, n: i64) -> Q {
        if let Some(v) = self.cache.get(&n) {
            return v.clone();
        }
        let r = self.r;
        let v = if n == 0 {
            // ζ(1 − 2r) = −B_{2r}/(2r)
            -self.b[2 * r].clone() / q(2 * r as i64)
        } else if matches!((-n).rem_euclid(4), 2 | 3) {
            Q::zero()
        } else {
            let (d, f) = fundamental(n);
            let m = d.abs();
            let mut bchi = Q::zero();
            for a in 1..=m {
                let chi = kronecker(d, a);
                if chi != 0 {
                    bchi += q(chi) * bernoulli_poly(r, &(q(a) / q(m)), &self.b);
                }
            }
            bchi *= Q::from_integer(BigInt::from(m).pow(r as u32 - 1));
            let l = -bchi / q(r as i64);
            let mut s = Q::zero();
            for dd in 1..=f {
                if f % dd == 0 {
                    let mu = moebius(dd);
                    if mu != 0 {
                        s += q(mu * kronecker(d, dd)) * Q::from_integer(BigInt::from(dd).pow(r as u32 - 1)) * sigma(f / dd, 2 * r as u32 - 1);
                    }
                }
            }
            l * s
        };
        self.cache.insert(n, v.clone());
        v
    }
}

/// Coefficients `e_{k,1}(n, r)` for `0 ≤ n ≤ t_max`, `r² ≤ 4n`.
pub fn eisenstein_index_one(k: usize, t_max: i64) -> Vec<((i64, i64), Q)> {
    let mut c = Cohen::new(k - 1);
    let h0 = c.h(0);
    let mut out = Vec::new();
    for n in 0..=t_max {
        let mut r = 0i64;
        while r * r <= 4 * n {
            for rr in if r == 0 { vec![0] } else { vec![r, -r] } {
                let v = c.h(4 * n - rr * rr) / &h0;
                if !v.is_zero() {
                    out.push(((n, rr), v));
                }
            }
            r += 1;
        }
    }
    out
}

#[test]
fn weight_four_index_one_opening_coefficients() {
    let e = eisenstein_index_one(4, 2);
    let get = |n: i64, r: i64| e.iter().find(|(k, _)| *k == (n, r)).map(|(_, v)| v.clone()).unwrap_or_else(Q::zero);
    assert_eq!(get(0, 0), q(1));
    assert_eq!(get(1, 0), q(126));
    assert_eq!(get(1, 1), q(56));
    assert_eq!(get(1, 2), q(1));
    assert_eq!(get(2, 0), q(756));
    assert_eq!(get(2, 1), q(576));
    assert_eq!(get(2, 2), q(126));
    assert!(get(1, 1).is_positive());
}
