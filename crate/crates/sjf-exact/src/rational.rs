//! Normalized arbitrary-precision rationals.

use crate::error::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number `p/q` with `gcd(p, q) = 1` and `q ≥ 1`.
pub type Rational = BigRational;

/// The rational `n/d`; panics if `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn add(a: &Rational, b: &Rational) -> Rational {
    a + b
}

pub fn mul(a: &Rational, b: &Rational) -> Rational {
    a * b
}

/// Multiplicative inverse; errors on zero.
pub fn inv(a: &Rational) -> Result<Rational, ExactError> {
    if a.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(a.recip())
    }
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn int_valuation(x: &BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    let mut x = x.abs();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// The p-adic valuation `v_p(a)`.
pub fn valuation(a: &Rational, p: u64) -> Result<i64, ExactError> {
    if !is_prime(p) {
        return Err(ExactError::NotPrime(p));
    }
    if a.is_zero() {
        return Err(ExactError::InfiniteValuation);
    }
    let pb = BigInt::from(p);
    Ok(int_valuation(a.numer(), &pb) - int_valuation(a.denom(), &pb))
}

/// `x mod m` in `[0, m)` for a positive rational modulus.
pub fn modulo(x: &Rational, m: &Rational) -> Rational {
    x - m * (x / m).floor()
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// Least common multiple of positive integers.
pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Canonical `"p/q"` encoding.
pub fn to_pq(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| err())?)),
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact conversion of a finite binary64 value.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}
