//! Possible poles of the normalized Siegel Eisenstein series.

use num_traits::{Signed, ToPrimitive};
use sjf_exact::rational::Rational;

/// The finite sets of possible (simple) poles for weight `k` and degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleSets {
    /// `m ≤ n/2`, where the first set governs the poles.
    pub small_weight: bool,
    /// `{j/2 : [(n+3)/2] ≤ j ≤ n+1−m}` (integral weight) or
    /// `{(2j+1)/4 : 1+[n/2] ≤ j ≤ n+1/2−m}` (half-integral weight).
    pub first: Vec<Rational>,
    /// `{j/2 : 0 ≤ j ≤ [n/2]}` at level one with integral weight, else empty.
    pub second: Vec<Rational>,
    /// For `m > n/2`: the possible pole `(n+2)/4`, present when `2|k| − n ∈ 4ℤ`.
    pub isolated: Option<Rational>,
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

/// Pole sets for weight `k` (integral or half-integral) and `n ≥ 1`.
pub fn pole_sets(k: &Rational, n: usize) -> PoleSets {
    let n_i = n as i64;
    let m = k.abs();
    let integral = k.is_integer();
    let small_weight = m <= q(n_i, 2);
    let first = if integral {
        let hi = (Rational::from_integer((n_i + 1).into()) - &m).floor().to_integer().to_i64().unwrap_or(i64::MIN);
        ((n_i + 3) / 2..=hi).map(|j| q(j, 2)).collect()
    } else {
        let hi = (q(2 * n_i + 1, 2) - &m).floor().to_integer().to_i64().unwrap_or(i64::MIN);
        (1 + n_i / 2..=hi).map(|j| q(2 * j + 1, 4)).collect()
    };
    let second = if integral { (0..=n_i / 2).map(|j| q(j, 2)).collect() } else { Vec::new() };
    let isolated = if small_weight {
        None
    } else {
        let t = &m * Rational::from_integer(2.into()) - Rational::from_integer(n_i.into());
        (t / Rational::from_integer(4.into())).is_integer().then(|| q(n_i + 2, 4))
    };
    PoleSets { small_weight, first, second, isolated }
}
