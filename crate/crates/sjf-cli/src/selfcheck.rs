//! Seeded property suites for the Jacobi group: the automorphy cocycle,
//! exact group laws, the parabolic restriction and the diagonal closed form.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sjf_exact::rational::{rat, to_f64};
use sjf_exact::{RatMatrix, SymMatrix};
use sjf_group::doubling::{diag_factor_formula, diag_factor_sign, diag_point, tau_r};
use sjf_group::element::is_symplectic;
use sjf_group::numeric::powi;
use sjf_group::parabolic::{in_parabolic, lambda_r, omega_r, pi_r};
use sjf_group::random::{random_element, random_parabolic, random_point};
use sjf_group::tol::rel_diff;
use sjf_group::{act, factor_j, GroupError, JacobiElement, WeightIndex};
use std::time::Instant;

/// Relative tolerance of every numeric identity in the suites.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    /// Exact identities that failed.
    pub exact_failures: usize,
    /// Largest relative deviation of the numeric identities.
    pub worst_relative: f64,
    pub tolerance: f64,
    pub seconds: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.exact_failures == 0 && self.worst_relative < self.tolerance
    }
}

/// A weight in `1..=8` and an index among a fixed set of positive definite
/// matrices, including non-integral ones.
pub fn random_index<R: Rng>(rng: &mut R, l: usize) -> WeightIndex {
    let s = match l {
        1 => SymMatrix::from_i64(1, &[rng.gen_range(1..=3)]).expect("positive"),
        _ => {
            let choices = [
                RatMatrix::from_i64(2, 2, &[1, 0, 0, 1]),
                RatMatrix::from_i64(2, 2, &[2, 1, 1, 2]),
                RatMatrix::from_rows(vec![vec![rat(1, 1), rat(1, 2)], vec![rat(1, 2), rat(1, 1)]]),
            ];
            SymMatrix::new(choices[rng.gen_range(0..3)].clone()).expect("symmetric")
        }
    };
    WeightIndex::level_one(rng.gen_range(1..=8), s).expect("valid index")
}

fn finish(name: &'static str, cases: usize, exact_failures: usize, worst: f64, start: Instant) -> SuiteResult {
    SuiteResult { name, cases, exact_failures, worst_relative: worst, tolerance: TOLERANCE, seconds: start.elapsed().as_secs_f64() }
}

/// `J(gg′, z) = J(g, g′z)·J(g′, z)` on random triples with `n, l ≤ 2`.
pub fn cocycle(trials: usize, seed: u64) -> Result<SuiteResult, GroupError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let (n, l) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let wi = random_index(&mut rng, l);
        let a = random_element(&mut rng, n, l);
        let b = random_element(&mut rng, n, l);
        let z = random_point(&mut rng, n, l);
        let lhs = factor_j(&a.compose(&b)?, &z, &wi)?;
        let rhs = factor_j(&a, &act(&b, &z)?, &wi)? * factor_j(&b, &z, &wi)?;
        worst = worst.max(rel_diff(lhs, rhs));
    }
    Ok(finish("cocycle", trials, 0, worst, start))
}

/// Associativity, inverses, the symplectic embedding as a homomorphism and
/// ε-conjugation as an involutive automorphism, all in exact arithmetic.
pub fn group_laws(trials: usize, seed: u64) -> Result<SuiteResult, GroupError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let (n, l) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = random_element(&mut rng, n, l);
        let b = random_element(&mut rng, n, l);
        let c = random_element(&mut rng, n, l);
        let id = JacobiElement::identity(n, l);
        let ab = a.compose(&b)?;
        let checks = [
            ab.compose(&c)? == a.compose(&b.compose(&c)?)?,
            id.compose(&a)? == a && a.compose(&id)? == a,
            a.compose(&a.inverse())?.is_identity() && a.inverse().compose(&a)?.is_identity(),
            is_symplectic(&a.embed_symplectic()),
            &a.embed_symplectic() * &b.embed_symplectic() == ab.embed_symplectic(),
            ab.epsilon_conjugate() == a.epsilon_conjugate().compose(&b.epsilon_conjugate())?,
            a.epsilon_conjugate().epsilon_conjugate() == a,
        ];
        failures += checks.iter().filter(|ok| !**ok).count();
    }
    Ok(finish("group_laws", trials, failures, 0.0, start))
}

/// On `𝐏^{2,1}`: closure, `π_r` and `λ_r` multiplicative (exact),
/// `ω_r(az) = π_r(a)ω_r(z)` and `J(a, z) = λ_r(a)^k J(π_r(a), ω_r(z))`.
pub fn parabolic(trials: usize, seed: u64) -> Result<SuiteResult, GroupError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, r) = (2, 1);
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let l = rng.gen_range(1..=2);
        let wi = random_index(&mut rng, l);
        let a = random_parabolic(&mut rng, n, l, r);
        let b = random_parabolic(&mut rng, n, l, r);
        let ab = a.compose(&b)?;
        let (pa, pb) = (pi_r(&a, r)?, pi_r(&b, r)?);
        let checks = [
            in_parabolic(&a, r) && in_parabolic(&ab, r),
            pi_r(&ab, r)? == pa.compose(&pb)?,
            lambda_r(&ab, r)? == lambda_r(&a, r)? * lambda_r(&b, r)?,
        ];
        failures += checks.iter().filter(|ok| !**ok).count();
        let z = random_point(&mut rng, n, l);
        let wz = omega_r(&z, r)?;
        worst = worst.max(omega_r(&act(&a, &z)?, r)?.distance(&act(&pa, &wz)?));
        let lam = to_f64(&lambda_r(&a, r)?);
        let j = factor_j(&a, &z, &wi)?;
        let jr = powi(Complex64::new(lam, 0.0), wi.k) * factor_j(&pa, &wz, &wi)?;
        worst = worst.max(rel_diff(j, jr));
    }
    Ok(finish("parabolic", trials, failures, worst, start))
}

/// The closed form of `J(τ_r, diag[z₁, z₂])` for `n = m = r = 1` against
/// the direct factor, after the sign `(−1)^{rk}`.
pub fn diagonal(trials: usize, seed: u64) -> Result<SuiteResult, GroupError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let l = rng.gen_range(1..=2);
        let wi = random_index(&mut rng, l);
        let z1 = random_point(&mut rng, 1, l);
        let z2 = random_point(&mut rng, 1, l);
        let direct = factor_j(&tau_r(1, 1, 1, l)?, &diag_point(&z1, &z2)?, &wi)?;
        let closed = diag_factor_formula(&z1, &z2, 1, &wi)? * diag_factor_sign(1, wi.k);
        worst = worst.max(rel_diff(direct, closed));
    }
    Ok(finish("diagonal", trials, 0, worst, start))
}

/// Trial counts of the standard run.
pub const DEFAULT_TRIALS: [(&str, usize); 4] = [("cocycle", 1000), ("group_laws", 200), ("parabolic", 200), ("diagonal", 200)];

/// All suites, each with `trials` cases or its default count.
pub fn run_all(trials: Option<usize>, seed: u64) -> Result<Vec<SuiteResult>, GroupError> {
    let count = |i: usize| trials.unwrap_or(DEFAULT_TRIALS[i].1);
    Ok(vec![
        cocycle(count(0), seed)?,
        group_laws(count(1), seed.wrapping_add(1))?,
        parabolic(count(2), seed.wrapping_add(2))?,
        diagonal(count(3), seed.wrapping_add(3))?,
    ])
}
