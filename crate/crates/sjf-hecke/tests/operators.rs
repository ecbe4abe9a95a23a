//! Hecke operators on evaluators and on degree-one expansions.

mod support;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_fourier::{ExpansionMeta, FourierExpansion, FourierKey};
use sjf_group::{Complex64, GroupError, JacobiPoint, WeightIndex};
use sjf_hecke::{eigenvalue_extract, eigenvalue_from_values, full_coset_reps, jacobi_coset_reps, CharacterModN, HeckeError, HeckeOperator};
use support::{cohen, index};

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The key `(t, r)` with `r` as an `l × 1` column.
fn key(t: Rational, r: Vec<Rational>) -> FourierKey {
    FourierKey::new(RatMatrix::scalar(t), RatMatrix::from_rows(r.into_iter().map(|x| vec![x]).collect())).unwrap()
}

fn bad_op(p: i64, wi: &WeightIndex) -> HeckeOperator {
    let set = jacobi_coset_reps(&RatMatrix::from_i64(1, 1, &[p]), wi).unwrap();
    HeckeOperator::new(set, wi.clone(), CharacterModN::trivial(wi.level_c)).unwrap()
}

/// A random expansion with integral keys `(t, r)`, `4t ≥ r²` per entry.
fn random_expansion(rng: &mut ChaCha8Rng, wi: &WeightIndex, t_max: i64, trunc: i64) -> FourierExpansion {
    let l = wi.l();
    let mut terms = Vec::new();
    for _ in 0..25 {
        let t: i64 = rng.gen_range(0..=t_max);
        let r: Vec<Rational> = (0..l).map(|_| q(rng.gen_range(-2..=2))).collect();
        terms.push((key(q(t), r), q(rng.gen_range(-9..=9))));
    }
    FourierExpansion::new(ExpansionMeta::from_weight_index(1, wi), q(trunc), terms).unwrap()
}

fn points(rng: &mut ChaCha8Rng, l: usize, count: usize) -> Vec<JacobiPoint> {
    (0..count)
        .map(|_| {
            let tau = Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.8..1.5));
            let w: Vec<Complex64> = (0..l).map(|_| Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.2..0.2))).collect();
            JacobiPoint::deg1(tau, &w).unwrap()
        })
        .collect()
}

fn evaluator(f: &FourierExpansion) -> impl Fn(&JacobiPoint) -> Result<Complex64, GroupError> + Sync + '_ {
    move |z| f.evaluate(z).map(|e| e.value).map_err(|e| GroupError::Evaluation(e.to_string()))
}

#[test]
fn identity_operator_is_the_identity() {
    let wi = index(1, 1, 4);
    let set = jacobi_coset_reps(&RatMatrix::identity(1), &wi).unwrap();
    let op = HeckeOperator::new(set, wi.clone(), CharacterModN::trivial(1)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = random_expansion(&mut rng, &wi, 6, 20);
    assert_eq!(op.apply_expansion(&f).unwrap(), f);
    let fe = evaluator(&f);
    let est = eigenvalue_extract(&fe, &op, &points(&mut rng, 1, 5)).unwrap();
    assert_eq!(est.lambda, Complex64::new(1.0, 0.0));
    assert_eq!(est.residual, 0.0);
}

#[test]
fn bad_prime_action_on_expansions_is_the_reindexing() {
    // Σ_b e(tb/p²) Σ_μ e(ᵗrμ) keeps keys with p² | t, p | r, and the factor
    // p^{2+l} p^{−k} remains: c′(t, r) = p^{l+2−k} c(p²t, pr).
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [2i64, 3] {
        for l in [1usize, 2] {
            let wi = index(l, p as u64, 4);
            let op = bad_op(p, &wi);
            let f = random_expansion(&mut rng, &wi, 40, 60);
            let g = op.apply_expansion(&f).unwrap();
            assert!(*g.trunc() >= q(60) / q(p * p) - Rational::new(1.into(), 1000.into()));
            let factor = Rational::new(BigInt::from(p).pow(l as u32 + 2), BigInt::from(p).pow(4));
            let mut expected = Vec::new();
            for (k, c) in f.iter() {
                let t = k.t.get(0, 0);
                let ok = (t / q(p * p)).is_integer() && k.r.data().iter().all(|x| (x / q(p)).is_integer());
                if ok {
                    let nk = FourierKey::new(k.t.scale(&(Rational::from_integer(1.into()) / q(p * p))), k.r.scale(&(Rational::from_integer(1.into()) / q(p)))).unwrap();
                    expected.push((nk, c * &factor));
                }
            }
            let want = FourierExpansion::new_truncating(f.meta().clone(), g.trunc().clone(), expected).unwrap();
            assert_eq!(g, want, "p = {p}, l = {l}");
        }
    }
}

#[test]
fn pointwise_and_expansion_actions_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let wi = index(1, 2, 4);
    let op = bad_op(2, &wi);
    // Keys up to t = 8 with truncation 80: nothing is cut from the output.
    let f = random_expansion(&mut rng, &wi, 8, 80);
    let g = op.apply_expansion(&f).unwrap();
    let fe = evaluator(&f);
    for z in points(&mut rng, 1, 5) {
        let a = op.apply_at(&fe, &z).unwrap();
        let b = g.evaluate(&z).unwrap().value;
        assert!((a - b).norm() <= 1e-10 * (1.0 + b.norm()), "{a} vs {b}");
    }
}

#[test]
fn weight_six_eisenstein_series_is_an_exact_eigenform() {
    // Coefficients from class numbers; the full level-one decompositions
    // for m = 2, 3, 4 act by λ(2) = 2⁶ + 2⁻³, λ(3) = 3⁶ + 3⁻³ and
    // λ(4) = 2¹² + 2² + 2⁻⁶.
    let wi = index(1, 1, 6);
    let coeffs = cohen::eisenstein_index_one(6, 200);
    let terms = coeffs.into_iter().map(|((n, r), c)| (key(q(n), vec![q(r)]), c));
    let e = FourierExpansion::new(ExpansionMeta::from_weight_index(1, &wi), q(200), terms).unwrap();
    let want = [
        (2u64, Rational::new(513.into(), 8.into())),
        (3, Rational::new(19684.into(), 27.into())),
        (4, Rational::new(262401.into(), 64.into())),
    ];
    for (m, lambda) in want {
        let op = HeckeOperator::new(full_coset_reps(m, &wi).unwrap(), wi.clone(), CharacterModN::trivial(1)).unwrap();
        let te = op.apply_expansion(&e).unwrap();
        assert!(te.trunc() >= &q(5), "m = {m}: output truncation {}", te.trunc());
        let scaled = e.truncate(te.trunc()).scale(&lambda);
        assert_eq!(te, scaled.with_meta(te.meta().clone()).unwrap(), "m = {m}");
    }
}

#[test]
fn eigenvalue_extraction_flags_non_eigenfunctions() {
    // θ₀ + θ_{1/2} with θ_h = Σ_{y ∈ h+ℤ} e(y²τ + 2yw): the bad operator at
    // p = 2 keeps θ₀ up to scale and kills θ_{1/2}.
    let wi = index(1, 2, 4);
    let op = bad_op(2, &wi);
    let mut terms = Vec::new();
    for j in -12i64..=12 {
        let y0 = q(j);
        terms.push((key(&y0 * &y0, vec![&y0 * q(2)]), q(1)));
        let y1 = q(j) + Rational::new(1.into(), 2.into());
        terms.push((key(&y1 * &y1, vec![&y1 * q(2)]), q(1)));
    }
    let f = FourierExpansion::new(ExpansionMeta::from_weight_index(1, &wi), q(200), terms).unwrap();
    let fe = evaluator(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let est = eigenvalue_extract(&fe, &op, &points(&mut rng, 1, 6)).unwrap();
    assert!(!est.is_eigen(1e-3), "residual {}", est.residual);

    let fv = vec![Complex64::new(1.0, 2.0), Complex64::new(-3.0, 0.5)];
    let tv: Vec<Complex64> = fv.iter().map(|v| v * 2.0).collect();
    let est = eigenvalue_from_values(&fv, &tv).unwrap();
    assert_eq!(est.lambda, Complex64::new(2.0, 0.0));
    assert_eq!(est.residual, 0.0);
    assert!(matches!(eigenvalue_from_values(&[Complex64::new(0.0, 0.0)], &[Complex64::new(1.0, 0.0)]), Err(HeckeError::VanishingProbe)));
}

#[test]
fn character_parity_is_enforced() {
    let wi = index(1, 1, 5);
    let set = jacobi_coset_reps(&RatMatrix::identity(1), &wi).unwrap();
    assert!(matches!(HeckeOperator::new(set, wi, CharacterModN::trivial(1)), Err(HeckeError::ParityMismatch { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pointwise_action_is_linear(seed in 0u64..1_000_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wi = index(1, 3, 4);
        let op = bad_op(3, &wi);
        let f = random_expansion(&mut rng, &wi, 6, 40);
        let g = random_expansion(&mut rng, &wi, 6, 40);
        let h = f.add(&g.scale(&q(3))).unwrap();
        let (fe, ge, he) = (evaluator(&f), evaluator(&g), evaluator(&h));
        for z in points(&mut rng, 1, 2) {
            let lhs = op.apply_at(&he, &z).unwrap();
            let rhs = op.apply_at(&fe, &z).unwrap() + op.apply_at(&ge, &z).unwrap() * 3.0;
            prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()));
        }
    }
}
