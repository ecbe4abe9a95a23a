//! The Hecke eigenvalue and Euler factor pipeline on Eisenstein series.

mod support;

use num_complex::Complex64;


use sjf_eisenstein::{default_points, euler_check, euler_rung, hecke_euler_verify, klingen_cosets_deg1, EisError, EisensteinSeries, EisensteinSpec, KlingenSeries, VerifyOptions};
use sjf_exact::RatMatrix;
use sjf_group::factor::slash_at;
use sjf_group::{GroupError, JacobiElement, JacobiPoint};
use sjf_hecke::{full_coset_reps, CharacterModN, HeckeOperator};
use support::{point, CohenSeries};

fn series(k: i64, b: u64) -> EisensteinSeries {
    EisensteinSeries::new(EisensteinSpec::level_one(k, 1, b).unwrap()).unwrap()
}

#[test]
fn exact_eigenform_closes_the_loop() {
    // The class-number expansion of E_{6,1}: λ(2) = 2⁶ + 2⁻³ exactly, and the
    // predicted λ(4) = 2¹² + 2² + 2⁻⁶.
    let oracle = CohenSeries::new(6, 60);
    let f = |z: &JacobiPoint| oracle.eval(z);
    let wi = series(6, 4).weight_index().clone();
    let (e1, _, predicted, e2) = euler_check(&f, &wi, 2, &default_points()).unwrap();
    assert!((e1.lambda - 64.125).norm() < 1e-9);
    assert!((predicted - 262401.0 / 64.0).norm() < 1e-7);
    assert!((e2.lambda - predicted).norm() / predicted.norm() < 1e-10, "{e2:?} {predicted}");
}

#[test]
fn weight_six_at_two_on_a_short_ladder() {
    let opts = VerifyOptions::default();
    let r = hecke_euler_verify(6, 2, 40, &opts).unwrap();
    assert_eq!(r.rungs.iter().map(|g| g.b).collect::<Vec<_>>(), vec![20, 40, 80]);
    assert!(r.monotone());
    let g = r.at(80).unwrap();
    assert!(g.residual_p < 1e-7 && g.gap < 1e-7, "{g:?}");
    assert!((g.lambda_p - 64.125).norm() < 1e-5);
}

#[test]
fn weight_eight_at_three() {
    let g = euler_rung(8, 3, 40, &VerifyOptions::default()).unwrap();
    assert!(g.residual_p < 1e-10 && g.gap < 1e-9, "{g:?}");
    // λ(3) = 3⁸ + 3⁻⁵
    assert!((g.lambda_p - (6561.0 + 1.0 / 243.0)).norm() < 1e-6, "{g:?}");
}

#[test]
fn hecke_operators_at_two_and_three_commute_on_the_series() {
    let s = series(6, 60);
    let f = s.reduced_evaluator();
    let wi = s.weight_index().clone();
    let t2 = HeckeOperator::new(full_coset_reps(2, &wi).unwrap(), wi.clone(), CharacterModN::trivial(1)).unwrap();
    let t3 = HeckeOperator::new(full_coset_reps(3, &wi).unwrap(), wi.clone(), CharacterModN::trivial(1)).unwrap();
    let f2 = t2.apply(&f);
    let f3 = t3.apply(&f);
    let z = point(0.12, 1.05, 0.21, 0.09);
    let a = t3.apply_at(&f2, &z).unwrap();
    let b = t2.apply_at(&f3, &z).unwrap();
    assert!((a - b).norm() / a.norm() < 1e-9, "{a} vs {b}");
}

#[test]
fn operator_is_independent_of_the_coset_representatives() {
    let s = series(6, 60);
    let f = s.reduced_evaluator();
    let wi = s.weight_index().clone();
    let op = HeckeOperator::new(full_coset_reps(2, &wi).unwrap(), wi.clone(), CharacterModN::trivial(1)).unwrap();
    let z = point(-0.2, 1.15, 0.1, -0.15);
    let reference = op.apply_at(&f, &z).unwrap();
    let moves = [
        JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[1, 1, 0, 1]), 1).unwrap(),
        JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[2, 1, 7, 4]), 1).unwrap(),
        JacobiElement::heisenberg(RatMatrix::from_i64(1, 1, &[1]), RatMatrix::from_i64(1, 1, &[-1]), RatMatrix::zeros(1, 1)).unwrap(),
    ];
    let mut total = Complex64::new(0.0, 0.0);
    for (i, (alpha, _)) in op.terms().enumerate() {
        let g = moves[i % moves.len()].compose(alpha).unwrap();
        let fe: &dyn Fn(&JacobiPoint) -> Result<Complex64, GroupError> = &f;
        total += slash_at(fe, &g, &wi, &z).unwrap();
    }
    assert!((total - reference).norm() / reference.norm() < 1e-9);
}

#[test]
fn large_residuals_abort_with_diagnostics() {
    let opts = VerifyOptions { abort_residual: 0.0, ..VerifyOptions::default() };
    match euler_rung(6, 2, 10, &opts) {
        Err(EisError::NotEigen { m: 2, residual, .. }) => assert!(residual > 0.0),
        other => panic!("{other:?}"),
    }
}

#[test]
fn preconditions_are_enforced() {
    let opts = VerifyOptions::default();
    assert!(matches!(hecke_euler_verify(4, 2, 10, &opts), Err(EisError::InvalidInput(_))));
    assert!(matches!(hecke_euler_verify(7, 2, 10, &opts), Err(EisError::InvalidInput(_))));
    assert!(matches!(hecke_euler_verify(6, 5, 10, &opts), Err(EisError::Unsupported(_))));
}

#[test]
fn klingen_series_in_degree_one() {
    assert_eq!(klingen_cosets_deg1(1, 1, 50).unwrap().len(), 1);
    assert_eq!(klingen_cosets_deg1(0, 1, 1).unwrap().len(), 4);
    assert!(klingen_cosets_deg1(2, 1, 1).is_err());
    let oracle = CohenSeries::new(4, 30);
    let f = |z: &JacobiPoint| oracle.eval(z);
    let z = point(0.1, 1.3, 0.2, 0.0);
    let full = KlingenSeries::full(&f);
    assert_eq!(full.eval(&z).unwrap(), oracle.eval(&z).unwrap());
    let siegel = KlingenSeries::siegel(EisensteinSpec::level_one(4, 1, 100).unwrap()).unwrap();
    assert_eq!(siegel.eval(&z).unwrap(), series(4, 100).eval(&z).unwrap().value);
}
