//! Local factors, Siegel-series normalizers and Euler products.

use num_complex::Complex64;
use proptest::prelude::*;
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_lfunction::*;
use std::collections::BTreeMap;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * (1.0 + y.norm()))
}

#[test]
fn good_factors_at_trivial_and_rational_parameters() {
    let f = euler_factor_good(&SatakeData::new(5, vec![c(1.0)]).unwrap()).unwrap();
    assert!(close(&f.coeffs, &[c(1.0), c(-2.0), c(1.0)], 0.0));
    let f = euler_factor_good(&SatakeData::new(5, vec![c(1.0), c(1.0)]).unwrap()).unwrap();
    assert!(close(&f.coeffs, &[c(1.0), c(-4.0), c(6.0), c(-4.0), c(1.0)], 0.0));
    assert_eq!(f.degree_bound, 4);
    let exact = euler_factor_good_exact(&[Rational::from_integer(2.into())]).unwrap();
    assert_eq!(exact, vec![Rational::from_integer(1.into()), Rational::new((-5).into(), 2.into()), Rational::from_integer(1.into())]);
    let zero = SatakeData { p: 3, mu: vec![c(0.0)] };
    assert_eq!(euler_factor_good(&zero), Err(LfError::ZeroSatake(0)));
    let bad = euler_factor_bad(3, &[c(2.0), c(0.0)]);
    assert!(close(&bad.coeffs, &[c(1.0), c(-2.0), c(0.0)], 0.0));
}

/// `h_j(μ, μ⁻¹) − h_{j−2}/p`, the expansion of `(1 − X²/p)/((1−μX)(1−X/μ))`.
fn degree_one_oracle(mu: Complex64, p: f64, j: usize) -> Complex64 {
    let h = |j: i64| -> Complex64 {
        if j < 0 {
            return c(0.0);
        }
        (0..=j).map(|i| mu.powi((j - 2 * i) as i32)).sum()
    };
    h(j as i64) - h(j as i64 - 2) / p
}

#[test]
fn eigenvalues_from_satake_match_the_closed_prediction() {
    for (mu, p) in [(c(1.7), 2u64), (Complex64::from_polar(1.0, 0.7), 3), (c(0.4), 5)] {
        let sat = SatakeData::new(p, vec![mu]).unwrap();
        let lam = hecke_eigenvalues_from_satake(&sat, 1, 3).unwrap();
        let pf = p as f64;
        for j in 0..=3 {
            let want = degree_one_oracle(mu, pf, j) * pf.powf(1.5 * j as f64);
            assert!((lam[j] - want).norm() <= 1e-10 * want.norm().max(1.0), "j = {j}");
        }
        let pred = satake_solve_and_predict(lam[1], p, 1);
        assert!((pred.predicted_lambda_p2 - lam[2]).norm() <= 1e-10 * lam[2].norm().max(1.0));
        assert!((pred.mu - mu).norm() <= 1e-9 || (pred.mu - 1.0 / mu).norm() <= 1e-9);
    }
}

#[test]
fn satake_prediction_special_values() {
    let p = 3.0f64;
    let one = satake_solve_and_predict(c(2.0 * p.powf(1.5)), 3, 1);
    assert!((one.mu - 1.0).norm() < 1e-6);
    assert!((one.predicted_lambda_p2 - p.powi(3) * (3.0 - 1.0 / p)).norm() < 1e-6);
    let sq = satake_solve_and_predict(c(p * p + p), 3, 1);
    assert!((sq.mu - p.sqrt()).norm() < 1e-12);
    let zero = satake_solve_and_predict(c(0.0), 3, 1);
    assert!((zero.mu - Complex64::i()).norm() < 1e-12);
    assert!((zero.predicted_lambda_p2 - p.powi(3) * (-1.0 - 1.0 / p)).norm() < 1e-9);
    // The weight-six index-one Eisenstein eigenvalue at 2 predicts its value at 4.
    let e = satake_solve_and_predict(c(513.0 / 8.0), 2, 1);
    assert!((e.predicted_lambda_p2 - 262_401.0 / 64.0).norm() < 1e-9);
    assert!((e.mu - 2f64.powf(4.5)).norm() < 1e-9);
}

#[test]
fn normalizing_factors() {
    let triv = CharacterModN::trivial(1);
    let f = frak_l_factor(&triv, 3, 1, 1, &RationalFunction::one()).unwrap();
    let s = f.series(4);
    assert!(close(&s, &[c(1.0), c(0.0), c(1.0 / 3.0), c(0.0), c(1.0 / 9.0)], 1e-15));
    let f = frak_l_factor(&triv, 3, 1, 2, &RationalFunction::one()).unwrap();
    assert!(close(&f.series(4), &[c(1.0), c(0.0), c(1.0), c(0.0), c(1.0)], 1e-15));
    // n = 2, l even: exponents 2 and 0.
    let f = frak_l_factor(&triv, 2, 2, 2, &RationalFunction::one()).unwrap();
    assert!(close(&f.series(2), &[c(1.0), c(0.0), c(1.25)], 1e-15));
    let chi = CharacterModN::kronecker(-4).unwrap();
    assert_eq!(frak_l_factor(&chi, 2, 1, 1, &RationalFunction::one()), Err(LfError::Ramified { p: 2, level: 4 }));
}

#[test]
fn regular_siegel_series() {
    let chi = CharacterModN::kronecker(-4).unwrap();
    let one = RatMatrix::identity(1);
    // χ(3) = −1.
    let a = siegel_series_regular(&one, &chi, 3).unwrap();
    assert!(close(&a.num, &[c(1.0), c(1.0)], 1e-15));
    assert!(is_regular(&one, 2).unwrap());
    let triv = CharacterModN::trivial(1);
    let a = siegel_series_regular(&one, &triv, 2).unwrap();
    assert!(close(&a.num, &[c(1.0), c(-1.0)], 1e-15));
    let two = RatMatrix::identity(2);
    let a = siegel_series_regular(&two, &chi, 5).unwrap();
    assert!(close(&a.num, &[c(1.0), c(-1.0), c(-25.0), c(25.0)], 1e-13));
    let three = RatMatrix::scalar(Rational::from_integer(3.into()));
    assert_eq!(siegel_series_regular(&three, &triv, 3), Err(LfError::NonRegular(3)));
    assert_eq!(g_p_ratio(&three, &triv, 3, 1, 1), Err(LfError::NonRegular(3)));
    assert!(g_p_ratio(&one, &triv, 7, 1, 1).unwrap().is_one(0.0));
    assert!(!is_regular(&two, 2).unwrap());
}

#[test]
fn twisted_products() {
    let triv = CharacterModN::trivial(1);
    let empty = twisted_l_assemble(BTreeMap::new(), &triv, &triv, 1);
    assert_eq!(empty.eval(Complex64::new(2.0, 1.0)), c(1.0));
    assert_eq!(empty.dirichlet_coefficients(5)[1..], [c(1.0), c(0.0), c(0.0), c(0.0), c(0.0)]);

    let mu = c(1.5);
    let f2 = euler_factor_good(&SatakeData::new(2, vec![mu]).unwrap()).unwrap();
    let f3 = euler_factor_good(&SatakeData::new(3, vec![c(0.8)]).unwrap()).unwrap();
    let factors: BTreeMap<u64, LocalFactor> = [(2, f2.clone()), (3, f3.clone())].into();
    let plain = twisted_l_assemble(factors.clone(), &triv, &triv, 1);
    let a = plain.dirichlet_coefficients(12);
    let h = |m: Complex64, j: i32| -> Complex64 { (0..=j).map(|i| m.powi(j - 2 * i)).sum() };
    assert!((a[4] - h(mu, 2)).norm() < 1e-12);
    assert!((a[12] - h(mu, 2) * h(c(0.8), 1)).norm() < 1e-12);
    let s = Complex64::new(2.0, 0.3);
    let long = plain.dirichlet_coefficients(20_000);
    let direct: Complex64 = (1..=20_000).map(|m| long[m] * (-s * (m as f64).ln()).exp()).sum();
    assert!((plain.eval(s) - direct).norm() < 1e-4, "{} vs {direct}", plain.eval(s));

    // ψ mod 3 twists p = 2 only; p = 3 divides 𝔠 and keeps χ alone.
    let psi = CharacterModN::kronecker(-3).unwrap();
    let tw = twisted_l_assemble(factors.clone(), &triv, &psi, 1);
    assert!((tw.twist(2).unwrap() + 1.0).norm() < 1e-15);
    assert!((tw.twist(3).unwrap() - 1.0).norm() < 1e-15);
    let b = tw.dirichlet_coefficients(8);
    assert!((b[2] + a[2]).norm() < 1e-12 && (b[4] - a[4]).norm() < 1e-12 && (b[3] - a[3]).norm() < 1e-12);

    let removed = twisted_l_assemble(factors, &triv, &triv, 2);
    assert_eq!(removed.primes(), vec![3]);
}

proptest! {
    #[test]
    fn good_factors_are_palindromic(re in prop::collection::vec(0.2f64..3.0, 1..4), arg in prop::collection::vec(-3.0f64..3.0, 3)) {
        let mu: Vec<Complex64> = re.iter().zip(arg.iter()).map(|(r, t)| Complex64::from_polar(*r, *t)).collect();
        let f = euler_factor_good(&SatakeData::new(7, mu.clone()).unwrap()).unwrap();
        prop_assert_eq!(f.degree(), 2 * mu.len());
        prop_assert!(f.palindrome_defect() <= 1e-12 * f.coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max));
        prop_assert_eq!(f.coeffs[0], c(1.0));
    }

    #[test]
    fn series_identity_reproduces_the_degree_one_prediction(r in 0.3f64..3.0, t in -3.0f64..3.0, pi in 0usize..3) {
        let p = [2u64, 3, 5][pi];
        let mu = Complex64::from_polar(r, t);
        let lam = hecke_eigenvalues_from_satake(&SatakeData::new(p, vec![mu]).unwrap(), 1, 3).unwrap();
        let pred = satake_solve_and_predict(lam[1], p, 1);
        prop_assert!((pred.predicted_lambda_p2 - lam[2]).norm() <= 1e-9 * lam[2].norm().max(1.0));
        let pf = p as f64;
        let want = degree_one_oracle(mu, pf, 3) * pf.powf(4.5);
        prop_assert!((lam[3] - want).norm() <= 1e-9 * want.norm().max(1.0));
    }
}
