use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sjf_exact::rational::{int, rat, Rational};
use sjf_exact::{RatMatrix, SymMatrix};
use sjf_fourier::key::is_positive_semidefinite;
use sjf_fourier::{is_cusp_support, petersson_weight, ExpansionMeta, FourierExpansion, FourierKey};
use sjf_group::random::{random_element, random_point};
use sjf_group::{act, factor_j, JacobiElement, JacobiPoint, WeightIndex};

fn key1(t: i64, r: i64) -> FourierKey {
    FourierKey::new(RatMatrix::from_i64(1, 1, &[t]), RatMatrix::from_i64(1, 1, &[r])).unwrap()
}

fn random_expansion(rng: &mut ChaCha8Rng, trunc: i64) -> FourierExpansion {
    let terms: Vec<_> = (0..rng.gen_range(0..8))
        .map(|_| {
            let t = rng.gen_range(0..=trunc);
            (key1(t, rng.gen_range(-3..=3)), rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
        })
        .collect();
    FourierExpansion::new(ExpansionMeta::trivial(1, 1), int(trunc), terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_commutative_and_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_expansion(&mut rng, 6);
        let g = random_expansion(&mut rng, 6);
        let h = random_expansion(&mut rng, 6);
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
        let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_linear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_expansion(&mut rng, 5);
        let g = random_expansion(&mut rng, 5);
        let c = rat(rng.gen_range(-5..=5), 3);
        let z = random_point(&mut rng, 1, 1);
        let lhs = f.add(&g.scale(&c)).unwrap().evaluate(&z).unwrap().value;
        let rhs = f.evaluate(&z).unwrap().value + g.evaluate(&z).unwrap().value * sjf_exact::rational::to_f64(&c);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn cusp_support_implies_definite_t(t in -3i64..8, r in -6i64..6, s in 1i64..4) {
        let (tm, rm, sm) = (RatMatrix::from_i64(1, 1, &[t]), RatMatrix::from_i64(1, 1, &[r]), RatMatrix::from_i64(1, 1, &[s]));
        if is_cusp_support(&tm, &rm, &sm) {
            prop_assert!(t > 0);
        }
        prop_assert_eq!(is_cusp_support(&tm, &rm, &sm), s * t - r * r > 0);
    }
}

#[test]
fn cusp_support_on_degree_two() {
    let s = RatMatrix::from_i64(1, 1, &[1]);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let a = rng.gen_range(-2..=4);
        let b = rng.gen_range(-2..=2);
        let d = rng.gen_range(-2..=4);
        let t = RatMatrix::from_i64(2, 2, &[a, b, b, d]);
        let r = RatMatrix::from_i64(1, 2, &[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        if is_cusp_support(&t, &r, &s) {
            assert!(t.is_positive_definite());
            assert!(is_positive_semidefinite(&t));
        }
    }
}

#[test]
fn q_series_convolution() {
    let trunc = 12;
    let a: Vec<i64> = (0..=trunc).map(|i| (i * i) % 7 - 3).collect();
    let b: Vec<i64> = (0..=trunc).map(|i| (3 * i + 1) % 5 - 2).collect();
    let f = FourierExpansion::new(ExpansionMeta::trivial(1, 1), int(trunc), a.iter().enumerate().map(|(i, &c)| (key1(i as i64, 0), int(c)))).unwrap();
    let g = FourierExpansion::new(ExpansionMeta::trivial(1, 1), int(trunc), b.iter().enumerate().map(|(i, &c)| (key1(i as i64, 0), int(c)))).unwrap();
    let h = f.mul(&g).unwrap();
    for m in 0..=trunc as usize {
        let conv: i64 = (0..=m).map(|i| a[i] * b[m - i]).sum();
        assert_eq!(h.coeff(&key1(m as i64, 0)), int(conv));
    }
}

#[test]
fn translation_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let terms: Vec<_> = (0..10)
        .map(|_| {
            let t = RatMatrix::from_rows(vec![vec![rat(rng.gen_range(0..8), 2)]]);
            let r = RatMatrix::from_i64(1, 1, &[rng.gen_range(-2..=2)]);
            (FourierKey::new(t, r).unwrap(), int(rng.gen_range(1..5)))
        })
        .collect();
    let f = FourierExpansion::new(ExpansionMeta::trivial(1, 1), int(4), terms).unwrap();
    let z = random_point(&mut rng, 1, 1);
    let b = 3.0;
    let zb = JacobiPoint::deg1(z.tau()[(0, 0)] + b, &[z.w()[(0, 0)]]).unwrap();
    let lhs = f.evaluate(&zb).unwrap().value;
    let rhs: Complex64 = f
        .iter()
        .map(|(k, c)| {
            let single = FourierExpansion::new(ExpansionMeta::trivial(1, 1), int(4), [(k.clone(), c.clone())]).unwrap();
            sjf_group::numeric::e(Complex64::new(sjf_exact::rational::to_f64(k.t.get(0, 0)) * b, 0.0)) * single.evaluate(&z).unwrap().value
        })
        .sum();
    assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
}

#[test]
fn petersson_weight_transforms_with_the_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let cases: [(usize, usize, SymMatrix); 3] = [
        (1, 1, SymMatrix::from_i64(1, &[1]).unwrap()),
        (2, 1, SymMatrix::from_i64(1, &[2]).unwrap()),
        (1, 2, SymMatrix::from_i64(2, &[2, 1, 1, 2]).unwrap()),
    ];
    for (n, l, s) in cases {
        let wi = WeightIndex::level_one(5, s).unwrap();
        for _ in 0..30 {
            let a: JacobiElement = random_element(&mut rng, n, l);
            let z = random_point(&mut rng, n, l);
            let lhs = petersson_weight(&act(&a, &z).unwrap(), &wi).unwrap();
            let j = factor_j(&a, &z, &wi).unwrap().norm();
            let rhs = petersson_weight(&z, &wi).unwrap() / (j * j);
            assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs(), "{lhs} vs {rhs}");
        }
    }
}

#[test]
fn mixed_metadata_is_rejected() {
    let wi = WeightIndex::level_one(4, SymMatrix::from_i64(1, &[1]).unwrap()).unwrap();
    let f = FourierExpansion::zero(ExpansionMeta::from_weight_index(1, &wi), int(3));
    let g = FourierExpansion::zero(ExpansionMeta::trivial(1, 1), int(3));
    assert!(f.add(&g).is_err());
    let _: Rational = f.trunc().clone();
}
