//! Exponents with their admissibility conditions, pole sets and the local
//! maximality predicate.

use proptest::prelude::*;
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_lfunction::*;

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

#[test]
fn critical_value_exponents() {
    let e = exponents(10, 1, 1, 9);
    assert_eq!((e.e, e.e_sigma), (q(1, 1), q(17, 1)));
    let e = exponents(10, 2, 1, 3);
    assert_eq!((e.e, e.e_sigma), (q(0, 1), q(11, 1)));
    let flags = ArithmeticFlags::default();
    // Both values above sit on the wrong parity class for k = 10.
    for (l, sigma) in [(1, 9), (2, 3)] {
        let v = sigma_violations(10, l, 1, sigma, &flags);
        assert!(v.iter().any(|v| v.condition == "sigma_parity"), "{v:?}");
        match admissible_exponents(10, l, 1, sigma, &flags) {
            Err(LfError::Inadmissible { condition, .. }) => assert_eq!(condition, "sigma_parity"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }
    let ok = admissible_exponents(10, 1, 1, 10, &flags).unwrap();
    assert_eq!((ok.e, ok.e_sigma), (q(1, 1), q(18, 1)));
    // Degree two, l = 2, k = 12: 2σ − l even and σ ≥ 2n + l/2 selects the first branch.
    let ok = admissible_exponents(12, 2, 2, 10, &flags).unwrap();
    assert_eq!((ok.e, ok.e_sigma), (q(-3, 1), q(43, 1)));
    assert!(sigma_violations(10, 1, 1, 30, &flags).iter().any(|v| v.condition == "sigma_range"));
    assert!(sigma_violations(12, 2, 2, 3, &flags).iter().any(|v| v.condition == "excluded_strip"));
    assert_eq!(form_hypotheses(10, 1, 1).len(), 1);
    assert!(form_hypotheses(12, 2, 2).is_empty());
}

#[test]
fn eisenstein_exponents() {
    let flags = ArithmeticFlags::default();
    let e = eis_exponents(10, 1, 1, 10, &flags).unwrap();
    assert_eq!((e.r, e.beta, e.e), (q(0, 1), q(18, 1), q(-17, 2)));
    // The generic branch of r away from the edge of the range.
    let e = eis_exponents(10, 1, 1, 6, &flags).unwrap();
    assert_eq!(e.r, q(1, 2) * (q(19, 2) - q(9, 2) - q(1, 1)));
    assert_eq!(e.r, q(2, 1));
    // n = 1, μ = 2 + l/2 with χψ_S = 1 takes the special branch k/2 − l/4.
    let special = ArithmeticFlags { chi_psi_s_trivial: true, chi_squared_trivial: false, ..flags };
    let e = eis_exponents(11, 2, 1, 3, &special).unwrap();
    assert_eq!(e.r, q(5, 1));
    assert_eq!(eis_exponents(11, 2, 1, 3, &flags).unwrap().r, q(4, 1));
    match eis_exponents(10, 1, 1, 7, &flags) {
        Err(LfError::Inadmissible { condition, .. }) => assert_eq!(condition, "mu_parity"),
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn pole_sets_for_the_reference_weights() {
    let p = pole_sets(&q(10, 1), 1);
    assert!(p.first.is_empty() && p.isolated.is_none() && !p.small_weight);
    assert_eq!(p.second, vec![q(0, 1)]);
    let p = pole_sets(&q(6, 1), 2);
    assert!(p.first.is_empty() && p.isolated.is_none());
    assert_eq!(p.second, vec![q(0, 1), q(1, 2)]);
    assert_eq!(pole_sets(&q(6, 1), 4).second, vec![q(0, 1), q(1, 2), q(1, 1)]);
    let p = pole_sets(&q(1, 1), 2);
    assert!(p.small_weight);
    assert_eq!(p.first, vec![q(1, 1)]);
    // 2k − n ∈ 4ℤ leaves the isolated pole (n+2)/4.
    assert_eq!(pole_sets(&q(5, 1), 2).isolated, Some(q(1, 1)));
    let h = pole_sets(&q(1, 2), 3);
    assert!(h.second.is_empty());
    assert_eq!(h.first, vec![q(5, 4), q(7, 4)]);
}

proptest! {
    #[test]
    fn pole_sets_stay_in_range(k2 in 1i64..40, n in 1usize..6) {
        let k = q(k2, 2);
        let p = pole_sets(&k, n);
        let lo = q(0, 1);
        let hi = q(n as i64 + 1, 1);
        prop_assert!(p.first.iter().chain(p.second.iter()).all(|x| *x >= lo && *x <= hi));
        prop_assert!(p.first.len() <= n + 2 && p.second.len() <= n / 2 + 1);
    }
}

/// `S[u + c·x/p] ∈ ℤ_p` for all residues `u`, `c`: the overlattice test by
/// brute force over the generating cosets.
fn overlattice_integral(s: &RatMatrix, x: &[i64], p: i64) -> bool {
    let l = x.len();
    let count = (p as u64).pow(l as u32);
    (0..count).all(|mut code| {
        let u: Vec<i64> = (0..l)
            .map(|_| {
                let d = (code % p as u64) as i64;
                code /= p as u64;
                d
            })
            .collect();
        (0..p).all(|c| {
            let y: Vec<Rational> = (0..l).map(|i| q(u[i] * p + c * x[i], p)).collect();
            let mut v = q(0, 1);
            for i in 0..l {
                for j in 0..l {
                    v += &y[i] * s.get(i, j) * &y[j];
                }
            }
            v.is_integer() || (v.denom() % p) != 0.into()
        })
    })
}

#[test]
fn maximality_predicate() {
    let one = RatMatrix::identity(1);
    for p in [2, 3, 5] {
        assert!(m_plus_check(&one, p).unwrap(), "S = 1 at {p}");
        let sq = RatMatrix::from_i64(1, 1, &[(p * p) as i64]);
        assert!(!m_plus_check(&sq, p).unwrap(), "S = p² at {p}");
        assert!(overlattice_integral(&sq, &[1], p as i64));
        assert!(!overlattice_integral(&one, &[1], p as i64));
    }
    let two = RatMatrix::identity(2);
    assert!(m_plus_check(&two, 5).unwrap());
    let nonzero: Vec<[i64; 2]> = (0..25).filter(|&c| c != 0).map(|c| [c % 5, c / 5]).collect();
    assert_eq!(nonzero.len(), 24);
    assert!(nonzero.iter().all(|x| !overlattice_integral(&two, x, 5)));
    // At 2 the dual class (1/2, 1/2) satisfies 2·S[x] ∈ ℤ₂, so L′ ≠ L.
    assert!(!m_plus_check(&two, 2).unwrap());
    // A unimodular-at-3 binary form, and a form that fails at 3 through the dual.
    assert!(m_plus_check(&RatMatrix::from_i64(2, 2, &[1, 0, 0, 2]), 3).unwrap());
    assert!(!m_plus_check(&RatMatrix::from_i64(1, 1, &[3]), 3).unwrap_or(true) || overlattice_integral(&RatMatrix::from_i64(1, 1, &[3]), &[1], 3));
    assert!(m_plus_check(&RatMatrix::identity(1), 4).is_err());
}
