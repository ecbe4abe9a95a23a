//! Completeness and disjointness of the coset decompositions against a
//! brute-force oracle: random products `γ₁ diag[ξ̃, ξ] γ₂` with `γᵢ` in the
//! level group are classified by canonical key, and the classes found
//! must be exactly the classes of the representatives.

mod support;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sjf_exact::RatMatrix;
use sjf_hecke::{bad_closure_check, diag_element, full_coset_reps, jacobi_coset_reps, CosetSet};
use std::collections::HashSet;
use support::{index, random_level_element};

/// Classes reached by random double-coset products, stopping once no new
/// class has appeared for `patience` samples.
fn oracle_classes(set: &mut CosetSet, xi: &RatMatrix, level: i64, seed: u64, patience: usize) -> HashSet<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = set.l();
    let alpha = diag_element(xi, l).unwrap();
    let mut found = HashSet::new();
    let mut quiet = 0;
    while quiet < patience {
        let g1 = random_level_element(&mut rng, l, level);
        let g2 = random_level_element(&mut rng, l, level);
        let x = g1.compose(&alpha).unwrap().compose(&g2).unwrap();
        if found.insert(set.keyer_mut().key(&x).unwrap()) {
            quiet = 0;
        } else {
            quiet += 1;
        }
    }
    found
}

#[test]
fn bad_prime_counts_match_the_oracle() {
    for p in [2i64, 3, 5] {
        for l in [1usize, 2] {
            let xi = RatMatrix::from_i64(1, 1, &[p]);
            let mut set = jacobi_coset_reps(&xi, &index(l, p as u64, 4)).unwrap();
            assert_eq!(set.len() as i64, p.pow(l as u32 + 2), "p = {p}, l = {l}");
            assert!(set.is_disjoint());
            let found = oracle_classes(&mut set, &xi, p, 7 + p as u64, 4000);
            let reps: HashSet<Vec<u8>> = set.keys().iter().cloned().collect();
            assert_eq!(found, reps, "p = {p}, l = {l}: oracle found {} classes", found.len());
        }
    }
}

#[test]
fn full_decomposition_at_a_good_prime_matches_the_oracle() {
    // 12 = (p² + p)·p cosets for p = 2 and 96 = (p⁴ + p³)·p² for p² = 4.
    for (m, want) in [(2u64, 12usize), (3, 36), (4, 96)] {
        let wi = index(1, 1, 6);
        let mut set = full_coset_reps(m, &wi).unwrap();
        assert_eq!(set.len(), want, "m = {m}");
        assert!(set.is_disjoint());
        let xi = RatMatrix::from_i64(1, 1, &[m as i64]);
        let found = oracle_classes(&mut set, &xi, 1, 100 + m, 4000);
        let reps: HashSet<Vec<u8>> = set.keys().iter().cloned().collect();
        assert_eq!(found, reps, "m = {m}");
    }
}

#[test]
fn bad_prime_products_close_up() {
    let p = RatMatrix::from_i64(1, 1, &[2]);
    let report = bad_closure_check(&p, &p, &index(1, 2, 4)).unwrap();
    assert!(report.closed());
    assert_eq!(report.products, 64);
    // Products hit every coset of the ξ = 4 decomposition exactly once.
    assert_eq!(report.coverage.get(&vec![BigInt::from(4)]), Some(&(64, 64)));

    let q = RatMatrix::from_i64(1, 1, &[3]);
    let report = bad_closure_check(&p, &q, &index(1, 6, 4)).unwrap();
    assert!(report.closed());
    assert_eq!(report.coverage.get(&vec![BigInt::from(6)]), Some(&(216, 216)));

    let one = RatMatrix::identity(1);
    assert!(bad_closure_check(&one, &one, &index(1, 2, 4)).unwrap().closed());
}

#[test]
fn degree_two_set_is_disjoint_with_the_predicted_size() {
    let xi = RatMatrix::from_i64(2, 2, &[1, 0, 0, 2]);
    let set = jacobi_coset_reps(&xi, &index(1, 2, 4)).unwrap();
    assert_eq!(set.len(), 48);
    assert!(set.is_disjoint());
}
