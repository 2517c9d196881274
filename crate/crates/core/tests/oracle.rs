use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use permroots::{
    brute_force_roots, enumerate_roots, has_mth_root, root_count, OracleConfig, Permutation,
};

fn random_perm(n: usize, rng: &mut impl rand::Rng) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::from_images(image).unwrap()
}

#[test]
fn counts_match_power_tally_for_all_m_up_to_12() {
    for n in 0..=6 {
        let perms: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|p| Permutation::from_images(p).unwrap())
            .collect();
        for m in 2..=12u64 {
            let mut tally: HashMap<Permutation, usize> = HashMap::new();
            for tau in &perms {
                *tally.entry(tau.power(m)).or_default() += 1;
            }
            for sigma in &perms {
                let expected = tally.get(sigma).copied().unwrap_or(0);
                let count = root_count(&sigma.cycle_type(), m).unwrap();
                assert_eq!(
                    *count.value(),
                    BigUint::from(expected),
                    "sigma={sigma} m={m}"
                );
            }
        }
    }
}

#[test]
fn sampled_oracle_equivalence_in_s7_and_s8() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let cfg = OracleConfig::default();
    for n in [7usize, 8] {
        let mut samples: Vec<Permutation> = (0..3).map(|_| random_perm(n, &mut rng)).collect();
        samples.push(Permutation::identity(n));
        for sigma in samples {
            for m in [2u64, 3, 4, 6] {
                let scanned: BTreeSet<_> = brute_force_roots(&sigma, m, &cfg)
                    .unwrap()
                    .into_iter()
                    .collect();
                let built: BTreeSet<_> = enumerate_roots(&sigma, m).unwrap().collect();
                assert_eq!(built, scanned, "sigma={sigma} m={m}");
                assert_eq!(
                    built.is_empty(),
                    !has_mth_root(&sigma.cycle_type(), m).unwrap()
                );
            }
        }
    }
}

#[test]
fn enumeration_count_matches_formula_in_s7() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let sigma = random_perm(7, &mut rng);
        for m in [2u64, 3, 4, 5, 6, 8, 9, 12] {
            let streamed = enumerate_roots(&sigma, m).unwrap().count();
            let count = root_count(&sigma.cycle_type(), m).unwrap();
            assert_eq!(
                *count.value(),
                BigUint::from(streamed),
                "sigma={sigma} m={m}"
            );
        }
    }
}

#[test]
fn larger_identity_roots_stream_lazily() {
    // 1^12 has 140152 square roots; taking a prefix must not build them all.
    let sigma = Permutation::identity(12);
    let first: Vec<_> = enumerate_roots(&sigma, 2).unwrap().take(5).collect();
    assert_eq!(first.len(), 5);
    assert!(first.iter().all(|tau| tau.power(2) == sigma));
    assert_eq!(
        root_count(&sigma.cycle_type(), 2).unwrap().to_string(),
        "140152"
    );
}

#[test]
fn roots_are_emitted_in_a_stable_order() {
    let sigma: Permutation = "2 1 4 3 5 6".parse().unwrap();
    let a: Vec<_> = enumerate_roots(&sigma, 2).unwrap().collect();
    let b: Vec<_> = enumerate_roots(&sigma, 2).unwrap().collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), 4);
}
