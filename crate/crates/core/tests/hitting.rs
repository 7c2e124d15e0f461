mod common;

use diffsat::hitting::{
    count_exact_pairs, count_models, decide_differ_hitting, is_hitting, HittingOptions, PairCounter,
};
use diffsat::oracle::brute_force_report;
use diffsat::{fixtures, CnfFormula, DifferQuery, Error, Instance};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counts_match_oracle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(0..=6);
        let phi = common::random_hitting(&mut rng, n, m);
        let report = brute_force_report(&Instance::Cnf(phi.clone()), 20).unwrap();
        prop_assert_eq!(count_models(&phi).unwrap(), BigUint::from(report.satisfying.len()));
        let counter = PairCounter::new(&phi).unwrap();
        for d in 0..=n {
            prop_assert_eq!(count_exact_pairs(&phi, d).unwrap(), BigUint::from(report.count_at(d)));
            prop_assert_eq!(counter.at_least(d), BigUint::from(report.count_at_least(d)));
        }
    }

    #[test]
    fn decisions_follow_counts(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=10);
        let phi = common::random_hitting(&mut rng, n, 5);
        let instance = Instance::Cnf(phi.clone());
        let counter = PairCounter::new(&phi).unwrap();
        for d in 0..=n + 1 {
            for q in [DifferQuery::max(d), DifferQuery::exact(d)] {
                let ans = decide_differ_hitting(&phi, q, HittingOptions::default()).unwrap();
                let count = match q.mode {
                    diffsat::Mode::Max => counter.at_least(d),
                    diffsat::Mode::Exact => counter.exact(d),
                };
                prop_assert_eq!(ans.is_yes(), count > BigUint::from(0u32));
                prop_assert!(instance.witness_is_valid(&q, &ans));
                prop_assert!(!ans.is_yes() || ans.witness.is_some());
            }
        }
    }
}

#[test]
fn xor_pair_counts() {
    let phi = fixtures::xor_pair_cnf();
    assert_eq!(count_exact_pairs(&phi, 2).unwrap(), BigUint::from(2u32));
    assert_eq!(count_exact_pairs(&phi, 1).unwrap(), BigUint::from(0u32));
}

#[test]
fn large_counts_are_exact() {
    // a single clause over 100 variables rules out one assignment
    let clause: Vec<i64> = (1..=100).collect();
    let phi = CnfFormula::from_dimacs(100, &[&clause]).unwrap();
    let all = BigUint::from(1u32) << 100;
    assert_eq!(count_models(&phi).unwrap(), &all - 1u32);
    // pairs at distance 100: every complementary pair minus the two touching the excluded model
    assert_eq!(count_exact_pairs(&phi, 100).unwrap(), all - 2u32);
}

#[test]
fn rejects_non_hitting() {
    let phi = CnfFormula::from_dimacs(2, &[&[1], &[2]]).unwrap();
    assert!(!is_hitting(&phi));
    assert!(matches!(count_exact_pairs(&phi, 1), Err(Error::NotHitting { first: 0, second: 1 })));
}
