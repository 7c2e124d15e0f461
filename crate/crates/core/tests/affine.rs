mod common;

use diffsat::affine::{
    exact_differ_free_enum, exact_differ_free_enum_capped, kernelize, max_differ_fpt, max_differ_kernelized,
    two_affine_differ, KernelResult,
};
use diffsat::gf2::{enumerate_solutions, solve_affine};
use diffsat::oracle::{brute_force_report, oracle_differ_from_report, OracleReport};
use diffsat::{AffineSystem, DifferQuery, Error, Instance};
use proptest::prelude::*;
use rand::Rng;

struct Reference {
    instance: Instance,
    report: OracleReport,
}

impl Reference {
    fn new(sys: &AffineSystem) -> Self {
        let instance = Instance::Affine(sys.clone());
        let report = brute_force_report(&instance, 20).unwrap();
        Reference { instance, report }
    }

    fn agree(&self, q: DifferQuery, got: diffsat::DifferAnswer) {
        let want = oracle_differ_from_report(&self.instance, &self.report, q).unwrap();
        assert_eq!(got.decision, want.decision, "{q:?} on {:?}", self.instance);
        assert!(self.instance.witness_is_valid(&q, &got));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solution_space_matches_evaluation(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(0..=n + 2);
        let sys = common::random_affine(&mut rng, n, m, 4);
        let space = solve_affine(&sys);
        let report = brute_force_report(&sys.clone().into(), 20).unwrap();
        if !space.is_consistent() {
            prop_assert!(report.satisfying.is_empty());
        } else {
            let mut listed = enumerate_solutions(&space, 1 << 12).unwrap();
            listed.sort();
            prop_assert_eq!(listed, report.models());
            prop_assert_eq!(space.rank() + space.free.len(), n);
        }
    }

    #[test]
    fn general_solvers_match_oracle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=n);
        let sys = common::random_affine(&mut rng, n, m, 5);
        let reference = Reference::new(&sys);
        for d in 0..=n + 1 {
            reference.agree(DifferQuery::max(d), max_differ_fpt(&sys, d).unwrap());
            reference.agree(DifferQuery::max(d), max_differ_kernelized(&sys, d).unwrap());
            reference.agree(DifferQuery::exact(d), exact_differ_free_enum(&sys, d).unwrap());
        }
    }

    #[test]
    fn two_affine_matches_oracle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=n + 3);
        let mut sys = common::random_affine(&mut rng, n, m, 2);
        if rng.gen_bool(0.5) {
            sys = sys.with_weights((0..n).map(|_| rng.gen_range(1..=3)).collect()).unwrap();
        }
        let total: u64 = sys.weights().iter().sum();
        let reference = Reference::new(&sys);
        for d in 0..=total as usize + 1 {
            for q in [DifferQuery::max(d), DifferQuery::exact(d)] {
                reference.agree(q, two_affine_differ(&sys, q).unwrap());
            }
        }
    }

    #[test]
    fn kernel_preserves_answer(seed in any::<u64>(), d in 0usize..=8) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=14);
        let m = rng.gen_range(n / 2..=n);
        let sys = common::random_affine(&mut rng, n, m, 3);
        let direct = max_differ_fpt(&sys, d).unwrap();
        match kernelize(&sys, d).unwrap() {
            KernelResult::Decided(ans) => prop_assert_eq!(ans.decision, direct.decision),
            KernelResult::Reduced(k) => {
                prop_assert!(k.system.num_vars() <= (d - 1) * (d - 1));
                prop_assert!(k.system.equations().len() <= (d - 1) * (d - 2));
                let ans = max_differ_fpt(&k.system, k.d).unwrap();
                prop_assert_eq!(ans.decision, direct.decision);
                for model in enumerate_solutions(&solve_affine(&k.system), 1 << 12).unwrap() {
                    prop_assert!(sys.evaluate(&k.lift(&model).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn exact_enumeration_respects_cap() {
    let sys = AffineSystem::new(30, vec![]).unwrap();
    assert_eq!(exact_differ_free_enum_capped(&sys, 3, 24), Err(Error::FreeVariableCap { free: 30, cap: 24 }));
    assert!(exact_differ_free_enum_capped(&sys, 3, 30).unwrap().is_yes());
}

#[test]
fn two_affine_rejects_wide_equations() {
    let sys = AffineSystem::from_indices(3, &[(&[0, 1, 2], true)]).unwrap();
    assert!(matches!(two_affine_differ(&sys, DifferQuery::max(1)), Err(Error::NotTwoAffine { index: 0, arity: 3 })));
}
