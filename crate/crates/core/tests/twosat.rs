mod common;

use diffsat::oracle::{brute_force_report, oracle_differ_from_report};
use diffsat::twosat::{
    build_variable_graph, classify_components, differ_22, exact_differ_22, max_distance_22, unit_propagate,
    ComponentKind, VariableGraph,
};
use diffsat::{CnfFormula, DifferQuery, Error, Instance};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matches_oracle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=12);
        let phi = common::random_22cnf(&mut rng, n);
        let instance = Instance::Cnf(phi.clone());
        let report = brute_force_report(&instance, 20).unwrap();
        prop_assert_eq!(max_distance_22(&phi).unwrap(), report.max_distance);
        for d in 0..=n + 1 {
            for q in [DifferQuery::max(d), DifferQuery::exact(d)] {
                let got = differ_22(&phi, q).unwrap();
                let want = oracle_differ_from_report(&instance, &report, q).unwrap();
                prop_assert_eq!(got.decision, want.decision, "{:?}", q);
                prop_assert!(instance.witness_is_valid(&q, &got));
            }
        }
    }

    #[test]
    fn graph_shape(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=14);
        let phi = common::random_22cnf(&mut rng, n);
        let Some(p) = unit_propagate(&phi) else { return Ok(()) };
        let g = build_variable_graph(&p.formula).unwrap();
        prop_assert_eq!(g.matching_edge_count(), n);
        prop_assert!((0..g.num_vertices()).all(|v| g.clause_degree(v) + g.clause_degree(VariableGraph::partner(v)) <= 2));
        let reports = classify_components(&g).unwrap();
        let covered: usize = reports.iter().map(|r| r.vars.len()).sum();
        prop_assert_eq!(covered, n);
        for r in &reports {
            prop_assert!(r.max_differ() <= r.vars.len());
            if r.kind == ComponentKind::OddCycleLike {
                prop_assert_eq!(r.max_differ(), r.vars.len() - 1);
            }
        }
    }
}

#[test]
fn rejects_other_formulas() {
    let wide = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
    assert!(matches!(exact_differ_22(&wide, 1), Err(Error::NotTwoTwoCnf(_))));
    let busy = CnfFormula::from_dimacs(3, &[&[1, 2], &[1, 3], &[-1, 2]]).unwrap();
    assert!(matches!(exact_differ_22(&busy, 1), Err(Error::NotTwoTwoCnf(_))));
}

#[test]
fn unsatisfiable_units() {
    let phi = CnfFormula::from_dimacs(1, &[&[1], &[-1]]).unwrap();
    assert!(unit_propagate(&phi).is_none());
    assert_eq!(differ_22(&phi, DifferQuery::max(0)).unwrap().decision, diffsat::Decision::UnsatNo);
}
