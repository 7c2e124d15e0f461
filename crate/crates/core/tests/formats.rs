mod common;

use std::path::PathBuf;

use diffsat::io::{
    parse_dimacs_cnf, parse_graph, parse_instance, parse_query, parse_xnf, write_graph, write_instance, InstanceFormat,
};
use diffsat::route::{route, Fragment, SolveOptions};
use diffsat::{fixtures, DifferQuery, Error, Instance};
use proptest::prelude::*;
use rand::Rng;

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn data_files_match_fixtures() {
    assert_eq!(parse_xnf(&data("three_components.xnf")).unwrap(), fixtures::three_component_two_affine());
    assert_eq!(parse_xnf(&data("worked_example.xnf")).unwrap(), fixtures::worked_example_affine());
    assert_eq!(parse_dimacs_cnf(&data("mixed_components.cnf")).unwrap(), fixtures::mixed_component_22cnf());
    assert_eq!(parse_dimacs_cnf(&data("xor_pair.cnf")).unwrap(), fixtures::xor_pair_cnf());
}

#[test]
fn data_files_route() {
    let opts = SolveOptions::default();
    let q = DifferQuery::max(1);
    for (name, fragment) in [
        ("three_components.xnf", Fragment::TwoAffine),
        ("worked_example.xnf", Fragment::AffineGeneral),
        ("mixed_components.cnf", Fragment::TwoTwoCnf),
        ("xor_pair.cnf", Fragment::Hitting),
    ] {
        let file = parse_instance(&data(name)).unwrap();
        let expected = if name.ends_with(".cnf") { InstanceFormat::DimacsCnf } else { InstanceFormat::Xnf };
        assert_eq!(file.format, expected);
        assert_eq!(route(&file, q, &opts).unwrap().fragment, fragment, "{name}");
    }
}

#[test]
fn malformed_inputs() {
    for text in ["", "p cnf 2\n", "p cnf 2 1\n1 3 0\n", "p cnf 1 2\n1 0\n", "p xnf 2 1\ne 2 1 0\n", "p foo 1 1\n"] {
        assert!(matches!(parse_instance(text), Err(Error::Parse { .. })), "{text:?}");
    }
    assert!(parse_query("mode sideways\nd 1\n").is_err());
    assert!(parse_query("mode max\n").is_err());
    assert!(parse_graph("p edge 2 1\ne 1 1\n").is_err());
}

proptest! {
    #[test]
    fn random_instances_round_trip(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=12);
        let instances: [Instance; 3] = [
            common::random_affine(&mut rng, n, n, 4).into(),
            common::random_22cnf(&mut rng, n).into(),
            common::random_hitting(&mut rng, n, 5).into(),
        ];
        for instance in instances {
            let text = write_instance(&instance);
            prop_assert_eq!(parse_instance(&text).unwrap().instance, instance);
        }
        for g in diffsat::reductions::SimpleGraph::all_on(n.min(4)) {
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }
}

#[test]
fn fuzz_seeds_round_trip() {
    let root: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fuzz", "corpus"].iter().collect();
    let mut seen = 0;
    for target in std::fs::read_dir(&root).unwrap() {
        let target = target.unwrap().path();
        let name = target.file_name().unwrap().to_str().unwrap().to_owned();
        for seed in std::fs::read_dir(&target).unwrap() {
            let text = std::fs::read_to_string(seed.unwrap().path()).unwrap();
            let ok = match name.as_str() {
                "parse_dimacs_cnf" => {
                    let phi = parse_dimacs_cnf(&text).unwrap();
                    parse_dimacs_cnf(&diffsat::io::write_dimacs_cnf(&phi)).unwrap() == phi
                }
                "parse_xnf" => {
                    let sys = parse_xnf(&text).unwrap();
                    parse_xnf(&diffsat::io::write_xnf(&sys)).unwrap() == sys
                }
                "parse_query" => {
                    let q = parse_query(&text).unwrap();
                    parse_query(&diffsat::io::write_query(&q)).unwrap() == q
                }
                "parse_graph" => {
                    let g = parse_graph(&text).unwrap();
                    parse_graph(&write_graph(&g)).unwrap() == g
                }
                "parse_instance" => {
                    let file = parse_instance(&text).unwrap();
                    parse_instance(&write_instance(&file.instance)).unwrap().instance == file.instance
                }
                other => panic!("unknown fuzz target {other}"),
            };
            assert!(ok, "{name}");
            seen += 1;
        }
    }
    assert!(seen >= 10);
}
