#![allow(dead_code)]

use diffsat::reductions::SetSystem;
use diffsat::{AffineEquation, AffineSystem, CnfFormula, Literal, VarId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `m` equations over `n` variables, each with `1..=max_arity` distinct
/// variables (occasionally empty) and a random right-hand side.
pub fn random_affine(rng: &mut ChaCha8Rng, n: usize, m: usize, max_arity: usize) -> AffineSystem {
    let mut eqs = Vec::with_capacity(m);
    for _ in 0..m {
        let arity = if rng.gen_bool(0.03) { 0 } else { rng.gen_range(1..=max_arity.min(n).max(1)) };
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        vars.truncate(arity.min(n));
        eqs.push(AffineEquation::from_indices(&vars, rng.gen()));
    }
    AffineSystem::new(n, eqs).unwrap()
}

/// A random (2,2)-CNF formula: binary clauses over variables with spare
/// occurrences, plus the odd unit clause and repeated clause.
pub fn random_22cnf(rng: &mut ChaCha8Rng, n: usize) -> CnfFormula {
    let mut slots: Vec<usize> = (0..n).flat_map(|v| [v, v]).collect();
    slots.shuffle(rng);
    let keep = rng.gen_range(0..=slots.len());
    slots.truncate(keep);
    let lit = |rng: &mut ChaCha8Rng, v: usize| Literal { var: VarId(v), positive: rng.gen() };
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    while let Some(a) = slots.pop() {
        if rng.gen_bool(0.08) {
            clauses.push(vec![lit(rng, a)]);
            continue;
        }
        let Some(b) = slots.pop() else {
            clauses.push(vec![lit(rng, a)]);
            break;
        };
        let clause = vec![lit(rng, a), lit(rng, b)];
        // repeat the clause when both variables still have a spare slot
        if rng.gen_bool(0.05) {
            if let (Some(i), Some(j)) = (slots.iter().position(|&s| s == a), slots.iter().position(|&s| s == b)) {
                if i != j {
                    slots.retain(|&s| s != a && s != b);
                    clauses.push(clause.clone());
                }
            }
        }
        clauses.push(clause);
    }
    let phi = CnfFormula::new(n, clauses).unwrap();
    assert!(diffsat::twosat::check_22cnf(&phi));
    phi
}

/// Grows a hitting formula by rejection sampling: a random clause is kept
/// only if it clashes with every clause already present.
pub fn random_hitting(rng: &mut ChaCha8Rng, n: usize, m: usize) -> CnfFormula {
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    for _ in 0..m * 30 {
        if clauses.len() == m {
            break;
        }
        let len = rng.gen_range(1..=n);
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        let clause: Vec<Literal> =
            vars[..len].iter().map(|&v| Literal { var: VarId(v), positive: rng.gen() }).collect();
        let clashes_all =
            clauses.iter().all(|c| c.iter().any(|l| clause.iter().any(|k| k.var == l.var && k.positive != l.positive)));
        if clashes_all {
            clauses.push(clause);
        }
    }
    let phi = CnfFormula::new(n, clauses).unwrap();
    assert!(diffsat::hitting::is_hitting(&phi));
    phi
}

pub fn random_set_system(rng: &mut ChaCha8Rng, max_universe: usize, max_sets: usize) -> SetSystem {
    let u = rng.gen_range(1..=max_universe);
    let sets = rng.gen_range(0..=max_sets);
    let family = (0..sets).map(|_| (0..u).filter(|_| rng.gen_bool(0.4)).collect()).collect();
    let k = rng.gen_range(1..=u);
    SetSystem::new(u, family, k).unwrap()
}
