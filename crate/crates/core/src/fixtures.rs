//! Small named instances used across tests, docs and examples.

use crate::model::{AffineSystem, CnfFormula};

/// Variable names of [`three_component_two_affine`], in index order.
pub const THREE_COMPONENT_NAMES: [&str; 15] =
    ["u", "a", "b", "c", "v", "s", "t", "p", "q", "r", "f", "g", "w", "z", "h"];

/// Sixteen `x ⊕ y = 1` equations whose graph has three bipartite
/// components of sizes 5, 4 and 6.
pub fn three_component_two_affine() -> AffineSystem {
    let idx = |name: &str| THREE_COMPONENT_NAMES.iter().position(|&n| n == name).unwrap();
    let pairs = [
        ("u", "a"),
        ("u", "b"),
        ("u", "c"),
        ("v", "a"),
        ("v", "b"),
        ("v", "c"),
        ("s", "p"),
        ("s", "q"),
        ("t", "p"),
        ("t", "q"),
        ("r", "f"),
        ("g", "w"),
        ("g", "f"),
        ("g", "z"),
        ("h", "f"),
        ("h", "z"),
    ];
    let eqs: Vec<[usize; 2]> = pairs.iter().map(|&(x, y)| [idx(x), idx(y)]).collect();
    let refs: Vec<(&[usize], bool)> = eqs.iter().map(|e| (&e[..], true)).collect();
    AffineSystem::from_indices(15, &refs).expect("indices in range")
}

/// Variable names of [`mixed_component_22cnf`], in index order.
pub const MIXED_COMPONENT_NAMES: [&str; 17] =
    ["x", "y", "z", "c", "b", "a", "t", "p", "q", "r", "s", "u", "v", "w", "f", "g", "h"];

/// A (2,2)-CNF formula on 17 variables with one odd-cycle-like, one
/// even-cycle-like and one path-like component.
pub fn mixed_component_22cnf() -> CnfFormula {
    CnfFormula::from_dimacs(
        17,
        &[
            &[1, 2],
            &[2, -3],
            &[-3, -4],
            &[4, 5],
            &[5, 6],
            &[-6, -1],
            &[7, 8],
            &[8, -9],
            &[-9, 10],
            &[-10, 11],
            &[-11, -7],
            &[-12, -13],
            &[13, 14],
            &[14, 15],
            &[-15, 16],
            &[16, -17],
        ],
    )
    .expect("literals in range")
}

/// `x ⊕ y ⊕ z = 1, u ⊕ y = 1, w ⊕ z = 1` with `x, y, z, u, w` as 0..5.
pub fn worked_example_affine() -> AffineSystem {
    AffineSystem::from_indices(5, &[(&[0, 1, 2], true), (&[3, 1], true), (&[4, 2], true)]).expect("indices in range")
}

/// `(x ∨ y) ∧ (¬x ∨ ¬y)`.
pub fn xor_pair_cnf() -> CnfFormula {
    CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).expect("literals in range")
}
