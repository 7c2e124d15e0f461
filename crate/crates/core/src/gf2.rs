//! Gaussian elimination over GF(2).
//!
//! [`solve_affine`] reduces a parity system to reduced row-echelon form and
//! reports its solution set as a list of free variables plus, for every
//! remaining variable, the XOR of free variables (and a constant) it is
//! forced to equal.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{AffineSystem, Assignment, VarId};

/// Packed bit row. Width is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub(crate) fn new(width: usize) -> Self {
        BitRow { words: vec![0; width.div_ceil(64)] }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    #[inline]
    pub(crate) fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    #[inline]
    pub(crate) fn or_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }
}

/// `target = constant ⊕ (XOR of support)`, all support variables free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedExpr {
    pub target: VarId,
    pub support: Vec<VarId>,
    pub constant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceStatus {
    Inconsistent,
    Consistent,
}

/// Solution set of an affine system: `2^|free|` solutions, one for each
/// assignment of the free variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub n: usize,
    pub status: SpaceStatus,
    /// Sorted ascending.
    pub free: Vec<VarId>,
    /// Sorted by target.
    pub forced: Vec<ForcedExpr>,
}

impl SolutionSpace {
    pub fn is_consistent(&self) -> bool {
        self.status == SpaceStatus::Consistent
    }

    pub fn rank(&self) -> usize {
        self.forced.len()
    }

    /// Position of `var` in the free list.
    pub fn free_position(&self, var: VarId) -> Option<usize> {
        self.free.binary_search(&var).ok()
    }

    /// Builds the solution selected by `free_values` (indexed like
    /// [`SolutionSpace::free`]).
    pub fn extend(&self, free_values: &[bool]) -> Result<Assignment> {
        if !self.is_consistent() {
            return Err(Error::InconsistentSpace);
        }
        if free_values.len() != self.free.len() {
            return Err(Error::LengthMismatch { expected: self.free.len(), actual: free_values.len() });
        }
        let mut sigma = Assignment::zeros(self.n);
        for (v, &b) in self.free.iter().zip(free_values) {
            sigma.set(*v, b);
        }
        for f in &self.forced {
            let value = f.support.iter().fold(f.constant, |acc, v| acc ^ sigma.get(*v));
            sigma.set(f.target, value);
        }
        Ok(sigma)
    }

    /// For each free position, the indices (into `forced`) of the forced
    /// expressions whose support contains it.
    pub fn dependents_by_free(&self) -> Vec<Vec<usize>> {
        let mut deps = vec![Vec::new(); self.free.len()];
        for (k, f) in self.forced.iter().enumerate() {
            for v in &f.support {
                let pos = self.free_position(*v).expect("support is free");
                deps[pos].push(k);
            }
        }
        deps
    }
}

/// Reduced row-echelon elimination; pivots go to the lowest eligible
/// variable index and pivot variables become forced.
pub fn solve_affine(sys: &AffineSystem) -> SolutionSpace {
    let n = sys.num_vars();
    let mut rows: Vec<BitRow> = sys
        .equations()
        .iter()
        .map(|eq| {
            let mut row = BitRow::new(n + 1);
            for v in eq.vars() {
                row.flip(v.0);
            }
            if eq.rhs() {
                row.flip(n);
            }
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    if rows[rank..].iter().any(|r| r.get(n)) {
        return SolutionSpace { n, status: SpaceStatus::Inconsistent, free: Vec::new(), forced: Vec::new() };
    }

    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<VarId> = (0..n).filter(|c| !pivot_set.contains(c)).map(VarId).collect();
    let mut forced: Vec<ForcedExpr> = pivots
        .iter()
        .enumerate()
        .map(|(i, &p)| ForcedExpr {
            target: VarId(p),
            support: free.iter().copied().filter(|v| rows[i].get(v.0)).collect(),
            constant: rows[i].get(n),
        })
        .collect();
    forced.sort_by_key(|f| f.target);

    SolutionSpace { n, status: SpaceStatus::Consistent, free, forced }
}

/// The first `limit` solutions, ordered lexicographically by the free
/// variables' bits (lowest-indexed free variable most significant).
pub fn enumerate_solutions(space: &SolutionSpace, limit: usize) -> Result<Vec<Assignment>> {
    if !space.is_consistent() {
        return Err(Error::InconsistentSpace);
    }
    let f = space.free.len();
    let total = if f >= usize::BITS as usize { usize::MAX } else { 1usize << f };
    let count = total.min(limit);
    let mut out = Vec::with_capacity(count);
    let mut free_values = vec![false; f];
    for k in 0..count {
        for (j, slot) in free_values.iter_mut().enumerate() {
            let shift = f - 1 - j;
            *slot = shift < usize::BITS as usize && (k >> shift) & 1 == 1;
        }
        out.push(space.extend(&free_values)?);
    }
    Ok(out)
}

/// Forced targets whose support meets `subset` in an odd number of
/// variables. Flipping exactly the free variables in `subset` flips
/// exactly these forced variables.
pub fn odd_dependents(space: &SolutionSpace, subset: &[VarId]) -> Result<Vec<VarId>> {
    if !space.is_consistent() {
        return Err(Error::InconsistentSpace);
    }
    let chosen: BTreeSet<VarId> = subset.iter().copied().collect();
    if let Some(v) = chosen.iter().find(|v| space.free_position(**v).is_none()) {
        return Err(Error::NotFree { var: v.0 });
    }
    Ok(space
        .forced
        .iter()
        .filter(|f| f.support.iter().filter(|v| chosen.contains(v)).count() % 2 == 1)
        .map(|f| f.target)
        .collect())
}
