//! Exact pair counting for hitting formulas.
//!
//! In a hitting formula every pair of clauses clashes, so an assignment
//! falsifies at most one clause. Inclusion–exclusion over the falsified
//! clauses of both members of a pair then gives a closed form for the
//! number of ordered pairs of models at distance exactly `d`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{Assignment, CnfFormula, DifferAnswer, DifferQuery, Instance, Mode};
use crate::oracle;

/// First pair of clauses that does not clash, if any.
pub fn hitting_violation(phi: &CnfFormula) -> Option<(usize, usize)> {
    let clauses = phi.clauses();
    for i in 0..clauses.len() {
        for j in i + 1..clauses.len() {
            let clash = clauses[i].literals().iter().any(|l| clauses[j].polarity_of(l.var) == Some(!l.positive));
            if !clash {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_hitting(phi: &CnfFormula) -> bool {
    hitting_violation(phi).is_none()
}

fn require_hitting(phi: &CnfFormula) -> Result<()> {
    match hitting_violation(phi) {
        Some((first, second)) => Err(Error::NotHitting { first, second }),
        None => Ok(()),
    }
}

/// Number of falsifying assignments: `Σ_C 2^(n - |C|)`.
pub fn count_unsat(phi: &CnfFormula) -> Result<BigUint> {
    require_hitting(phi)?;
    let n = phi.num_vars();
    Ok(phi.clauses().iter().map(|c| BigUint::one() << (n - c.len())).sum())
}

/// Number of satisfying assignments.
pub fn count_models(phi: &CnfFormula) -> Result<BigUint> {
    let unsat = count_unsat(phi)?;
    Ok((BigUint::one() << phi.num_vars()) - unsat)
}

/// How two clauses overlap, as used by the pair-count formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClausePairProfile {
    pub i: usize,
    pub j: usize,
    /// Shared variables with opposite polarity.
    pub lambda: usize,
    /// `|vars(Ci) \ vars(Cj)|`
    pub only_i: usize,
    /// `|vars(Cj) \ vars(Ci)|`
    pub only_j: usize,
    /// `n - |vars(Ci) ∪ vars(Cj)|`
    pub outside: usize,
}

pub fn clause_pair_profile(phi: &CnfFormula, i: usize, j: usize) -> ClausePairProfile {
    let (ci, cj) = (&phi.clauses()[i], &phi.clauses()[j]);
    let mut lambda = 0;
    let mut shared = 0;
    for l in ci.literals() {
        if let Some(p) = cj.polarity_of(l.var) {
            shared += 1;
            if p != l.positive {
                lambda += 1;
            }
        }
    }
    ClausePairProfile {
        i,
        j,
        lambda,
        only_i: ci.len() - shared,
        only_j: cj.len() - shared,
        outside: phi.num_vars() - (ci.len() + cj.len() - shared),
    }
}

/// Pascal triangle up to row `n`.
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut row = vec![BigUint::one(); r + 1];
            for k in 1..r {
                row[k] = &rows[r - 1][k - 1] + &rows[r - 1][k];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    /// `C(n, k)`, zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            BigUint::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

/// Ordered pairs `(σ1, σ2)` at distance `d` with `σ1` falsifying `Ci` and
/// `σ2` falsifying `Cj`.
pub fn alpha(profile: &ClausePairProfile, d: usize, binom: &Binomials) -> BigUint {
    if profile.lambda > d {
        return BigUint::zero();
    }
    let rest = d - profile.lambda;
    let mut sum = BigUint::zero();
    for d1 in 0..=rest.min(profile.only_i) {
        for d2 in 0..=(rest - d1).min(profile.only_j) {
            let d3 = rest - d1 - d2;
            if d3 > profile.outside {
                continue;
            }
            sum += binom.get(profile.only_i, d1) * binom.get(profile.only_j, d2) * binom.get(profile.outside, d3);
        }
    }
    sum << profile.outside
}

/// Ordered pairs of satisfying assignments at Hamming distance exactly `d`.
pub fn count_exact_pairs(phi: &CnfFormula, d: usize) -> Result<BigUint> {
    let counter = PairCounter::new(phi)?;
    Ok(counter.exact(d))
}

/// Precomputes clause profiles and binomials so that counts for many `d`
/// share the work.
pub struct PairCounter {
    n: usize,
    unsat: BigUint,
    profiles: Vec<ClausePairProfile>,
    binom: Binomials,
}

impl PairCounter {
    pub fn new(phi: &CnfFormula) -> Result<Self> {
        let unsat = count_unsat(phi)?;
        let m = phi.num_clauses();
        let profiles =
            (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| clause_pair_profile(phi, i, j)).collect();
        Ok(PairCounter { n: phi.num_vars(), unsat, profiles, binom: Binomials::new(phi.num_vars()) })
    }

    pub fn models(&self) -> BigUint {
        (BigUint::one() << self.n) - &self.unsat
    }

    pub fn exact(&self, d: usize) -> BigUint {
        if d > self.n {
            return BigUint::zero();
        }
        let all = BigInt::from(BigUint::one() << self.n);
        let both_free = (all - BigInt::from(&self.unsat * 2u32)) * BigInt::from(self.binom.get(self.n, d));
        let both_false: BigUint = self.profiles.iter().map(|p| alpha(p, d, &self.binom)).sum();
        let total = both_free + BigInt::from(both_false);
        total.to_biguint().expect("pair count is nonnegative")
    }

    /// Ordered pairs at distance at least `d`.
    pub fn at_least(&self, d: usize) -> BigUint {
        (d..=self.n).map(|k| self.exact(k)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HittingOptions {
    /// Attach a brute-force witness when `n` is at most this.
    pub witness_cap: usize,
}

impl Default for HittingOptions {
    fn default() -> Self {
        HittingOptions { witness_cap: 16 }
    }
}

/// Decides by counting. `pair_count` holds the count for the query
/// (distance exactly `d` or at least `d`).
pub fn decide_differ_hitting(phi: &CnfFormula, q: DifferQuery, opts: HittingOptions) -> Result<DifferAnswer> {
    let counter = PairCounter::new(phi)?;
    if counter.models().is_zero() {
        return Ok(DifferAnswer::unsat().with_count(BigUint::zero()));
    }
    let count = match q.mode {
        Mode::Exact => counter.exact(q.d),
        Mode::Max => counter.at_least(q.d),
    };
    if count.is_zero() {
        return Ok(DifferAnswer::no().with_count(count));
    }
    let witness: Option<(Assignment, Assignment)> = if phi.num_vars() <= opts.witness_cap {
        let instance = Instance::Cnf(phi.clone());
        oracle::oracle_differ(&instance, q, opts.witness_cap)?.witness
    } else {
        None
    };
    Ok(DifferAnswer::yes(witness).with_count(count))
}
