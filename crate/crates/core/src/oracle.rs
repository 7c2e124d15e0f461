//! Brute-force reference answers by enumerating all `2^n` assignments.
//!
//! Assignments are visited in lexicographic order of their bit vectors
//! (variable 0 is the most significant bit of the mask).

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::model::{Assignment, DifferAnswer, DifferQuery, Instance, Mode};

pub const DEFAULT_ORACLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    /// Satisfying assignments as masks, ascending (lexicographic order).
    pub satisfying: Vec<u64>,
    /// `counts[k]`: ordered pairs of models at distance `k`. Distance is the
    /// instance's own (weighted for weighted affine systems), so the vector
    /// has one entry per possible distance `0..=total weight`.
    pub counts: Vec<u128>,
    pub max_distance: Option<usize>,
}

impl OracleReport {
    pub fn assignment(&self, mask: u64) -> Assignment {
        mask_to_assignment(self.n, mask)
    }

    pub fn models(&self) -> Vec<Assignment> {
        self.satisfying.iter().map(|&m| self.assignment(m)).collect()
    }

    pub fn count_at(&self, k: usize) -> u128 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn count_at_least(&self, k: usize) -> u128 {
        self.counts.iter().skip(k).sum()
    }

    /// Distances realized by some ordered pair of models.
    pub fn achievable(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&k| self.counts[k] > 0).collect()
    }
}

fn mask_to_assignment(n: usize, mask: u64) -> Assignment {
    Assignment::from_bits((0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect())
}

/// Compiled evaluator over masks.
enum MaskFormula {
    /// Per clause: (positive literal mask, negative literal mask).
    Cnf(Vec<(u64, u64)>),
    /// Per equation: (variable mask, rhs).
    Affine(Vec<(u64, bool)>),
}

impl MaskFormula {
    fn compile(instance: &Instance) -> Self {
        let n = instance.num_vars();
        let bit = |v: usize| 1u64 << (n - 1 - v);
        match instance {
            Instance::Cnf(phi) => MaskFormula::Cnf(
                phi.clauses()
                    .iter()
                    .map(|c| {
                        c.literals().iter().fold((0, 0), |(p, q), l| {
                            if l.positive {
                                (p | bit(l.var.0), q)
                            } else {
                                (p, q | bit(l.var.0))
                            }
                        })
                    })
                    .collect(),
            ),
            Instance::Affine(sys) => MaskFormula::Affine(
                sys.equations().iter().map(|e| (e.vars().iter().fold(0, |m, v| m | bit(v.0)), e.rhs())).collect(),
            ),
        }
    }

    fn eval(&self, mask: u64) -> bool {
        match self {
            MaskFormula::Cnf(clauses) => clauses.iter().all(|&(p, q)| mask & p != 0 || !mask & q != 0),
            MaskFormula::Affine(eqs) => eqs.iter().all(|&(m, rhs)| ((mask & m).count_ones() & 1 == 1) == rhs),
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > 63 {
        return Err(Error::OracleCap { n, cap: cap.min(63) });
    }
    Ok(())
}

fn distance_weights(instance: &Instance) -> Option<Vec<u64>> {
    match instance {
        Instance::Affine(sys) if !sys.has_unit_weights() => Some(sys.weights().to_vec()),
        _ => None,
    }
}

pub fn brute_force_report(instance: &Instance, cap: usize) -> Result<OracleReport> {
    let n = instance.num_vars();
    check_cap(n, cap)?;
    let formula = MaskFormula::compile(instance);
    let satisfying: Vec<u64> = (0..1u64 << n).filter(|&m| formula.eval(m)).collect();

    let counts = match distance_weights(instance) {
        Some(weights) => weighted_histogram(n, &satisfying, &weights),
        // quadratic pair loop versus two Walsh–Hadamard passes
        None if (satisfying.len() as u128).pow(2) <= (4 * (n as u128 + 1)) << n => direct_histogram(n, &satisfying),
        None => walsh_histogram(n, &satisfying),
    };
    let max_distance = (0..counts.len()).rev().find(|&k| counts[k] > 0);
    let report = OracleReport { n, satisfying, counts, max_distance };
    let s = report.satisfying.len() as u128;
    debug_assert_eq!(report.counts.iter().sum::<u128>(), s * s);
    debug_assert_eq!(report.count_at(0), s);
    Ok(report)
}

fn direct_histogram(n: usize, sat: &[u64]) -> Vec<u128> {
    let mut counts = vec![0u128; n + 1];
    for &a in sat {
        for &b in sat {
            counts[(a ^ b).count_ones() as usize] += 1;
        }
    }
    counts
}

fn weighted_histogram(n: usize, sat: &[u64], weights: &[u64]) -> Vec<u128> {
    let total: u64 = weights.iter().sum();
    let mut counts = vec![0u128; total as usize + 1];
    for &a in sat {
        for &b in sat {
            let diff = a ^ b;
            let w: u64 = (0..n).filter(|&i| diff >> (n - 1 - i) & 1 == 1).map(|i| weights[i]).sum();
            counts[w as usize] += 1;
        }
    }
    counts
}

/// Autocorrelation `c[z] = #{(a, b) : a ⊕ b = z}` via the Walsh–Hadamard
/// transform, then bucketed by popcount.
fn walsh_histogram(n: usize, sat: &[u64]) -> Vec<u128> {
    let size = 1usize << n;
    let mut f = vec![0i128; size];
    for &m in sat {
        f[m as usize] = 1;
    }
    wht(&mut f);
    for x in f.iter_mut() {
        *x *= *x;
    }
    wht(&mut f);
    let mut counts = vec![0u128; n + 1];
    for (z, &c) in f.iter().enumerate() {
        counts[z.count_ones() as usize] += (c >> n) as u128;
    }
    counts
}

fn wht(a: &mut [i128]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*x, *y);
                *x = u + v;
                *y = u - v;
            }
        }
        h *= 2;
    }
}

/// Decision from the brute-force histogram. The witness is the
/// lexicographically least accepted pair; `pair_count` is the number of
/// accepted ordered pairs.
pub fn oracle_differ(instance: &Instance, q: DifferQuery, cap: usize) -> Result<DifferAnswer> {
    let report = brute_force_report(instance, cap)?;
    oracle_differ_from_report(instance, &report, q)
}

pub fn oracle_differ_from_report(instance: &Instance, report: &OracleReport, q: DifferQuery) -> Result<DifferAnswer> {
    if report.satisfying.is_empty() {
        return Ok(DifferAnswer::unsat().with_count(BigUint::from(0u32)));
    }
    let count = match q.mode {
        Mode::Exact => report.count_at(q.d),
        Mode::Max => report.count_at_least(q.d),
    };
    if count == 0 {
        return Ok(DifferAnswer::no().with_count(BigUint::from(0u32)));
    }
    let n = report.n;
    let weights = distance_weights(instance);
    let distance = |diff: u64| -> u64 {
        match &weights {
            None => diff.count_ones() as u64,
            Some(w) => (0..n).filter(|&i| diff >> (n - 1 - i) & 1 == 1).map(|i| w[i]).sum(),
        }
    };
    for &a in &report.satisfying {
        if let Some(&b) = report.satisfying.iter().find(|&&b| q.accepts(distance(a ^ b))) {
            let pair = (report.assignment(a), report.assignment(b));
            return Ok(DifferAnswer::yes(Some(pair)).with_count(BigUint::from(count)));
        }
    }
    unreachable!("histogram reported an accepted pair")
}
