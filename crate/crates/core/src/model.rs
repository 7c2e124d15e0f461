//! Shared vocabulary: variables, literals, clauses, parity equations,
//! assignments, and the query/answer pair every solver speaks.
//!
//! Variables are 0-indexed here. File formats use the 1-based DIMACS
//! convention and translate at the boundary (see [`crate::io`]).

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

impl VarId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: VarId,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var: VarId(var), positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var: VarId(var), positive: false }
    }

    /// Parses a signed 1-based DIMACS literal. Zero is not a literal.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let var = usize::try_from(value.unsigned_abs()).ok()? - 1;
        Some(Literal { var: VarId(var), positive: value > 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var.0 as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn negated(self) -> Self {
        Literal { var: self.var, positive: !self.positive }
    }

    /// True when `value` makes this literal true.
    #[inline]
    pub fn satisfied_by(self, value: bool) -> bool {
        value == self.positive
    }
}

/// A disjunction of literals with duplicates removed. Tautologies never
/// make it into a `Clause`; see [`Clause::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    /// Normalizes a literal list. Returns `None` for a tautology (some `x`
    /// together with `¬x`); repeated literals keep their first position.
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Option<Self> {
        let mut out: Vec<Literal> = Vec::new();
        for lit in lits {
            if out.contains(&lit) {
                continue;
            }
            if out.contains(&lit.negated()) {
                return None;
            }
            out.push(lit);
        }
        Some(Clause { lits: out })
    }

    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.lits.iter().map(|l| l.var)
    }

    pub fn polarity_of(&self, var: VarId) -> Option<bool> {
        self.lits.iter().find(|l| l.var == var).map(|l| l.positive)
    }

    pub fn is_satisfied_by(&self, sigma: &Assignment) -> bool {
        self.lits.iter().any(|l| l.satisfied_by(sigma.get(l.var)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Builds a normalized formula: tautological clauses are dropped and
    /// duplicate literals removed. Duplicate clauses are kept.
    pub fn new<I, C>(n: usize, clauses: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = Literal>,
    {
        let mut out = Vec::new();
        for clause in clauses {
            let lits: Vec<Literal> = clause.into_iter().collect();
            if let Some(l) = lits.iter().find(|l| l.var.0 >= n) {
                return Err(Error::VarOutOfRange { index: l.var.0, n });
            }
            if let Some(c) = Clause::new(lits) {
                out.push(c);
            }
        }
        Ok(CnfFormula { n, clauses: out })
    }

    /// Convenience constructor from signed 1-based integers.
    pub fn from_dimacs(n: usize, clauses: &[&[i64]]) -> Result<Self> {
        let mut lits = Vec::with_capacity(clauses.len());
        for clause in clauses {
            let mut c = Vec::with_capacity(clause.len());
            for &v in *clause {
                c.push(
                    Literal::from_dimacs(v)
                        .ok_or_else(|| Error::InvalidParameter("literal 0 inside a clause".into()))?,
                );
            }
            lits.push(c);
        }
        CnfFormula::new(n, lits)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// True iff every clause contains a literal made true by `sigma`.
    pub fn evaluate(&self, sigma: &Assignment) -> Result<bool> {
        check_len(self.n, sigma)?;
        Ok(self.clauses.iter().all(|c| c.is_satisfied_by(sigma)))
    }

    /// Occurrences per variable, counted once per clause.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.n];
        for c in &self.clauses {
            for v in c.vars() {
                occ[v.0] += 1;
            }
        }
        occ
    }
}

/// XOR of `vars` equals `rhs`. `vars` is sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineEquation {
    vars: Vec<VarId>,
    rhs: bool,
}

impl AffineEquation {
    /// Normalizes by cancelling repeated variables pairwise (`x ⊕ x = 0`).
    pub fn new(vars: impl IntoIterator<Item = VarId>, rhs: bool) -> Self {
        let mut v: Vec<VarId> = vars.into_iter().collect();
        v.sort_unstable();
        let mut out: Vec<VarId> = Vec::with_capacity(v.len());
        for x in v {
            if out.last() == Some(&x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        AffineEquation { vars: out, rhs }
    }

    pub fn from_indices(vars: &[usize], rhs: bool) -> Self {
        Self::new(vars.iter().map(|&v| VarId(v)), rhs)
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn rhs(&self) -> bool {
        self.rhs
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_satisfied_by(&self, sigma: &Assignment) -> bool {
        self.vars.iter().fold(false, |acc, v| acc ^ sigma.get(*v)) == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSystem {
    n: usize,
    equations: Vec<AffineEquation>,
    weights: Vec<u64>,
}

impl AffineSystem {
    pub fn new(n: usize, equations: Vec<AffineEquation>) -> Result<Self> {
        for eq in &equations {
            if let Some(v) = eq.vars.iter().find(|v| v.0 >= n) {
                return Err(Error::VarOutOfRange { index: v.0, n });
            }
        }
        Ok(AffineSystem { n, equations, weights: vec![1; n] })
    }

    /// Shorthand for tests and generators: `(vars, rhs)` pairs.
    pub fn from_indices(n: usize, equations: &[(&[usize], bool)]) -> Result<Self> {
        Self::new(n, equations.iter().map(|(vars, rhs)| AffineEquation::from_indices(vars, *rhs)).collect())
    }

    /// Replaces the per-variable weights. Only the 2-affine contraction
    /// reads them; every other solver measures plain Hamming distance.
    pub fn with_weights(mut self, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: weights.len() });
        }
        if let Some(var) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight { var });
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[AffineEquation] {
        &self.equations
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn max_arity(&self) -> usize {
        self.equations.iter().map(AffineEquation::arity).max().unwrap_or(0)
    }

    pub fn evaluate(&self, sigma: &Assignment) -> Result<bool> {
        check_len(self.n, sigma)?;
        Ok(self.equations.iter().all(|e| e.is_satisfied_by(sigma)))
    }

    /// Sum of weights over the variables where `a` and `b` differ.
    pub fn weighted_distance(&self, a: &Assignment, b: &Assignment) -> Result<u64> {
        check_len(self.n, a)?;
        check_len(self.n, b)?;
        Ok((0..self.n).filter(|&i| a.0[i] != b.0[i]).map(|i| self.weights[i]).sum())
    }
}

/// Total truth assignment over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn zeros(n: usize) -> Self {
        Assignment(vec![false; n])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Assignment(bits)
    }

    /// Parses a string of `0`/`1` characters, variable 0 first.
    pub fn from_str01(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Assignment)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, var: VarId) -> bool {
        self.0[var.0]
    }

    #[inline]
    pub fn set(&mut self, var: VarId, value: bool) {
        self.0[var.0] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Signed 1-based literals, one per variable.
    pub fn to_dimacs(&self) -> Vec<i64> {
        self.0.iter().enumerate().map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) }).collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn check_len(n: usize, sigma: &Assignment) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: sigma.len() });
    }
    Ok(())
}

/// Number of positions where `a` and `b` differ.
pub fn hamming_distance(a: &Assignment, b: &Assignment) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// At least `d` differing variables.
    Max,
    /// Exactly `d` differing variables.
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Max => "max",
            Mode::Exact => "exact",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Mode::Max),
            "exact" => Ok(Mode::Exact),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DifferQuery {
    pub mode: Mode,
    pub d: usize,
}

impl DifferQuery {
    pub fn max(d: usize) -> Self {
        DifferQuery { mode: Mode::Max, d }
    }

    pub fn exact(d: usize) -> Self {
        DifferQuery { mode: Mode::Exact, d }
    }

    /// Whether a pair at distance `dist` answers this query.
    pub fn accepts(&self, dist: u64) -> bool {
        match self.mode {
            Mode::Max => dist >= self.d as u64,
            Mode::Exact => dist == self.d as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    /// The formula has no satisfying assignment at all.
    UnsatNo,
}

impl Decision {
    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
            Decision::UnsatNo => "UNSAT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferAnswer {
    pub decision: Decision,
    pub witness: Option<(Assignment, Assignment)>,
    pub pair_count: Option<BigUint>,
}

impl DifferAnswer {
    pub fn yes(witness: Option<(Assignment, Assignment)>) -> Self {
        DifferAnswer { decision: Decision::Yes, witness, pair_count: None }
    }

    pub fn no() -> Self {
        DifferAnswer { decision: Decision::No, witness: None, pair_count: None }
    }

    pub fn unsat() -> Self {
        DifferAnswer { decision: Decision::UnsatNo, witness: None, pair_count: None }
    }

    pub fn with_count(mut self, count: BigUint) -> Self {
        self.pair_count = Some(count);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.decision.is_yes()
    }
}

/// Either kind of formula the crate reasons about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Cnf(CnfFormula),
    Affine(AffineSystem),
}

impl Instance {
    pub fn num_vars(&self) -> usize {
        match self {
            Instance::Cnf(f) => f.num_vars(),
            Instance::Affine(s) => s.num_vars(),
        }
    }

    pub fn evaluate(&self, sigma: &Assignment) -> Result<bool> {
        match self {
            Instance::Cnf(f) => f.evaluate(sigma),
            Instance::Affine(s) => s.evaluate(sigma),
        }
    }

    /// Distance used by the solvers for this instance: weighted for affine
    /// systems, plain Hamming otherwise.
    pub fn distance(&self, a: &Assignment, b: &Assignment) -> Result<u64> {
        match self {
            Instance::Cnf(_) => hamming_distance(a, b).map(|d| d as u64),
            Instance::Affine(s) => s.weighted_distance(a, b),
        }
    }

    /// True when `answer`'s witness (if any) satisfies the instance and
    /// meets the query's distance contract.
    pub fn witness_is_valid(&self, q: &DifferQuery, answer: &DifferAnswer) -> bool {
        match &answer.witness {
            None => true,
            Some((a, b)) => {
                answer.is_yes()
                    && matches!(self.evaluate(a), Ok(true))
                    && matches!(self.evaluate(b), Ok(true))
                    && self.distance(a, b).map(|d| q.accepts(d)).unwrap_or(false)
            }
        }
    }
}

impl From<CnfFormula> for Instance {
    fn from(f: CnfFormula) -> Self {
        Instance::Cnf(f)
    }
}

impl From<AffineSystem> for Instance {
    fn from(s: AffineSystem) -> Self {
        Instance::Affine(s)
    }
}
