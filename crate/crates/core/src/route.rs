//! Picks a solver for an instance and runs it.

use std::fmt;

use crate::affine::{exact_differ_free_enum_capped, max_differ_kernelized, two_affine_differ, DEFAULT_FREE_CAP};
use crate::error::{Error, Result};
use crate::hitting::{decide_differ_hitting, is_hitting, HittingOptions};
use crate::io::InstanceFile;
use crate::model::{DifferAnswer, DifferQuery, Instance, Mode};
use crate::oracle::{oracle_differ, DEFAULT_ORACLE_CAP};
use crate::twosat::{check_22cnf, differ_22};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fragment {
    TwoAffine,
    AffineGeneral,
    TwoTwoCnf,
    Hitting,
    OracleFallback,
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fragment::TwoAffine => "two-affine",
            Fragment::AffineGeneral => "affine",
            Fragment::TwoTwoCnf => "two-two-cnf",
            Fragment::Hitting => "hitting",
            Fragment::OracleFallback => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutingDecision {
    pub fragment: Fragment,
    pub rationale: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub allow_oracle: bool,
    pub oracle_cap: usize,
    pub free_cap: usize,
    pub hitting: HittingOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            allow_oracle: false,
            oracle_cap: DEFAULT_ORACLE_CAP,
            free_cap: DEFAULT_FREE_CAP,
            hitting: HittingOptions::default(),
        }
    }
}

fn decision(fragment: Fragment, rationale: impl Into<String>) -> Result<RoutingDecision> {
    Ok(RoutingDecision { fragment, rationale: rationale.into() })
}

fn fallback(instance: &Instance, why: &str, opts: &SolveOptions) -> Result<RoutingDecision> {
    let n = instance.num_vars();
    if opts.allow_oracle && n <= opts.oracle_cap {
        decision(Fragment::OracleFallback, format!("{why}; brute force over {n} variables"))
    } else if opts.allow_oracle {
        Err(Error::UnsupportedFragment(format!(
            "{why}, and {n} variables exceed the oracle cap of {}",
            opts.oracle_cap
        )))
    } else {
        Err(Error::UnsupportedFragment(format!("{why}; pass --allow-oracle for brute force")))
    }
}

/// Chooses the fragment solver. Hitting is tried before (2,2)-CNF because
/// it also yields pair counts.
pub fn route(file: &InstanceFile, q: DifferQuery, opts: &SolveOptions) -> Result<RoutingDecision> {
    match &file.instance {
        Instance::Affine(sys) if sys.max_arity() <= 2 => {
            decision(Fragment::TwoAffine, "every equation has at most two variables")
        }
        Instance::Affine(sys) if !sys.has_unit_weights() => {
            fallback(&file.instance, "weighted systems need equations of at most two variables", opts)
        }
        Instance::Affine(sys) => match q.mode {
            Mode::Max => decision(
                Fragment::AffineGeneral,
                format!("equations up to {} variables; kernel then guess over free variables", sys.max_arity()),
            ),
            Mode::Exact => decision(
                Fragment::AffineGeneral,
                format!(
                    "equations up to {} variables; enumeration over at most {} free variables",
                    sys.max_arity(),
                    opts.free_cap
                ),
            ),
        },
        Instance::Cnf(phi) if is_hitting(phi) => decision(Fragment::Hitting, "every pair of clauses clashes"),
        Instance::Cnf(phi) if check_22cnf(phi) => {
            decision(Fragment::TwoTwoCnf, "binary clauses, each variable in at most two clauses")
        }
        Instance::Cnf(_) => fallback(&file.instance, "formula is neither hitting nor (2,2)-CNF", opts),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub routing: RoutingDecision,
    pub answer: DifferAnswer,
}

pub fn solve(file: &InstanceFile, q: DifferQuery, opts: &SolveOptions) -> Result<Solved> {
    let routing = route(file, q, opts)?;
    let answer = match (&file.instance, routing.fragment) {
        (Instance::Affine(sys), Fragment::TwoAffine) => two_affine_differ(sys, q)?,
        (Instance::Affine(sys), Fragment::AffineGeneral) => match q.mode {
            Mode::Max => max_differ_kernelized(sys, q.d)?,
            Mode::Exact => exact_differ_free_enum_capped(sys, q.d, opts.free_cap)?,
        },
        (Instance::Cnf(phi), Fragment::Hitting) => decide_differ_hitting(phi, q, opts.hitting)?,
        (Instance::Cnf(phi), Fragment::TwoTwoCnf) => differ_22(phi, q)?,
        (instance, Fragment::OracleFallback) => oracle_differ(instance, q, opts.oracle_cap)?,
        _ => unreachable!("route matches the instance kind"),
    };
    debug_assert!(file.instance.witness_is_valid(&q, &answer));
    Ok(Solved { routing, answer })
}
