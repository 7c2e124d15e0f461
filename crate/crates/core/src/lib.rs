//! Diverse-pair satisfiability.
//!
//! Given a formula and a distance `d`, decide whether it has two satisfying
//! assignments differing on at least `d` variables ([`Mode::Max`]) or on
//! exactly `d` variables ([`Mode::Exact`]). Polynomial or fixed-parameter
//! solvers are provided for three fragments:
//!
//! * affine systems over GF(2) ([`affine`], built on [`gf2`]),
//! * (2,2)-CNF formulas ([`twosat`]),
//! * hitting formulas, with exact pair counts ([`hitting`]).
//!
//! [`route::solve`] picks the right one. [`reductions`] generates hard
//! instances from classic source problems, and [`oracle`] answers any
//! small instance by brute force.
//!
//! ```
//! use diffsat::{affine::two_affine_differ, fixtures, DifferQuery};
//!
//! let sys = fixtures::three_component_two_affine();
//! assert!(two_affine_differ(&sys, DifferQuery::exact(9)).unwrap().is_yes());
//! assert!(!two_affine_differ(&sys, DifferQuery::exact(7)).unwrap().is_yes());
//! ```

pub mod affine;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod hitting;
pub mod io;
pub mod model;
pub mod oracle;
pub mod reductions;
pub mod route;
pub mod subset_sum;
pub mod twosat;

pub use error::{Error, Result};
pub use model::{
    hamming_distance, AffineEquation, AffineSystem, Assignment, Clause, CnfFormula, Decision, DifferAnswer,
    DifferQuery, Instance, Literal, Mode, VarId,
};
