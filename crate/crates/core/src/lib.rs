//! Certified solver for the exponential Diophantine equation
//!
//! ```text
//!     x^n + y^m = c * x^k * y^l        (x, y positive integers)
//! ```
//!
//! Instances are classified by how `n`, `m` and `k + l` compare (eight
//! orderings, up to the `x <-> y` symmetry). Each ordering has a dedicated
//! solver that returns either a complete solution set, the diagonal family
//! `(d, d)`, or a set that is complete only up to an explicit gcd bound. Every
//! concrete solution carries a [`Witness`] that can be re-checked with
//! [`validate_witness`], and [`oracle::brute_force`] provides an independent
//! exhaustive search to cross-check any result.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic on solution
//! values is arbitrary precision.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod integer;
pub mod oracle;
pub mod params;
pub mod power_eq;
pub mod solution;
pub mod solvers;
pub mod witness;

pub use classify::{classify, unswap_solutions, CaseClassification, CaseId};
pub use oracle::{brute_force, crosscheck, CrosscheckReport, SearchBox};
pub use params::{EquationParams, ParamError};
pub use power_eq::PowerEqParametrization;
pub use solution::{GcdBound, Provenance, Solution, SolutionKind, SolutionSet};
pub use solvers::{solve, SolveError, DEFAULT_BOUND};
pub use witness::{validate_witness, Symbol, Witness, WitnessRule};

pub use num_bigint::BigUint;
