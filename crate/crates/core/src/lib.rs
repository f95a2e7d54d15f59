//! Exact split-quaternion arithmetic and complete solution sets for
//! quadratic equations `a x² + b x + c = 0` whose leading coefficient is a
//! zero divisor, with an independent companion-polynomial cross-check.
//!
//! The crate is organised around:
//! - [`algebra`]: the product table, the indefinite form, zero-divisor
//!   classification, the Moore-Penrose pseudoinverse, and linear equations;
//! - [`realroots`]: exact-first real root extraction for degree ≤ 4;
//! - [`solver`]: normalization and the complete case analysis;
//! - [`companion`]: the trace/norm divisor route;
//! - [`verify`]: residual and grid oracles;
//! - [`corpus`]: built-in worked cases with frozen expected outputs.

pub mod algebra;
pub mod companion;
pub mod corpus;
pub mod realroots;
pub mod solver;
pub mod verify;

pub use algebra::{Class, LinearSolutionSet, Real, Scalar, SplitQuaternion};
pub use solver::{solve, QuadEquation, SolutionPoint, SolutionSet, SolveError};
