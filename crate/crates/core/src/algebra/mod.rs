//! Exact split-quaternion arithmetic: the product table, conjugation, the
//! indefinite quadratic form and inner product, zero-divisor classification,
//! the Moore-Penrose pseudoinverse, and complete solution sets of `ax = d`.
//!
//! Everything here is a pure function over immutable values.

pub mod linear;
pub mod matrix;
pub mod quat;
pub mod scalar;

pub use linear::{solve_linear, LinearSolutionSet};
pub use matrix::Mat4;
pub use quat::{AlgebraError, Class, SplitQuaternion, SplitQuaternionF64};
pub use scalar::{
    exact_sqrt, format_scalar, int, parse_scalar, rat, scalar_to_f64, sign, ParseScalarError, Real,
    Scalar,
};
