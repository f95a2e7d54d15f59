//! Exact rational scalars, `p/q` parsing and printing, and the
//! exact-or-approximate `Real` values produced by numeric root finding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact rational scalar. The representation keeps the canonical form
/// (positive denominator, reduced fraction) on every operation.
pub type Scalar = BigRational;

/// `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as a scalar. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest double-precision value.
pub fn scalar_to_f64(r: &Scalar) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Render in the canonical text form: `p/q`, or `p` when the value is an integer.
pub fn format_scalar(r: &Scalar) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal: {0}")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Parse `p/q` or `p` (optionally signed decimal integers). Rejects `q = 0`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, ParseScalarError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseScalarError::BadInteger(t.to_string()))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseScalarError::ZeroDenominator);
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// A real value that is either an exact rational or a polished double.
///
/// Exact values stay exact through the solvers; approximate ones appear only
/// when a root genuinely has no rational closed form.
#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Exact(Scalar),
    Approx(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(Scalar::zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => scalar_to_f64(r),
            Real::Approx(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Scalar> {
        match self {
            Real::Exact(r) => Some(r),
            Real::Approx(_) => None,
        }
    }

    /// Equality up to `tol`; two exact values compare exactly.
    pub fn close_to(&self, other: &Real, tol: f64) -> bool {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }
}

impl From<Scalar> for Real {
    fn from(r: Scalar) -> Self {
        Real::Exact(r)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => write!(f, "{}", r),
            // 12 significant digits, enough to round-trip the polished roots
            Real::Approx(v) => write!(f, "{:.*e}", 11, v),
        }
    }
}

/// Signum as an i32 (-1, 0, 1).
pub fn sign(r: &Scalar) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact square root when the scalar is a perfect square of a rational.
pub fn exact_sqrt(r: &Scalar) -> Option<Scalar> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Scalar::zero());
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}
