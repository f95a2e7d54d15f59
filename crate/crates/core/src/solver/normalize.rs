//! Reduction of `d y² + e y + f = 0` (zero-divisor `d`) to the canonical
//! form `a x² + b x + c = 0` with `a = 1 + a2 j + a3 k`, `a2² + a3² = 1`,
//! and purely imaginary `b`; solutions transport back via `y = x - shift`.

use super::SolveError;
use crate::algebra::scalar::Scalar;
use crate::algebra::{Class, SplitQuaternion};
use num_traits::{One, Zero};

/// The canonical equation together with the substitution offset.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedEquation {
    pub a2: Scalar,
    pub a3: Scalar,
    /// Purely imaginary (possibly zero).
    pub b: SplitQuaternion,
    pub c: SplitQuaternion,
    /// `k0/2`; a solution `x` of the canonical equation gives the solution
    /// `y = x - shift` of the original one.
    pub shift: Scalar,
}

impl NormalizedEquation {
    pub fn new(
        a2: Scalar,
        a3: Scalar,
        b: SplitQuaternion,
        c: SplitQuaternion,
    ) -> Result<Self, SolveError> {
        let unit = &(&a2 * &a2) + &(&a3 * &a3);
        if !unit.is_one() {
            return Err(SolveError::NotNormalized);
        }
        if !b.x0.is_zero() {
            return Err(SolveError::NotNormalized);
        }
        Ok(Self {
            a2,
            a3,
            b,
            c,
            shift: Scalar::zero(),
        })
    }

    pub fn a(&self) -> SplitQuaternion {
        SplitQuaternion::new(
            Scalar::one(),
            Scalar::zero(),
            self.a2.clone(),
            self.a3.clone(),
        )
    }
}

/// Embed a complex number `u + v i` into the algebra.
fn embed_complex(u: &Scalar, v: &Scalar) -> SplitQuaternion {
    SplitQuaternion::new(u.clone(), v.clone(), Scalar::zero(), Scalar::zero())
}

/// Canonicalize `d y² + e y + f = 0`. Requires `d` to be a nonzero zero
/// divisor (the invertible case is a different problem, and `d = 0` is not
/// a quadratic).
pub fn normalize(
    d: &SplitQuaternion,
    e: &SplitQuaternion,
    f: &SplitQuaternion,
) -> Result<NormalizedEquation, SolveError> {
    match d.classify() {
        Class::Zero => return Err(SolveError::NotZeroDivisor),
        Class::Invertible => {
            return Err(SolveError::Unsupported(
                "leading coefficient is invertible; divide through or use the companion path"
                    .into(),
            ))
        }
        Class::ZeroDivisor => {}
    }
    // d = d1 + d2 j with complex d1, d2; |d1| = |d2| ≠ 0 so d1 is invertible
    let norm_d1 = &(&d.x0 * &d.x0) + &(&d.x1 * &d.x1);
    debug_assert!(!norm_d1.is_zero());
    let inv = norm_d1.recip();
    let d1_inv = embed_complex(&(&d.x0 * &inv), &(-&d.x1 * &inv));
    // a = 1 + (d1⁻¹ d2) j, so the complex product d1⁻¹·d2 gives (a2, a3)
    let a2 = &(&d1_inv.x0 * &d.x2) - &(&d1_inv.x1 * &d.x3);
    let a3 = &(&d1_inv.x0 * &d.x3) + &(&d1_inv.x1 * &d.x2);
    let a = SplitQuaternion::new(Scalar::one(), Scalar::zero(), a2.clone(), a3.clone());

    let e1 = &d1_inv * e;
    let k0 = e1.re();
    let b = &e1 - &a.scale(&k0);
    let two = Scalar::one() + Scalar::one();
    let four = &two * &two;
    let c = &(&(&d1_inv * f) - &e1.scale(&(&k0 / &two))) + &a.scale(&(&(&k0 * &k0) / &four));

    debug_assert!(b.x0.is_zero());
    debug_assert!((&(&a2 * &a2) + &(&a3 * &a3)).is_one());
    Ok(NormalizedEquation {
        a2,
        a3,
        b,
        c,
        shift: &k0 / &two,
    })
}
