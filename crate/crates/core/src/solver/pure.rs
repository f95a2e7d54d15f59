//! The no-linear-term equation `a x² + c = 0` with `a = 1 + a2 j + a3 k`
//! a zero divisor.
//!
//! Solvable exactly when `a c = 2c`. The root set is exposed two ways:
//! through the square-root oracle `x = √(-c/2 + (ā/2) y)` parametrized by a
//! witness `y`, and as the fully enumerated closed form, split on `x0 = 0`
//! (a quadric of purely imaginary roots, present iff `c1 = 0`) versus
//! `x0 ≠ 0` (affine families when `c1 = 0`, a semi-explicit quartic family
//! when `c1 ≠ 0`).

use super::family::{AffineFamily, Family, SemiExplicitFamily};
use super::normalize::NormalizedEquation;
use super::set::SolutionSet;
use super::squareroot::{pure_imaginary_quadric, square_roots};
use super::SolveError;
use crate::algebra::scalar::{exact_sqrt, scalar_to_f64, Real, Scalar};
use crate::algebra::SplitQuaternion;
use num_traits::{One, Signed, Zero};

/// Outcome of the solvability test `a c = 2c`.
#[derive(Debug, Clone)]
pub enum PureStatus {
    Unsolvable,
    Solvable(PureQuadratic),
}

/// A solvable `a x² + c = 0`.
#[derive(Debug, Clone)]
pub struct PureQuadratic {
    a2: Scalar,
    a3: Scalar,
    c: SplitQuaternion,
}

/// Classify `a x² + c = 0`; the equation must be in canonical form with
/// `b = 0`.
pub fn solve_pure(eq: &NormalizedEquation) -> Result<PureStatus, SolveError> {
    if !eq.b.is_zero() {
        return Err(SolveError::NotNormalized);
    }
    let a = eq.a();
    let two_c = eq.c.scale(&(Scalar::one() + Scalar::one()));
    if &a * &eq.c != two_c {
        return Ok(PureStatus::Unsolvable);
    }
    Ok(PureStatus::Solvable(PureQuadratic {
        a2: eq.a2.clone(),
        a3: eq.a3.clone(),
        c: eq.c.clone(),
    }))
}

impl PureQuadratic {
    fn a(&self) -> SplitQuaternion {
        SplitQuaternion::new(
            Scalar::one(),
            Scalar::zero(),
            self.a2.clone(),
            self.a3.clone(),
        )
    }

    /// The roots delivered by the witness `y`: `√(-c/2 + (ā/2) y)`.
    pub fn roots_for(&self, y: &SplitQuaternion) -> SolutionSet {
        let half = Scalar::new(1.into(), 2.into());
        let target = &(-&self.c).scale(&half) + &(&self.a().conjugate().scale(&half) * y);
        square_roots(&target)
    }

    /// The default witnesses `y = 0` and `y = 1`.
    pub fn default_enumeration(&self) -> SolutionSet {
        let mut set = self.roots_for(&SplitQuaternion::zero());
        set.extend(self.roots_for(&SplitQuaternion::one()));
        set
    }

    /// The complete root set in closed form.
    pub fn complete(&self) -> SolutionSet {
        let mut set = SolutionSet::empty();
        let c0 = self.c.x0.clone();
        let c1 = self.c.x1.clone();
        if c1.is_zero() {
            // purely imaginary roots sweep the quadric I_x = c0
            set.push_family(pure_imaginary_quadric(&c0));
            // roots with x0 ≠ 0 satisfy (x0 + a2 x2 + a3 x3)² = -c0
            let neg_c0 = -c0;
            if !neg_c0.is_negative() {
                match exact_sqrt(&neg_c0) {
                    Some(r) => {
                        let mut signs = vec![Scalar::one()];
                        if !r.is_zero() {
                            signs.push(-Scalar::one());
                        }
                        for s in signs {
                            set.push_family(self.offset_family(Real::Exact(&s * &r)));
                        }
                    }
                    None => {
                        let r = scalar_to_f64(&neg_c0).sqrt();
                        for s in [1.0, -1.0] {
                            set.push_family(self.offset_family(Real::Approx(s * r)));
                        }
                    }
                }
            }
        } else {
            // x0 = 0 is impossible; the x0 ≠ 0 roots form the semi-explicit
            // family of the quartic (no-linear-term variant)
            set.push_family(Family::SemiExplicit(SemiExplicitFamily {
                a2: self.a2.clone(),
                a3: self.a3.clone(),
                b1: Scalar::zero(),
                c0: self.c.x0.clone(),
                c1,
                x0_offset: Scalar::zero(),
            }));
        }
        set
    }

    /// Affine family `x = x0 + p i + (a2 q - a3 p) j + (a3 q + a2 p) k`
    /// with `q = -x0 + offs`, free `(x0 ≠ 0, p)`.
    fn offset_family(&self, offs: Real) -> Family {
        let base2 = match &offs {
            Real::Exact(r) => Real::Exact(&self.a2 * r),
            Real::Approx(v) => Real::Approx(scalar_to_f64(&self.a2) * v),
        };
        let base3 = match &offs {
            Real::Exact(r) => Real::Exact(&self.a3 * r),
            Real::Approx(v) => Real::Approx(scalar_to_f64(&self.a3) * v),
        };
        Family::Affine(AffineFamily {
            param_names: vec!["x0", "x1"],
            param_coords: vec![0, 1],
            base: [
                Real::Exact(Scalar::zero()),
                Real::Exact(Scalar::zero()),
                base2,
                base3,
            ],
            dirs: vec![
                [
                    Scalar::one(),
                    Scalar::zero(),
                    -self.a2.clone(),
                    -self.a3.clone(),
                ],
                [
                    Scalar::zero(),
                    Scalar::one(),
                    -self.a3.clone(),
                    self.a2.clone(),
                ],
            ],
            excluded: vec![(0, Scalar::zero())],
        })
    }
}
