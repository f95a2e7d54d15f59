//! The complete solver for `a x² + b x + c = 0` over the split quaternions
//! when `a` is a nonzero zero divisor.
//!
//! The equation is first brought to canonical form; roots then split by
//! whether the pivot `2 x0 a + b` is a zero divisor or invertible, each
//! side having explicit case formulas. The final set is the union, shifted
//! back to the original variable.

pub mod branch;
pub mod family;
pub mod normalize;
pub mod pure;
pub mod set;
pub mod si;
pub mod squareroot;
pub mod sz;

pub use branch::{BranchData, PabNonzeroData};
pub use family::{
    AffineExpr, AffineFamily, Family, PolyFamily, QuadExpr, SemiExplicitFamily, SolutionPoint,
    SqrtFamily, UniQuad,
};
pub use normalize::{normalize, NormalizedEquation};
pub use pure::{solve_pure, PureQuadratic, PureStatus};
pub use set::SolutionSet;
pub use squareroot::square_roots;

use crate::algebra::{Class, SplitQuaternion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("leading coefficient must be a nonzero zero divisor")]
    NotZeroDivisor,
    #[error("unsupported equation: {0}")]
    Unsupported(String),
    #[error("equation is not in the canonical form this operation expects")]
    NotNormalized,
    #[error("branch preconditions violated: {0}")]
    WrongBranch(&'static str),
}

/// A quadratic `a x² + b x + c = 0`. The solver requires `a` to be a
/// nonzero zero divisor; the companion path accepts any coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadEquation {
    pub a: SplitQuaternion,
    pub b: SplitQuaternion,
    pub c: SplitQuaternion,
}

impl QuadEquation {
    pub fn new(a: SplitQuaternion, b: SplitQuaternion, c: SplitQuaternion) -> Self {
        Self { a, b, c }
    }
}

/// Solution set of the canonical equation (no de-normalization shift).
pub fn solve_normalized(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    if eq.b.is_zero() {
        match solve_pure(eq)? {
            PureStatus::Unsolvable => Ok(SolutionSet::empty()),
            PureStatus::Solvable(pq) => Ok(pq.complete()),
        }
    } else {
        let mut out = sz::solve_sz(eq);
        out.extend(si::solve_si(eq));
        Ok(out)
    }
}

/// The complete solution set of `a x² + b x + c = 0`.
pub fn solve(eq: &QuadEquation) -> Result<SolutionSet, SolveError> {
    match eq.a.classify() {
        Class::Zero => return Err(SolveError::NotZeroDivisor),
        Class::Invertible => {
            return Err(SolveError::Unsupported(
                "leading coefficient is invertible; divide through or use the companion path"
                    .into(),
            ))
        }
        Class::ZeroDivisor => {}
    }
    let norm = normalize(&eq.a, &eq.b, &eq.c)?;
    let mut set = solve_normalized(&norm)?;
    // canonical solution x gives original solution y = x - shift
    set.translate_x0(&-norm.shift.clone());
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat, Scalar};
    use crate::verify;
    use num_traits::One;

    fn q(c: [(i64, i64); 4]) -> SplitQuaternion {
        SplitQuaternion::new(
            rat(c[0].0, c[0].1),
            rat(c[1].0, c[1].1),
            rat(c[2].0, c[2].1),
            rat(c[3].0, c[3].1),
        )
    }

    #[test]
    fn rejects_nonzero_divisor_leading_coefficient() {
        let one = SplitQuaternion::one();
        let eq = QuadEquation::new(SplitQuaternion::zero(), one.clone(), one.clone());
        assert_eq!(solve(&eq), Err(SolveError::NotZeroDivisor));
        let eq = QuadEquation::new(one.clone(), one.clone(), one);
        assert!(matches!(solve(&eq), Err(SolveError::Unsupported(_))));
    }

    #[test]
    fn union_of_both_branches() {
        // (1+j)x² + (i+j)x - 1 + i = 0 has the point -1 and the line
        // x1 i + x1 j + k
        let eq = QuadEquation::new(
            q([(1, 1), (0, 1), (1, 1), (0, 1)]),
            q([(0, 1), (1, 1), (1, 1), (0, 1)]),
            q([(-1, 1), (1, 1), (0, 1), (0, 1)]),
        );
        let set = solve(&eq).unwrap();
        assert_eq!(set.points.len(), 1);
        assert_eq!(set.families.len(), 1);
        assert!(set.contains(
            &SolutionPoint::Exact(SplitQuaternion::from_real(int(-1))),
            0.0
        ));
        assert!(set.contains(&SolutionPoint::Exact(SplitQuaternion::unit_k()), 0.0));
    }

    #[test]
    fn no_linear_term_dispatches_to_pure_path() {
        // (1+j)x² - 1 - j = 0
        let eq = QuadEquation::new(
            q([(1, 1), (0, 1), (1, 1), (0, 1)]),
            SplitQuaternion::zero(),
            q([(-1, 1), (0, 1), (-1, 1), (0, 1)]),
        );
        let set = solve(&eq).unwrap();
        assert_eq!(set.families.len(), 3);
        assert!(set.contains(&SolutionPoint::Exact(SplitQuaternion::unit_j()), 0.0));
    }

    #[test]
    fn linear_term_that_normalizes_away_dispatches_to_pure_path() {
        // e = 2d is a real multiple of d, so the canonical form has b = 0:
        // (1+j)y² + (2+2j)y = 0 is (1+j)x² - 1 - j = 0 shifted by 1
        let d = q([(1, 1), (0, 1), (1, 1), (0, 1)]);
        let e = q([(2, 1), (0, 1), (2, 1), (0, 1)]);
        let eq = QuadEquation::new(d, e, SplitQuaternion::zero());
        let set = solve(&eq).unwrap();
        assert_eq!(set.families.len(), 3);
        // y = j - 1 lies on the shifted quadric
        let member = SplitQuaternion::new(int(-1), int(0), int(1), int(0));
        assert!(set.contains(&SolutionPoint::Exact(member), 0.0));
        // and y = 0, y = -2 are the shifted images of ±1
        assert!(set.contains(&SolutionPoint::Exact(SplitQuaternion::zero()), 0.0));
        assert!(set.contains(
            &SolutionPoint::Exact(SplitQuaternion::from_real(int(-2))),
            0.0
        ));
        for p in set.sample_members(30) {
            assert!(verify::residual(&eq, &p).exact_zero || !p.is_exact());
        }
    }

    #[test]
    fn shifted_equation_round_trips() {
        // build d y² + e y + f = 0 whose canonical form is the worked
        // single-point case; the shift is 1/2, so y = -1 + i + k
        let d = q([(1, 1), (0, 1), (1, 1), (0, 1)]);
        let e = q([(1, 1), (1, 1), (3, 1), (1, 1)]);
        let f = q([(0, 1), (3, 1), (2, 1), (3, 1)]);
        let set = solve(&QuadEquation::new(d.clone(), e.clone(), f.clone())).unwrap();
        assert_eq!(set.points.len(), 1);
        let expected = SplitQuaternion::new(int(-1), int(1), int(0), int(1));
        assert_eq!(set.points[0], SolutionPoint::Exact(expected.clone()));
        // and the root actually satisfies the original equation
        let r = verify::residual(&QuadEquation::new(d, e, f), &SolutionPoint::Exact(expected));
        assert!(r.exact_zero);
    }

    #[test]
    fn shifted_family_round_trips() {
        // shift the two-parameter plane case by k0 = 3 (shift 3/2)
        let a = q([(1, 1), (0, 1), (1, 1), (0, 1)]);
        let b = q([(0, 1), (1, 1), (0, 1), (1, 1)]);
        let c = q([(-1, 1), (1, 1), (-1, 1), (1, 1)]);
        let k0 = int(3);
        let two = Scalar::one() + Scalar::one();
        let four = &two * &two;
        // e = b + k0 a, f = c + (k0/2) b + (k0²/4) a
        let e = &b + &a.scale(&k0);
        let f = &(&c + &b.scale(&(&k0 / &two))) + &a.scale(&(&(&k0 * &k0) / &four));
        let eq = QuadEquation::new(a, e, f);
        let set = solve(&eq).unwrap();
        assert_eq!(set.families.len(), 1);
        for p in set.sample_members(60) {
            let r = verify::residual(&eq, &p);
            assert!(r.exact_zero, "residual {:?} at {:?}", r, p);
        }
    }
}
