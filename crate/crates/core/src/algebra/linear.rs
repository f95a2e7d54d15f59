//! Complete solution sets of the linear equation `a x = d`.
//!
//! Solvability is decided by the Moore-Penrose criterion `a a⁺ d = d`;
//! when `a` is a zero divisor the solutions form the affine set
//! `a⁺ d + (1 - a⁺ a) y` over all `y`, which we materialize as a base point
//! plus an exact rank-2 projector matrix.

use super::matrix::Mat4;
use super::quat::{Class, SplitQuaternion};

/// The solution set of `a x = d`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolutionSet {
    Empty,
    Point(SplitQuaternion),
    Affine {
        base: SplitQuaternion,
        /// Matrix of `y -> (1 - a⁺a) y`; idempotent.
        projector: Mat4,
        rank: usize,
    },
}

impl LinearSolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, LinearSolutionSet::Empty)
    }

    /// An arbitrary member obtained from the parameter `y` (ignored for points).
    pub fn member_for(&self, y: &SplitQuaternion) -> Option<SplitQuaternion> {
        match self {
            LinearSolutionSet::Empty => None,
            LinearSolutionSet::Point(p) => Some(p.clone()),
            LinearSolutionSet::Affine {
                base, projector, ..
            } => Some(base + &projector.mul_vec(y)),
        }
    }
}

/// All solutions of `a x = d` over the split quaternions.
pub fn solve_linear(a: &SplitQuaternion, d: &SplitQuaternion) -> LinearSolutionSet {
    match a.classify() {
        Class::Zero => {
            if d.is_zero() {
                LinearSolutionSet::Affine {
                    base: SplitQuaternion::zero(),
                    projector: Mat4::identity(),
                    rank: 4,
                }
            } else {
                LinearSolutionSet::Empty
            }
        }
        Class::Invertible => {
            let inv = a.inverse().expect("invertible");
            LinearSolutionSet::Point(&inv * d)
        }
        Class::ZeroDivisor => {
            let ap = a.pinv();
            let criterion = &(a * &ap) * d;
            if &criterion != d {
                return LinearSolutionSet::Empty;
            }
            let base = &ap * d;
            let residual_map = &SplitQuaternion::one() - &(&ap * a);
            let projector = Mat4::left_mul(&residual_map);
            let rank = projector.rank();
            LinearSolutionSet::Affine {
                base,
                projector,
                rank,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat, Scalar};

    fn q(x0: i64, x1: i64, x2: i64, x3: i64) -> SplitQuaternion {
        SplitQuaternion::new(int(x0), int(x1), int(x2), int(x3))
    }

    #[test]
    fn invertible_gives_point() {
        let set = solve_linear(&q(2, 0, 0, 0), &SplitQuaternion::unit_i());
        assert_eq!(
            set,
            LinearSolutionSet::Point(SplitQuaternion::unit_i().scale(&rat(1, 2)))
        );
    }

    #[test]
    fn unsolvable_zero_divisor_case() {
        // a = 1 + j, d = 2j: a a⁺ d = (1+j) j = 1 + j ≠ 2j
        let set = solve_linear(&q(1, 0, 1, 0), &q(0, 0, 2, 0));
        assert_eq!(set, LinearSolutionSet::Empty);
    }

    #[test]
    fn rank_two_affine_set() {
        // (-1+i+j+k) x = 1/2 - 5/2 i - 1/2 j - 5/2 k
        let a = q(-1, 1, 1, 1);
        let d = SplitQuaternion::new(rat(1, 2), rat(-5, 2), rat(-1, 2), rat(-5, 2));
        let LinearSolutionSet::Affine {
            base,
            projector,
            rank,
        } = solve_linear(&a, &d)
        else {
            panic!("expected affine set");
        };
        assert_eq!(rank, 2);
        assert_eq!(
            base,
            SplitQuaternion::new(rat(-3, 4), rat(1, 2), rat(-1, 2), rat(3, 4))
        );
        assert!(projector.is_idempotent());
        // every member solves the equation
        for y in [q(0, 0, 0, 0), q(1, 2, 3, 4), q(-1, 0, 7, -3)] {
            let x = &base + &projector.mul_vec(&y);
            assert_eq!(&a * &x, d);
        }
        // and the parametrization matches the expected spans
        let basis = projector.column_space_basis();
        assert_eq!(basis.len(), 2);
        for b in basis {
            assert!((&a * &b).is_zero());
        }
    }

    #[test]
    fn zero_coefficient() {
        assert_eq!(
            solve_linear(&SplitQuaternion::zero(), &q(1, 0, 0, 0)),
            LinearSolutionSet::Empty
        );
        let all = solve_linear(&SplitQuaternion::zero(), &SplitQuaternion::zero());
        let LinearSolutionSet::Affine { rank, .. } = all else {
            panic!("expected affine set");
        };
        assert_eq!(rank, 4);
    }

    #[test]
    fn point_solution_from_invertible_coefficient() {
        // (-2+2i-2j+k) x = -4-i-5j-k has the single solution -1+17/3 i+1/3 j+6k
        let a = q(-2, 2, -2, 1);
        let d = q(-4, -1, -5, -1);
        let expected =
            SplitQuaternion::new(int(-1), Scalar::new(17.into(), 3.into()), rat(1, 3), int(6));
        assert_eq!(solve_linear(&a, &d), LinearSolutionSet::Point(expected));
    }
}
