//! All split-quaternion square roots of a given element.
//!
//! Writing `x² = 2 x0 x - I_x`, a root with `x0 ≠ 0` has `Im(x) = Im(q)/(2x0)`
//! and `u = x0²` solving `u² - Re(q) u - I_{Im(q)}/4 = 0`; a root with
//! `x0 = 0` forces `Im(q) = 0` and sweeps the quadric `I_v = -Re(q)` of
//! purely imaginary `v`.

use super::family::{AffineExpr, Family, QuadExpr, SolutionPoint, SqrtFamily};
use super::set::SolutionSet;
use crate::algebra::scalar::{exact_sqrt, scalar_to_f64, Scalar};
use crate::algebra::SplitQuaternion;
use num_traits::{One, Signed, Zero};

/// The full solution set of `x² = q`.
pub fn square_roots(q: &SplitQuaternion) -> SolutionSet {
    let mut set = SolutionSet::empty();
    let im = q.im();
    let re = q.re();

    if im.is_zero() {
        // x0 = 0 branch: the quadric x1² - x2² - x3² = -Re(q)
        set.push_family(pure_imaginary_quadric(&-re.clone()));
        // x0 ≠ 0 branch: x real with x² = Re(q)
        if re.is_positive() {
            push_real_pair(&mut set, &re);
        }
    } else {
        // u² - Re(q) u - I_im/4 = 0
        let four = Scalar::from_integer(4.into());
        let j = im.qform();
        let disc = &(&re * &re) + &j;
        if disc.is_negative() {
            return set;
        }
        let two = Scalar::one() + Scalar::one();
        match exact_sqrt(&disc) {
            Some(s) => {
                let mut candidates = vec![&(&re + &s) / &two];
                if !s.is_zero() {
                    candidates.push(&(&re - &s) / &two);
                }
                for u in candidates {
                    if u.is_positive() {
                        push_roots_for_u(&mut set, &u, &im);
                    }
                }
            }
            None => {
                let s = scalar_to_f64(&disc).sqrt();
                let re_f = scalar_to_f64(&re);
                for u in [(re_f + s) / 2.0, (re_f - s) / 2.0] {
                    if u > 0.0 {
                        push_float_roots_for_u(&mut set, u, &im);
                    }
                }
            }
        }
        let _ = four;
    }
    set
}

fn push_real_pair(set: &mut SolutionSet, re: &Scalar) {
    match exact_sqrt(re) {
        Some(r) => {
            set.push_point(SolutionPoint::Exact(SplitQuaternion::from_real(r.clone())));
            set.push_point(SolutionPoint::Exact(SplitQuaternion::from_real(-r)));
        }
        None => {
            let r = scalar_to_f64(re).sqrt();
            set.push_point(SolutionPoint::Approx([r, 0.0, 0.0, 0.0]));
            set.push_point(SolutionPoint::Approx([-r, 0.0, 0.0, 0.0]));
        }
    }
}

fn push_roots_for_u(set: &mut SolutionSet, u: &Scalar, im: &SplitQuaternion) {
    match exact_sqrt(u) {
        Some(x0) => {
            for sgn in [1i64, -1] {
                let x0 = &x0 * &Scalar::from_integer(sgn.into());
                let two_x0 = &(Scalar::one() + Scalar::one()) * &x0;
                let scaled = im.scale(&two_x0.recip());
                let mut root = scaled;
                root.x0 = x0;
                set.push_point(SolutionPoint::Exact(root));
            }
        }
        None => push_float_roots_for_u(set, scalar_to_f64(u), im),
    }
}

fn push_float_roots_for_u(set: &mut SolutionSet, u: f64, im: &SplitQuaternion) {
    let imf = im.to_f64();
    for sgn in [1.0f64, -1.0] {
        let x0 = sgn * u.sqrt();
        set.push_point(SolutionPoint::Approx([
            x0,
            imf[1] / (2.0 * x0),
            imf[2] / (2.0 * x0),
            imf[3] / (2.0 * x0),
        ]));
    }
}

/// `{x1 i + x2 j + x3 k : x1² - x2² - x3² = level}` as a square-root branch
/// over `(x1, x2)` with `x3 = ±√(x1² - x2² - level)`.
pub fn pure_imaginary_quadric(level: &Scalar) -> Family {
    Family::SqrtBranch(SqrtFamily {
        param_names: vec!["x1", "x2"],
        param_coords: vec![1, 2],
        affine: [
            AffineExpr::constant(Scalar::zero(), 2),
            AffineExpr {
                constant: Scalar::zero(),
                lin: vec![Scalar::one(), Scalar::zero()],
            },
            AffineExpr {
                constant: Scalar::zero(),
                lin: vec![Scalar::zero(), Scalar::one()],
            },
            AffineExpr::constant(Scalar::zero(), 2),
        ],
        sqrt_coord: 3,
        sqrt_scale: Scalar::one(),
        disc: QuadExpr::new(
            -level.clone(),
            vec![Scalar::zero(), Scalar::zero()],
            vec![
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), -Scalar::one()],
            ],
        ),
    })
}
