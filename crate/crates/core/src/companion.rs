//! The independent companion-polynomial route: every root's trace/norm
//! quadratic `x² - T x + N` divides the real companion polynomial, so the
//! root set is recovered by solving the linear equation `(Ta + b) x = aN - c`
//! for each quadratic divisor and intersecting with the trace/norm class.

use crate::algebra::scalar::{exact_sqrt, scalar_to_f64, Real, Scalar};
use crate::algebra::{solve_linear, LinearSolutionSet, SplitQuaternion, SplitQuaternionF64};
use crate::realroots::{self, RealPoly};
use crate::solver::{AffineFamily, Family, QuadEquation, SolutionPoint, SolutionSet};
use num_traits::{One, Signed, Zero};

/// A trace/norm class: all elements sharing `2·Re(x) = T` and `I_x = N`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiClass {
    pub trace: Real,
    pub norm: Real,
}

impl QuasiClass {
    pub fn contains(&self, p: &SolutionPoint, tol: f64) -> bool {
        match (p, &self.trace, &self.norm) {
            (SolutionPoint::Exact(q), Real::Exact(t), Real::Exact(n)) => {
                let two = Scalar::one() + Scalar::one();
                &(&two * &q.x0) == t && &q.qform() == n
            }
            _ => {
                let v = p.to_f64();
                let qf = SplitQuaternionF64(v);
                (2.0 * v[0] - self.trace.to_f64()).abs() <= tol
                    && (qf.qform() - self.norm.to_f64()).abs() <= tol
            }
        }
    }
}

/// The real companion polynomial
/// `I_a x⁴ + 2⟨a,b⟩ x³ + (2⟨a,c⟩ + I_b) x² + 2⟨b,c⟩ x + I_c`
/// (degree ≤ 3 whenever the leading coefficient is a zero divisor).
pub fn companion_poly(eq: &QuadEquation) -> RealPoly {
    let two = Scalar::one() + Scalar::one();
    let c0 = eq.c.qform();
    let c1 = &two * &eq.b.inner(&eq.c);
    let c2 = &(&two * &eq.a.inner(&eq.c)) + &eq.b.qform();
    let c3 = &two * &eq.a.inner(&eq.b);
    let c4 = eq.a.qform();
    RealPoly::new(vec![c0, c1, c2, c3, c4])
}

/// Intersect a linear solution set with a trace/norm class.
///
/// For an affine set the trace condition cuts an affine line (the range of
/// the projector always meets the real axis), and the norm condition is a
/// quadratic along that line: zero, one, or two points, or the whole line
/// when it degenerates identically.
pub fn class_intersect(lin: &LinearSolutionSet, class: &QuasiClass) -> SolutionSet {
    let mut out = SolutionSet::empty();
    let (Real::Exact(t), Real::Exact(n)) = (&class.trace, &class.norm) else {
        debug_assert!(false, "class intersection expects exact classes");
        return out;
    };
    match lin {
        LinearSolutionSet::Empty => {}
        LinearSolutionSet::Point(p) => {
            if class.contains(&SolutionPoint::Exact(p.clone()), 0.0) {
                out.push_point(SolutionPoint::Exact(p.clone()));
            }
        }
        LinearSolutionSet::Affine {
            base, projector, ..
        } => {
            let basis = projector.column_space_basis();
            if basis.len() == 4 {
                // the whole algebra: the intersection is the entire class,
                // a quadric over (x1, x2) at fixed real part
                let two = Scalar::one() + Scalar::one();
                let half_t = t / &two;
                let level = n - &(&half_t * &half_t);
                if let Family::SqrtBranch(mut fam) =
                    crate::solver::squareroot::pure_imaginary_quadric(&level)
                {
                    fam.affine[0].constant = half_t;
                    out.push_family(Family::SqrtBranch(fam));
                }
                return out;
            }
            // pick a basis vector with nonzero real component as the pivot
            let Some(pivot_idx) = basis.iter().position(|u| !u.x0.is_zero()) else {
                // constraint can't be solved along the set: either the whole
                // set sits on the trace hyperplane or misses it entirely
                debug_assert!(false, "rank-2 projector ranges always meet the real axis");
                return out;
            };
            let u = basis[pivot_idx].clone();
            let two = Scalar::one() + Scalar::one();
            for (vi, v) in basis.iter().enumerate() {
                if vi == pivot_idx && basis.len() > 1 {
                    continue;
                }
                if basis.len() == 1 {
                    // a line: the trace condition picks a single parameter
                    let s = &(&(t / &two) - &base.x0) / &u.x0;
                    let gamma = base + &u.scale(&s);
                    if &(&two * &gamma.x0) == t {
                        push_norm_condition_points(&mut out, &gamma, None, n);
                    }
                    break;
                }
                // rank 2: solve the trace condition for the pivot coordinate
                // x = base + s·u + t·v, s = s0 + s1·tv
                let s0 = &(&(t / &two) - &base.x0) / &u.x0;
                let s1 = -&v.x0 / &u.x0;
                let gamma = base + &u.scale(&s0);
                let dir = v + &u.scale(&s1);
                debug_assert!(dir.x0.is_zero());
                push_norm_condition_points(&mut out, &gamma, Some(&dir), n);
            }
        }
    }
    out
}

/// Solve `I(γ + t w) = N` along the line and push the results (or, with no
/// direction, just test γ).
fn push_norm_condition_points(
    out: &mut SolutionSet,
    gamma: &SplitQuaternion,
    dir: Option<&SplitQuaternion>,
    n: &Scalar,
) {
    let Some(w) = dir else {
        if &gamma.qform() == n {
            out.push_point(SolutionPoint::Exact(gamma.clone()));
        }
        return;
    };
    let two = Scalar::one() + Scalar::one();
    let four = &two * &two;
    let a = w.qform();
    let b = &two * &gamma.inner(w);
    let c = &gamma.qform() - n;
    if a.is_zero() && b.is_zero() {
        if c.is_zero() {
            // the whole line satisfies the class: a one-parameter affine set
            push_line_family(out, gamma, w);
        }
        return;
    }
    if a.is_zero() {
        let t = -&c / &b;
        out.push_point(SolutionPoint::Exact(gamma + &w.scale(&t)));
        return;
    }
    let disc = &(&b * &b) - &(&four * &(&a * &c));
    if disc.is_negative() {
        return;
    }
    match exact_sqrt(&disc) {
        Some(s) => {
            let mut ts = vec![&(-&b + &s) / &(&two * &a)];
            if !s.is_zero() {
                ts.push(&(-&b - &s) / &(&two * &a));
            }
            for t in ts {
                out.push_point(SolutionPoint::Exact(gamma + &w.scale(&t)));
            }
        }
        None => {
            let s = scalar_to_f64(&disc).sqrt();
            let bf = scalar_to_f64(&b);
            let af = scalar_to_f64(&a);
            let gf = gamma.to_f64();
            let wf = w.to_f64();
            for t in [(-bf + s) / (2.0 * af), (-bf - s) / (2.0 * af)] {
                out.push_point(SolutionPoint::Approx([
                    gf[0] + t * wf[0],
                    gf[1] + t * wf[1],
                    gf[2] + t * wf[2],
                    gf[3] + t * wf[3],
                ]));
            }
        }
    }
}

/// Present the line `γ + t w` (with `w0 = 0`) as an affine family whose
/// parameter reads off a coordinate.
fn push_line_family(out: &mut SolutionSet, gamma: &SplitQuaternion, w: &SplitQuaternion) {
    let wc = w.coords();
    let Some(idx) = (1..4).find(|&i| !wc[i].is_zero()) else {
        return;
    };
    let scale = wc[idx].clone().recip();
    let dir = w.scale(&scale);
    let offset = -gamma.coord(idx).clone();
    let base_q = gamma + &dir.scale(&offset);
    let names = ["x0", "x1", "x2", "x3"];
    let base = base_q.coords().map(Real::Exact);
    out.push_family(Family::Affine(AffineFamily {
        param_names: vec![names[idx]],
        param_coords: vec![idx],
        base,
        dirs: vec![dir.coords()],
        excluded: Vec::new(),
    }));
}

/// Per-divisor detail of the companion run.
#[derive(Debug, Clone)]
pub struct DivisorStep {
    pub trace: Real,
    pub norm: Real,
    /// Present on the exact path.
    pub linear: Option<LinearSolutionSet>,
    pub contribution: SolutionSet,
}

#[derive(Debug, Clone)]
pub struct CompanionReport {
    pub poly: RealPoly,
    pub steps: Vec<DivisorStep>,
    pub union: SolutionSet,
}

/// Outcome of the companion route.
#[derive(Debug, Clone)]
pub enum CompanionOutcome {
    /// The companion polynomial vanishes identically; the route says nothing.
    Inapplicable,
    Solved(CompanionReport),
}

impl CompanionOutcome {
    pub fn solution_set(&self) -> Option<&SolutionSet> {
        match self {
            CompanionOutcome::Inapplicable => None,
            CompanionOutcome::Solved(r) => Some(&r.union),
        }
    }
}

/// Run the companion route on any quadratic.
pub fn solve_via_companion(eq: &QuadEquation) -> CompanionOutcome {
    let poly = companion_poly(eq);
    if poly.is_zero() {
        return CompanionOutcome::Inapplicable;
    }
    let mut report = CompanionReport {
        poly: poly.clone(),
        steps: Vec::new(),
        union: SolutionSet::empty(),
    };
    let divisors = match poly.degree() {
        Some(d) if d >= 2 => divisors_up_to_quartic(&poly),
        _ => Vec::new(),
    };
    for (trace, norm) in divisors {
        let step = match (&trace, &norm) {
            (Real::Exact(t), Real::Exact(n)) => {
                let pivot = &eq.a.scale(t) + &eq.b;
                let rhs = &eq.a.scale(n) - &eq.c;
                let lin = solve_linear(&pivot, &rhs);
                let contribution = class_intersect(
                    &lin,
                    &QuasiClass {
                        trace: trace.clone(),
                        norm: norm.clone(),
                    },
                );
                DivisorStep {
                    trace,
                    norm,
                    linear: Some(lin),
                    contribution,
                }
            }
            _ => {
                // numeric divisor: only the invertible-pivot reconstruction
                // is well-posed
                let contribution = float_divisor_contribution(eq, trace.to_f64(), norm.to_f64());
                DivisorStep {
                    trace,
                    norm,
                    linear: None,
                    contribution,
                }
            }
        };
        report.union.extend(step.contribution.clone());
        report.steps.push(step);
    }
    CompanionOutcome::Solved(report)
}

fn float_divisor_contribution(eq: &QuadEquation, t: f64, n: f64) -> SolutionSet {
    let mut out = SolutionSet::empty();
    let a = SplitQuaternionF64(eq.a.to_f64());
    let b = SplitQuaternionF64(eq.b.to_f64());
    let c = SplitQuaternionF64(eq.c.to_f64());
    let pivot = SplitQuaternionF64([
        t * a.0[0] + b.0[0],
        t * a.0[1] + b.0[1],
        t * a.0[2] + b.0[2],
        t * a.0[3] + b.0[3],
    ]);
    if pivot.qform().abs() <= 1e-9 {
        return out;
    }
    let Some(inv) = pivot.inverse() else {
        return out;
    };
    let rhs = SplitQuaternionF64([
        n * a.0[0] - c.0[0],
        n * a.0[1] - c.0[1],
        n * a.0[2] - c.0[2],
        n * a.0[3] - c.0[3],
    ]);
    let x = inv.mul(&rhs);
    let residual = a.mul(&x.mul(&x)).add(&b.mul(&x)).add(&c);
    if residual.max_abs() < 1e-9 && (2.0 * x.0[0] - t).abs() < 1e-9 && (x.qform() - n).abs() < 1e-9
    {
        out.push_point(SolutionPoint::Approx(x.0));
    }
    out
}

/// Quadratic divisors of a polynomial of degree 2..4 (the degree-3 case is
/// the public [`realroots::quadratic_divisors`]; degree 4 arises only for
/// invertible leading coefficients).
fn divisors_up_to_quartic(poly: &RealPoly) -> Vec<(Real, Real)> {
    match poly.degree() {
        Some(2) | Some(3) => realroots::quadratic_divisors(poly).unwrap_or_default(),
        Some(4) => {
            let Ok(roots) = realroots::real_roots(poly) else {
                return Vec::new();
            };
            let mut out = Vec::new();
            for (i, ri) in roots.reals.iter().enumerate() {
                for (j, rj) in roots.reals.iter().enumerate().skip(i) {
                    if i == j && ri.multiplicity < 2 {
                        continue;
                    }
                    let t = match (&ri.value, &rj.value) {
                        (Real::Exact(x), Real::Exact(y)) => Real::Exact(x + y),
                        _ => Real::Approx(ri.value.to_f64() + rj.value.to_f64()),
                    };
                    let n = match (&ri.value, &rj.value) {
                        (Real::Exact(x), Real::Exact(y)) => Real::Exact(x * y),
                        _ => Real::Approx(ri.value.to_f64() * rj.value.to_f64()),
                    };
                    out.push((t, n));
                }
            }
            for pair in &roots.pairs {
                out.push((pair.trace.clone(), pair.norm.clone()));
            }
            out
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn q(c: [(i64, i64); 4]) -> SplitQuaternion {
        SplitQuaternion::new(
            rat(c[0].0, c[0].1),
            rat(c[1].0, c[1].1),
            rat(c[2].0, c[2].1),
            rat(c[3].0, c[3].1),
        )
    }

    fn eq(a: [(i64, i64); 4], b: [(i64, i64); 4], c: [(i64, i64); 4]) -> QuadEquation {
        QuadEquation::new(q(a), q(b), q(c))
    }

    const ONE: (i64, i64) = (1, 1);
    const ZERO: (i64, i64) = (0, 1);

    #[test]
    fn companion_of_pinned_case_is_a_cube() {
        let e = eq(
            [ONE, ZERO, ONE, ZERO],
            [ZERO, ONE, (2, 1), ONE],
            [(-1, 4), (5, 2), (3, 4), (5, 2)],
        );
        let p = companion_poly(&e);
        assert_eq!(p.coeffs(), &[rat(-1, 2), int(-3), int(-6), int(-4)]);
    }

    #[test]
    fn companion_vanishes_identically() {
        // (1+j)x² + (-i+k)x - 1 + i - j - k
        let e = eq(
            [ONE, ZERO, ONE, ZERO],
            [ZERO, (-1, 1), ZERO, ONE],
            [(-1, 1), ONE, (-1, 1), (-1, 1)],
        );
        assert!(companion_poly(&e).is_zero());
        assert!(matches!(
            solve_via_companion(&e),
            CompanionOutcome::Inapplicable
        ));
    }

    #[test]
    fn quartic_companion_with_invertible_leading_coefficient() {
        // (2+j)x² + jx + (2+j+k) = 0 has root i; the companion has the I_a x⁴
        // term and the route must still recover the root
        let a = q([(2, 1), ZERO, ONE, ZERO]);
        let b = q([ZERO, ZERO, ONE, ZERO]);
        let x = SplitQuaternion::unit_i();
        let c = -&(&(&a * &(&x * &x)) + &(&b * &x));
        let e = QuadEquation::new(a, b, c);
        let p = companion_poly(&e);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.coeff(4), int(3));
        let CompanionOutcome::Solved(report) = solve_via_companion(&e) else {
            panic!("applicable");
        };
        // the quartic's conjugate pairs travel the numeric path, so the
        // recovered root is a polished float
        assert!(report
            .union
            .contains(&SolutionPoint::Exact(SplitQuaternion::unit_i()), 1e-9));
        for pt in report.union.sample_members(20) {
            let r = crate::verify::residual(&e, &pt);
            assert!(r.exact_zero || (!pt.is_exact() && r.max_abs < 1e-9));
        }
    }

    #[test]
    fn companion_factored_pair_case() {
        // (1+j)x² + (2i+k)x + 1+i+2j+k → (x-1)(x+3)
        let e = eq(
            [ONE, ZERO, ONE, ZERO],
            [ZERO, (2, 1), ZERO, ONE],
            [ONE, ONE, (2, 1), ONE],
        );
        let p = companion_poly(&e);
        assert_eq!(p.coeffs(), &[int(-3), int(2), int(1)]);
        let CompanionOutcome::Solved(report) = solve_via_companion(&e) else {
            panic!("applicable");
        };
        assert_eq!(report.steps.len(), 1);
        assert_eq!(report.steps[0].trace, Real::Exact(int(-2)));
        assert_eq!(report.steps[0].norm, Real::Exact(int(-3)));
        assert_eq!(
            report.union.points,
            vec![SolutionPoint::Exact(SplitQuaternion::new(
                int(-1),
                rat(17, 3),
                rat(1, 3),
                int(6)
            ))]
        );
    }

    #[test]
    fn class_intersection_cuts_point_from_plane() {
        // the affine set of the pinned worked case intersected with the
        // class (T, N) = (-1, 1/4) leaves exactly -1/2 + i + k
        let pivot = q([(-1, 1), ONE, ONE, ONE]);
        let rhs = q([(1, 2), (-5, 2), (-1, 2), (-5, 2)]);
        let lin = solve_linear(&pivot, &rhs);
        let class = QuasiClass {
            trace: Real::Exact(int(-1)),
            norm: Real::Exact(rat(1, 4)),
        };
        let got = class_intersect(&lin, &class);
        assert_eq!(
            got.points,
            vec![SolutionPoint::Exact(q([(-1, 2), ONE, ZERO, ONE]))]
        );
        assert!(got.families.is_empty());
    }

    #[test]
    fn class_intersection_degenerates_to_line() {
        // pair (0, -1) of the double-root case: (i+j)x = -i-j intersected
        // with {Re = 0, I = -1} is the whole line x1 i + x1 j + k
        let pivot = q([ZERO, ONE, ONE, ZERO]);
        let rhs = q([ZERO, (-1, 1), (-1, 1), ZERO]);
        let lin = solve_linear(&pivot, &rhs);
        let class = QuasiClass {
            trace: Real::Exact(int(0)),
            norm: Real::Exact(int(-1)),
        };
        let got = class_intersect(&lin, &class);
        assert!(got.points.is_empty());
        assert_eq!(got.families.len(), 1);
        assert!(got.contains(&SolutionPoint::Exact(SplitQuaternion::unit_k()), 0.0));
        let member = SplitQuaternion::new(int(0), int(5), int(5), int(1));
        assert!(got.contains(&SolutionPoint::Exact(member), 0.0));
    }

    #[test]
    fn kept_point_matches_class() {
        let class = QuasiClass {
            trace: Real::Exact(int(-2)),
            norm: Real::Exact(int(1)),
        };
        let minus_one = SolutionPoint::Exact(SplitQuaternion::from_real(int(-1)));
        assert!(class.contains(&minus_one, 0.0));
        let lin = LinearSolutionSet::Point(SplitQuaternion::from_real(int(-1)));
        let got = class_intersect(&lin, &class);
        assert_eq!(got.points.len(), 1);
    }
}
