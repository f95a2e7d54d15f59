//! Roots whose pivot `2 x0 a + b` is a zero divisor.
//!
//! With `⟨a,b⟩ ≠ 0` the real part is pinned and the closed form reduces to
//! one linear equation in the free imaginary coordinate. With `⟨a,b⟩ = 0`
//! a zero-divisor pivot forces `I_b = 0`, which splits `b` along either
//! `i·a` or `a·i`; each alignment has its own closed form.

use super::branch::{BranchData, PabNonzeroData};
use super::family::{
    AffineExpr, AffineFamily, Family, PolyFamily, QuadExpr, SemiExplicitFamily, SolutionPoint,
    SqrtFamily, UniQuad,
};
use super::normalize::NormalizedEquation;
use super::set::SolutionSet;
use super::SolveError;
use crate::algebra::scalar::{Real, Scalar};
use crate::algebra::SplitQuaternion;
use num_traits::{One, Zero};

/// All roots with zero-divisor pivot. `b` must be nonzero.
pub fn solve_sz(eq: &NormalizedEquation) -> SolutionSet {
    let bd = BranchData::new(eq);
    if !bd.p_ab.is_zero() {
        return solve_pab_nonzero(eq).expect("branch checked");
    }
    if !bd.i_b.is_zero() {
        // a zero-divisor pivot needs 4 x0 ⟨a,b⟩ + I_b = 0
        return SolutionSet::empty();
    }
    let two_b1 = &(Scalar::one() + Scalar::one()) * &eq.b.x1;
    if bd.delta == two_b1 {
        solve_b_parallel_ia(eq).expect("branch checked")
    } else {
        debug_assert!(bd.delta.is_zero());
        solve_b_parallel_ai(eq).expect("branch checked")
    }
}

/// Case `⟨a,b⟩ ≠ 0`: the real part is `-I_b / 4⟨a,b⟩`; solvable iff the
/// defect `f` vanishes, with a single point when `r ≠ 0` and a line when
/// `r = l = 0`.
pub fn solve_pab_nonzero(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    let bd = BranchData::new(eq);
    if eq.b.is_zero() || bd.p_ab.is_zero() {
        return Err(SolveError::WrongBranch("requires b ≠ 0 and ⟨a,b⟩ ≠ 0"));
    }
    let data = PabNonzeroData::new(eq, &bd);
    let mut set = SolutionSet::empty();
    if !data.f.is_zero() {
        return Ok(set);
    }
    if !data.r.is_zero() {
        let x1 = -&data.l / &data.r;
        let x2 = &(&(&(-&data.k1 * &data.l) / &(&data.m * &data.r))
            + &(&(&data.k2 * &data.x0) / &data.m))
            + &data.d1;
        let x3 = &(&(&(&data.k2 * &data.l) / &(&data.m * &data.r))
            + &(&(&data.k1 * &data.x0) / &data.m))
            + &data.d2;
        set.push_point(SolutionPoint::Exact(SplitQuaternion::new(
            data.x0.clone(),
            x1,
            x2,
            x3,
        )));
    } else if data.l.is_zero() {
        // x1 free
        let base2 = &(&(&data.k2 * &data.x0) / &data.m) + &data.d1;
        let base3 = &(&(&data.k1 * &data.x0) / &data.m) + &data.d2;
        set.push_family(Family::Affine(AffineFamily {
            param_names: vec!["x1"],
            param_coords: vec![1],
            base: [
                Real::Exact(data.x0.clone()),
                Real::Exact(Scalar::zero()),
                Real::Exact(base2),
                Real::Exact(base3),
            ],
            dirs: vec![[
                Scalar::zero(),
                Scalar::one(),
                &data.k1 / &data.m,
                -&data.k2 / &data.m,
            ]],
            excluded: Vec::new(),
        }));
    }
    Ok(set)
}

/// Case `⟨a,b⟩ = 0`, `I_b = 0`, `δ = 2 b1` (so `b = b1 · (i·a)`).
pub fn solve_b_parallel_ia(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    let bd = BranchData::new(eq);
    let two = Scalar::one() + Scalar::one();
    let two_b1 = &two * &eq.b.x1;
    if eq.b.is_zero() || !bd.p_ab.is_zero() || !bd.i_b.is_zero() || bd.delta != two_b1 {
        return Err(SolveError::WrongBranch(
            "requires b ≠ 0, ⟨a,b⟩ = 0, I_b = 0, δ = 2 b1",
        ));
    }
    let b1 = &eq.b.x1;
    debug_assert!(!b1.is_zero());
    let (a2, a3) = (&eq.a2, &eq.a3);
    let (t1, t2) = (&bd.t1, &bd.t2);
    let c0 = &eq.c.x0;
    let c1 = &eq.c.x1;
    let four = &two * &two;
    let mut set = SolutionSet::empty();

    let s = &(a2 * t1) + &(a3 * t2);
    let t_sq = &(t1 * t1) + &(t2 * t2);
    if !s.is_zero() {
        let x0 = &(&(&(&(a3 * t1) - &(a2 * t2)) + &(&two * c1)) * b1) / &(&two * &s);
        let x1 = {
            let b1_sq = b1 * b1;
            let num = &(&t_sq + &(&(&two * &b1_sq) * &s)) + &(&(&four * &b1_sq) * c0);
            -&num / &(&(&four * b1) * &s)
        };
        let x2 = &(&(-a2 * &x0) - &(a3 * &x1)) - &(t2 / &(&two * b1));
        let x3 = &(&(-a3 * &x0) + &(a2 * &x1)) + &(t1 / &(&two * b1));
        set.push_point(SolutionPoint::Exact(SplitQuaternion::new(x0, x1, x2, x3)));
    } else {
        let cond_a = &(&(a2 * t2) - &(a3 * t1)) - &(&two * c1);
        let cond_b = &t_sq + &(&(&(&four * b1) * b1) * c0);
        if cond_a.is_zero() && cond_b.is_zero() {
            set.push_family(Family::Affine(AffineFamily {
                param_names: vec!["x0", "x1"],
                param_coords: vec![0, 1],
                base: [
                    Real::Exact(Scalar::zero()),
                    Real::Exact(Scalar::zero()),
                    Real::Exact(-t2 / &(&two * b1)),
                    Real::Exact(t1 / &(&two * b1)),
                ],
                dirs: vec![
                    [Scalar::one(), Scalar::zero(), -a2.clone(), -a3.clone()],
                    [Scalar::zero(), Scalar::one(), -a3.clone(), a2.clone()],
                ],
                excluded: Vec::new(),
            }));
        }
    }
    Ok(set)
}

/// Case `⟨a,b⟩ = 0`, `I_b = 0`, `δ = 0` (so `b = a b1 i`): roots exist iff
/// `a c = 2c`, and they split on `x0 = 0` (square-root branch) versus
/// `x0 ≠ 0` (the semi-explicit quartic family plus a polynomial family on
/// the guard line).
pub fn solve_b_parallel_ai(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    let bd = BranchData::new(eq);
    if eq.b.is_zero() || !bd.p_ab.is_zero() || !bd.i_b.is_zero() || !bd.delta.is_zero() {
        return Err(SolveError::WrongBranch(
            "requires b ≠ 0, ⟨a,b⟩ = 0, I_b = 0, δ = 0",
        ));
    }
    let mut set = SolutionSet::empty();
    let a = eq.a();
    let two = Scalar::one() + Scalar::one();
    if &a * &eq.c != eq.c.scale(&two) {
        return Ok(set);
    }
    let b1 = &eq.b.x1;
    debug_assert!(!b1.is_zero());
    let (a2, a3) = (&eq.a2, &eq.a3);
    let c0 = &eq.c.x0;
    let c1 = &eq.c.x1;
    let four = &two * &two;

    if a2.is_zero() {
        // x0 = 0, a2 = 0: x3 pinned, x2 = -a3 b1 / 2 ± √w(x1)
        let x3 = c1 / &(a3 * b1);
        let w_const = {
            let b1_sq = b1 * b1;
            &(&(&b1_sq / &four) - &(&(c1 * c1) / &b1_sq)) - c0
        };
        let fam = SqrtFamily {
            param_names: vec!["x1"],
            param_coords: vec![1],
            affine: [
                AffineExpr::constant(Scalar::zero(), 1),
                AffineExpr {
                    constant: Scalar::zero(),
                    lin: vec![Scalar::one()],
                },
                AffineExpr::constant(&(-a3 * b1) / &two, 1),
                AffineExpr::constant(x3, 1),
            ],
            sqrt_coord: 2,
            sqrt_scale: Scalar::one(),
            disc: QuadExpr::new(w_const, vec![b1.clone()], vec![vec![Scalar::one()]]),
        };
        for f in fam.simplify() {
            set.push_family(f);
        }
    } else {
        // x0 = 0, a2 ≠ 0: x2 affine in x3, x1 = -b1/2 ± √w(x3) / a2
        let b1_sq = b1 * b1;
        let w_lin = -&(&(&(&(&two * a3) * c1) + &(a2 * &b1_sq)) / b1);
        let w_const = {
            let num = &(&(&four
                * &(&(&(&(a2 * a2) * &b1_sq) * c0) + &(&(&(a2 * &b1_sq) * a3) * c1)))
                + &(&four * &(c1 * c1)))
                + &(&(&b1_sq * &b1_sq) * &(a2 * a2));
            &num / &(&four * &b1_sq)
        };
        let fam = SqrtFamily {
            param_names: vec!["x3"],
            param_coords: vec![3],
            affine: [
                AffineExpr::constant(Scalar::zero(), 1),
                AffineExpr::constant(-b1 / &two, 1),
                AffineExpr {
                    constant: c1 / &(a2 * b1),
                    lin: vec![-a3 / a2],
                },
                AffineExpr {
                    constant: Scalar::zero(),
                    lin: vec![Scalar::one()],
                },
            ],
            sqrt_coord: 1,
            sqrt_scale: a2.clone().recip(),
            disc: QuadExpr::new(w_const, vec![w_lin], vec![vec![Scalar::one()]]),
        };
        for f in fam.simplify() {
            set.push_family(f);
        }
    }

    // x0 ≠ 0, off the guard line: the quartic family
    set.push_family(Family::SemiExplicit(SemiExplicitFamily {
        a2: a2.clone(),
        a3: a3.clone(),
        b1: b1.clone(),
        c0: c0.clone(),
        c1: c1.clone(),
        x0_offset: Scalar::zero(),
    }));

    // x0 ≠ 0 on the guard line a2 x2 + a3 x3 = c1/b1: x1 quadratic in x0
    let x1_poly = {
        let b1_sq = b1 * b1;
        let b1_cb = &b1_sq * b1;
        let c0_coef = &(&(&(c1 * c1) / &b1_cb) - &(b1 / &four)) + &(c0 / b1);
        UniQuad::new(c0_coef, &(&two * c1) / &b1_sq, b1.clone().recip())
    };
    let two_ = Scalar::one() + Scalar::one();
    let x2_const = &(&(a2 * c1) / b1) - &(&(a3 * b1) / &two_);
    let x3_const = &(&(a3 * c1) / b1) + &(&(a2 * b1) / &two_);
    let neg_a3_x1 = UniQuad::new(
        &x2_const + &(-a3 * &x1_poly.c[0]),
        -a3 * &x1_poly.c[1],
        -a3 * &x1_poly.c[2],
    );
    let a2_x1 = UniQuad::new(
        &x3_const + &(a2 * &x1_poly.c[0]),
        a2 * &x1_poly.c[1],
        a2 * &x1_poly.c[2],
    );
    set.push_family(Family::PolyInParams(PolyFamily {
        comps: [UniQuad::identity(), x1_poly, neg_a3_x1, a2_x1],
        excluded: vec![Scalar::zero()],
    }));

    Ok(set)
}
