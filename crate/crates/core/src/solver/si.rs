//! Roots whose pivot `2 x0 a + b` is invertible.
//!
//! Such a root is recovered from its trace/norm pair `(T, N) = (2x0, I_x)`
//! as `x = (Ta + b)⁻¹ (aN - c)`. The pair solves a real system that pins
//! `T` to a cubic when `⟨a,b⟩ ≠ 0`, to closed forms when `⟨a,b⟩ = 0` and
//! `I_b + 2⟨a,c⟩ ≠ 0`, and otherwise degenerates to a two-parameter affine
//! family. Every reconstructed candidate is validated before emission.

use super::branch::BranchData;
use super::family::{AffineFamily, Family, SolutionPoint};
use super::normalize::NormalizedEquation;
use super::set::SolutionSet;
use super::SolveError;
use crate::algebra::scalar::{scalar_to_f64, Real, Scalar};
use crate::algebra::{Class, SplitQuaternionF64};
use crate::realroots::{self, RealPoly};
use num_traits::{One, Zero};

/// All roots with invertible pivot. `b` must be nonzero.
pub fn solve_si(eq: &NormalizedEquation) -> SolutionSet {
    let bd = BranchData::new(eq);
    if !bd.p_ab.is_zero() {
        solve_pab_nonzero(eq).expect("branch checked")
    } else {
        solve_pab_zero(eq).expect("branch checked")
    }
}

/// Case `⟨a,b⟩ ≠ 0`: `T` runs over the real roots of the trace cubic.
pub fn solve_pab_nonzero(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    let bd = BranchData::new(eq);
    if eq.b.is_zero() || bd.p_ab.is_zero() {
        return Err(SolveError::WrongBranch("requires b ≠ 0 and ⟨a,b⟩ ≠ 0"));
    }
    let two = Scalar::one() + Scalar::one();
    let four = &two * &two;
    let p = &bd.p_ab;
    let s = &(&two * &bd.p_ac) + &bd.i_b;
    // 4p² T³ + 4ps T² + (4p·P_bc + s²) T + 2 P_bc s - 2p I_c = 0
    let c3 = &four * &(p * p);
    let c2 = &four * &(p * &s);
    let c1 = &(&four * &(p * &bd.p_bc)) + &(&s * &s);
    let c0 = &(&(&two * &bd.p_bc) * &s) - &(&(&two * p) * &bd.i_c);
    let cubic = RealPoly::new(vec![c0, c1, c2, c3]);
    let roots = realroots::real_roots(&cubic).expect("cubic is nonzero");

    let mut set = SolutionSet::empty();
    for root in roots.reals {
        match &root.value {
            Real::Exact(t) => {
                // N = (2p T² + s T + 2 P_bc) / 2p
                let n = &(&(&(&(&two * p) * t) * t) + &(&s * t)) + &(&two * &bd.p_bc);
                let n = &n / &(&two * p);
                try_exact_candidate(eq, t, &n, &mut set);
            }
            Real::Approx(t) => {
                let pf = scalar_to_f64(p);
                let sf = scalar_to_f64(&s);
                let n = (2.0 * pf * t * t + sf * t + 2.0 * scalar_to_f64(&bd.p_bc)) / (2.0 * pf);
                try_float_candidate(eq, *t, n, &mut set);
            }
        }
    }
    Ok(set)
}

/// Case `⟨a,b⟩ = 0`: closed-form `(T, N)` when `I_b + 2⟨a,c⟩ ≠ 0`, else the
/// degenerate two-parameter family (requires `I_c = P_bc = 0`, `I_b ≠ 0`,
/// and a vanishing defect).
pub fn solve_pab_zero(eq: &NormalizedEquation) -> Result<SolutionSet, SolveError> {
    let bd = BranchData::new(eq);
    if eq.b.is_zero() || !bd.p_ab.is_zero() {
        return Err(SolveError::WrongBranch("requires b ≠ 0 and ⟨a,b⟩ = 0"));
    }
    let two = Scalar::one() + Scalar::one();
    let denom = &bd.i_b + &(&two * &bd.p_ac);
    let mut set = SolutionSet::empty();
    if !denom.is_zero() {
        let t = &(-&two * &bd.p_bc) / &denom;
        let n = &bd.i_c / &denom;
        try_exact_candidate(eq, &t, &n, &mut set);
        return Ok(set);
    }
    // degenerate case: an invertible pivot needs I_b ≠ 0, and the trace/norm
    // system forces I_c = 0 and P_bc = 0
    if !bd.i_c.is_zero() || !bd.p_bc.is_zero() || bd.i_b.is_zero() {
        return Ok(set);
    }
    debug_assert!(!bd.delta.is_zero());
    let (b2, b3) = (&eq.b.x2, &eq.b.x3);
    let defect = {
        let t_sq = &(&bd.t1 * &bd.t1) + &(&bd.t2 * &bd.t2);
        let cross = &(&(b3 * &bd.t1) - &(b2 * &bd.t2)) * &bd.delta;
        &(&t_sq + &cross) + &(&(&eq.c.x0 * &bd.delta) * &bd.delta)
    };
    if !defect.is_zero() {
        return Ok(set);
    }
    let (a2, a3) = (&eq.a2, &eq.a3);
    let b1 = &eq.b.x1;
    let d = &bd.delta;
    set.push_family(Family::Affine(AffineFamily {
        param_names: vec!["x0", "x1"],
        param_coords: vec![0, 1],
        base: [
            Real::Exact(Scalar::zero()),
            Real::Exact(Scalar::zero()),
            Real::Exact(-&bd.t2 / d),
            Real::Exact(&bd.t1 / d),
        ],
        dirs: vec![
            [
                Scalar::one(),
                Scalar::zero(),
                -&(&(a2 * b1) + b3) / d,
                &(b2 - &(a3 * b1)) / d,
            ],
            [
                Scalar::zero(),
                Scalar::one(),
                -&(&(a3 * b1) - b2) / d,
                &(&(a2 * b1) + b3) / d,
            ],
        ],
        excluded: Vec::new(),
    }));
    Ok(set)
}

/// Reconstruct and validate an exact candidate for the pair `(T, N)`.
fn try_exact_candidate(eq: &NormalizedEquation, t: &Scalar, n: &Scalar, set: &mut SolutionSet) {
    let a = eq.a();
    let pivot = &a.scale(t) + &eq.b;
    if pivot.classify() != Class::Invertible {
        // zero-divisor pivots belong to the other branch
        return;
    }
    let rhs = &a.scale(n) - &eq.c;
    let x = &pivot.inverse().expect("invertible") * &rhs;
    // consistency of the reconstruction with its own trace and norm
    let two = Scalar::one() + Scalar::one();
    if &(&two * &x.x0) != t || &x.qform() != n {
        return;
    }
    let residual = &(&(&a * &(&x * &x)) + &(&eq.b * &x)) + &eq.c;
    if residual.is_zero() {
        set.push_point(SolutionPoint::Exact(x));
    }
}

/// Float-path candidate for an irrational trace root.
fn try_float_candidate(eq: &NormalizedEquation, t: f64, n: f64, set: &mut SolutionSet) {
    let a = SplitQuaternionF64(eq.a().to_f64());
    let b = SplitQuaternionF64(eq.b.to_f64());
    let c = SplitQuaternionF64(eq.c.to_f64());
    let pivot = SplitQuaternionF64([
        t * a.0[0] + b.0[0],
        t * a.0[1] + b.0[1],
        t * a.0[2] + b.0[2],
        t * a.0[3] + b.0[3],
    ]);
    if pivot.qform().abs() <= 1e-9 {
        return;
    }
    let Some(inv) = pivot.inverse() else { return };
    let rhs = SplitQuaternionF64([
        n * a.0[0] - c.0[0],
        n * a.0[1] - c.0[1],
        n * a.0[2] - c.0[2],
        n * a.0[3] - c.0[3],
    ]);
    let x = inv.mul(&rhs);
    if (2.0 * x.0[0] - t).abs() > 1e-9 || (x.qform() - n).abs() > 1e-9 {
        return;
    }
    let residual = a.mul(&x.mul(&x)).add(&b.mul(&x)).add(&c);
    if residual.max_abs() < 1e-9 {
        set.push_point(SolutionPoint::Approx(x.0));
    }
}
