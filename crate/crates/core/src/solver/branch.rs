//! Scalar data driving branch dispatch and the closed-form solutions.

use super::normalize::NormalizedEquation;
use crate::algebra::scalar::Scalar;
use num_traits::One;

/// Inner products, forms, and the derived scalars shared by all branches.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchData {
    pub p_ab: Scalar,
    pub p_ac: Scalar,
    pub p_bc: Scalar,
    pub i_b: Scalar,
    pub i_c: Scalar,
    /// `δ = a2 b3 - a3 b2 + b1 = ⟨a·i, b⟩`.
    pub delta: Scalar,
    /// `t1 = c2 - c0 a2 - a3 c1 = -⟨a·j, c⟩`.
    pub t1: Scalar,
    /// `t2 = c3 - c0 a3 + a2 c1 = -⟨a·k, c⟩`.
    pub t2: Scalar,
}

impl BranchData {
    pub fn new(eq: &NormalizedEquation) -> Self {
        let a = eq.a();
        let b = &eq.b;
        let c = &eq.c;
        Self {
            p_ab: a.inner(b),
            p_ac: a.inner(c),
            p_bc: b.inner(c),
            i_b: b.qform(),
            i_c: c.qform(),
            delta: &(&(&eq.a2 * &b.x3) - &(&eq.a3 * &b.x2)) + &b.x1,
            t1: &(&c.x2 - &(&c.x0 * &eq.a2)) - &(&eq.a3 * &c.x1),
            t2: &(&c.x3 - &(&c.x0 * &eq.a3)) + &(&eq.a2 * &c.x1),
        }
    }
}

/// The derived quantities of the zero-divisor branch with `⟨a,b⟩ ≠ 0`:
/// the pinned real part, the matrix data `k1, k2, m`, the affine offsets
/// `d1, d2`, the linear-equation pair `r, l` in the free coordinate, and
/// the solvability defect `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct PabNonzeroData {
    pub x0: Scalar,
    pub k1: Scalar,
    pub k2: Scalar,
    pub m: Scalar,
    pub d1: Scalar,
    pub d2: Scalar,
    pub r: Scalar,
    pub l: Scalar,
    pub f: Scalar,
}

impl PabNonzeroData {
    pub fn new(eq: &NormalizedEquation, bd: &BranchData) -> Self {
        assert!(!bd.p_ab.is_zero(), "requires ⟨a,b⟩ ≠ 0");
        let two = Scalar::one() + Scalar::one();
        let four = &two * &two;
        let (a2, a3) = (&eq.a2, &eq.a3);
        let (b1, b2, b3) = (&eq.b.x1, &eq.b.x2, &eq.b.x3);
        let c0 = &eq.c.x0;
        let c1 = &eq.c.x1;

        let x0 = -&bd.i_b / &(&four * &bd.p_ab);
        let k1 = &(&(&two * b2) * &bd.delta) - &(a3 * &bd.i_b);
        let k2 = &(-&(&(&two * b3) * &bd.delta)) - &(a2 * &bd.i_b);
        let m = &(&(&two * b1) * &bd.delta) - &bd.i_b;
        debug_assert_eq!(m, &(&bd.p_ab * &bd.p_ab) + &(&bd.delta * &bd.delta));
        let d1 = &(&(-&bd.p_ab * &bd.t1) - &(&bd.delta * &bd.t2)) / &m;
        let d2 = &(&(&bd.delta * &bd.t1) - &(&bd.p_ab * &bd.t2)) / &m;

        let r = {
            let num = &(&(&(&two * &k1) * &d1) - &(&(&two * &k2) * &d2)) + &(b2 * &k1);
            let num = &(&num - &(b3 * &k2)) + &(&(&two * &(&(a2 * &k1) - &(a3 * &k2))) * &x0);
            let num = &num - &(&m * b1);
            &num / &m
        };
        let l = {
            let head = &(&(&(b2 * &d1) + &(b3 * &d2)) + &(&(&d1 * &d1) + &(&d2 * &d2))) + c0;
            let quad = &(&(&two * &(&(&(a2 * &k2) + &(a3 * &k1)) + &m)) / &m) * &(&x0 * &x0);
            let lin = {
                let inner = &(&(&(&two * &k2) * &d1) + &(&(&two * &k1) * &d2))
                    + &(&(b2 * &k2) + &(b3 * &k1));
                let inner =
                    &(&inner + &(&(&(&two * a2) * &d1) * &m)) + &(&(&(&two * a3) * &d2) * &m);
                &(&inner / &m) * &x0
            };
            &(&head + &quad) + &lin
        };
        let f = {
            let quad = &(&(&(&(&two * a3) * &k2) - &(&(&two * a2) * &k1)) / &m) * &(&x0 * &x0);
            let lin = {
                let inner = &(&(&(b3 * &k2) - &(b2 * &k1)) / &m)
                    + &(&(&(&two * a3) * &d1) - &(&(&two * a2) * &d2));
                let inner = &inner + b1;
                &inner * &x0
            };
            let tail = &(&(b3 * &d1) - &(b2 * &d2)) + c1;
            &(&quad + &lin) + &tail
        };

        Self {
            x0,
            k1,
            k2,
            m,
            d1,
            d2,
            r,
            l,
            f,
        }
    }
}

use num_traits::Zero;
