//! Parametric solution families.
//!
//! The case formulas only ever emit four shapes of infinite solution sets:
//! affine sets, sets polynomial in one parameter, square-root branches over
//! a quadratic discriminant, and the semi-explicit shape where the real part
//! solves a quartic whose coefficients depend on the free coordinates.
//! Each shape carries a closed-form evaluator and membership test.

use crate::algebra::scalar::{exact_sqrt, scalar_to_f64, Real, Scalar};
use crate::algebra::SplitQuaternion;
use crate::realroots::{self, RealPoly};
use num_traits::{One, Signed, Zero};

/// A single solution, either exact or numerically polished.
#[derive(Debug, Clone, PartialEq)]
pub enum SolutionPoint {
    Exact(SplitQuaternion),
    Approx([f64; 4]),
}

impl SolutionPoint {
    pub fn to_f64(&self) -> [f64; 4] {
        match self {
            SolutionPoint::Exact(q) => q.to_f64(),
            SolutionPoint::Approx(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SolutionPoint::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&SplitQuaternion> {
        match self {
            SolutionPoint::Exact(q) => Some(q),
            SolutionPoint::Approx(_) => None,
        }
    }

    /// Exact equality when both are exact, otherwise componentwise within `tol`.
    pub fn close_to(&self, other: &SolutionPoint, tol: f64) -> bool {
        match (self, other) {
            (SolutionPoint::Exact(a), SolutionPoint::Exact(b)) => a == b,
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= tol)
            }
        }
    }

    pub fn translate_x0(&self, delta: &Scalar) -> Self {
        match self {
            SolutionPoint::Exact(q) => {
                let mut q = q.clone();
                q.x0 = &q.x0 + delta;
                SolutionPoint::Exact(q)
            }
            SolutionPoint::Approx(v) => {
                let mut v = *v;
                v[0] += scalar_to_f64(delta);
                SolutionPoint::Approx(v)
            }
        }
    }
}

/// Affine expression `constant + Σ lin[j] · p_j` over the family parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineExpr {
    pub constant: Scalar,
    pub lin: Vec<Scalar>,
}

impl AffineExpr {
    pub fn constant(c: Scalar, nparams: usize) -> Self {
        Self {
            constant: c,
            lin: vec![Scalar::zero(); nparams],
        }
    }

    pub fn eval(&self, params: &[Scalar]) -> Scalar {
        let mut acc = self.constant.clone();
        for (l, p) in self.lin.iter().zip(params) {
            acc = &acc + &(l * p);
        }
        acc
    }

    pub fn eval_f64(&self, params: &[f64]) -> f64 {
        let mut acc = scalar_to_f64(&self.constant);
        for (l, p) in self.lin.iter().zip(params) {
            acc += scalar_to_f64(l) * p;
        }
        acc
    }
}

/// Quadratic polynomial in the family parameters (at most two):
/// `constant + Σ lin[i] p_i + Σ_{i≤j} quad[i][j] p_i p_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadExpr {
    pub constant: Scalar,
    pub lin: Vec<Scalar>,
    pub quad: Vec<Vec<Scalar>>,
}

impl QuadExpr {
    pub fn new(constant: Scalar, lin: Vec<Scalar>, quad: Vec<Vec<Scalar>>) -> Self {
        Self {
            constant,
            lin,
            quad,
        }
    }

    pub fn eval(&self, params: &[Scalar]) -> Scalar {
        let mut acc = self.constant.clone();
        for (l, p) in self.lin.iter().zip(params) {
            acc = &acc + &(l * p);
        }
        for i in 0..params.len() {
            for j in i..params.len() {
                acc = &acc + &(&(&self.quad[i][j] * &params[i]) * &params[j]);
            }
        }
        acc
    }

    pub fn eval_f64(&self, params: &[f64]) -> f64 {
        let mut acc = scalar_to_f64(&self.constant);
        for (l, p) in self.lin.iter().zip(params) {
            acc += scalar_to_f64(l) * p;
        }
        for i in 0..params.len() {
            for j in i..params.len() {
                acc += scalar_to_f64(&self.quad[i][j]) * params[i] * params[j];
            }
        }
        acc
    }
}

/// Univariate polynomial of degree at most two: `c[0] + c[1] t + c[2] t²`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniQuad {
    pub c: [Scalar; 3],
}

impl UniQuad {
    pub fn new(c0: Scalar, c1: Scalar, c2: Scalar) -> Self {
        Self { c: [c0, c1, c2] }
    }

    pub fn identity() -> Self {
        Self::new(Scalar::zero(), Scalar::one(), Scalar::zero())
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        &self.c[0] + &(&(&self.c[1] + &(&self.c[2] * t)) * t)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        scalar_to_f64(&self.c[0]) + (scalar_to_f64(&self.c[1]) + scalar_to_f64(&self.c[2]) * t) * t
    }

    /// Substitute `t -> t + delta`.
    pub fn shift_arg(&self, delta: &Scalar) -> Self {
        let c0 = &(&self.c[0] + &(&self.c[1] * delta)) + &(&(&self.c[2] * delta) * delta);
        let two = Scalar::one() + Scalar::one();
        let c1 = &self.c[1] + &(&(&two * &self.c[2]) * delta);
        Self::new(c0, c1, self.c[2].clone())
    }
}

/// `base + Σ p_j · dirs[j]`, possibly minus finitely many excluded parameter
/// values. Parameter `j` always equals coordinate `param_coords[j]` of the
/// member, which makes membership a direct read-off.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineFamily {
    pub param_names: Vec<&'static str>,
    pub param_coords: Vec<usize>,
    pub base: [Real; 4],
    pub dirs: Vec<[Scalar; 4]>,
    /// `(param index, forbidden value)` pairs.
    pub excluded: Vec<(usize, Scalar)>,
}

impl AffineFamily {
    fn check_structure(&self) {
        for (j, &coord) in self.param_coords.iter().enumerate() {
            debug_assert!(self.base[coord].as_exact().is_some_and(|v| v.is_zero()));
            for (jj, d) in self.dirs.iter().enumerate() {
                let expect_one = jj == j;
                debug_assert_eq!(d[coord].is_one(), expect_one);
                debug_assert_eq!(d[coord].is_zero(), !expect_one);
            }
        }
    }

    pub fn evaluate(&self, params: &[Scalar]) -> Option<Vec<SolutionPoint>> {
        for (idx, v) in &self.excluded {
            if &params[*idx] == v {
                return None;
            }
        }
        if self.base.iter().all(|b| b.is_exact()) {
            let mut coords = [
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
            ];
            for (i, item) in coords.iter_mut().enumerate() {
                let mut acc = self.base[i].as_exact().unwrap().clone();
                for (d, p) in self.dirs.iter().zip(params) {
                    acc = &acc + &(&d[i] * p);
                }
                *item = acc;
            }
            Some(vec![SolutionPoint::Exact(SplitQuaternion::from_coords(
                coords,
            ))])
        } else {
            let pf: Vec<f64> = params.iter().map(scalar_to_f64).collect();
            let mut coords = [0.0; 4];
            for (i, item) in coords.iter_mut().enumerate() {
                let mut acc = self.base[i].to_f64();
                for (d, p) in self.dirs.iter().zip(pf.iter()) {
                    acc += scalar_to_f64(&d[i]) * p;
                }
                *item = acc;
            }
            Some(vec![SolutionPoint::Approx(coords)])
        }
    }

    pub fn membership(&self, cand: &SolutionPoint, tol: f64) -> Option<Vec<Real>> {
        let exact_path = cand.is_exact() && self.base.iter().all(|b| b.is_exact());
        if exact_path {
            let q = cand.as_exact().unwrap();
            let params: Vec<Scalar> = self
                .param_coords
                .iter()
                .map(|&c| q.coord(c).clone())
                .collect();
            for (idx, v) in &self.excluded {
                if &params[*idx] == v {
                    return None;
                }
            }
            let point = self.evaluate(&params)?;
            if point[0].as_exact() == Some(q) {
                return Some(params.into_iter().map(Real::Exact).collect());
            }
            None
        } else {
            let qf = cand.to_f64();
            let params: Vec<f64> = self.param_coords.iter().map(|&c| qf[c]).collect();
            for (idx, v) in &self.excluded {
                if (params[*idx] - scalar_to_f64(v)).abs() <= tol {
                    return None;
                }
            }
            for i in 0..4 {
                let mut acc = self.base[i].to_f64();
                for (d, p) in self.dirs.iter().zip(params.iter()) {
                    acc += scalar_to_f64(&d[i]) * p;
                }
                if (acc - qf[i]).abs() > tol {
                    return None;
                }
            }
            Some(params.into_iter().map(Real::Approx).collect())
        }
    }

    fn translate_x0(&mut self, delta: &Scalar) {
        if let Some(j) = self.param_coords.iter().position(|&c| c == 0) {
            // reparametrize q = p_j + delta so the parameter keeps reading
            // coordinate 0: constants absorb dirs[j] · (-delta)
            let neg = -delta.clone();
            for i in 1..4 {
                let adj = &self.dirs[j][i] * &neg;
                self.base[i] = match self.base[i].clone() {
                    Real::Exact(v) => Real::Exact(&v + &adj),
                    Real::Approx(v) => Real::Approx(v + scalar_to_f64(&adj)),
                };
            }
            for (idx, v) in self.excluded.iter_mut() {
                if *idx == j {
                    *v = &*v + delta;
                }
            }
        } else {
            self.base[0] = match self.base[0].clone() {
                Real::Exact(v) => Real::Exact(&v + delta),
                Real::Approx(v) => Real::Approx(v + scalar_to_f64(delta)),
            };
        }
    }
}

/// Components polynomial (degree ≤ 2) in the single free coordinate `x0`;
/// `comps[0]` is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFamily {
    pub comps: [UniQuad; 4],
    pub excluded: Vec<Scalar>,
}

impl PolyFamily {
    pub fn evaluate(&self, t: &Scalar) -> Option<Vec<SolutionPoint>> {
        if self.excluded.contains(t) {
            return None;
        }
        let coords = [
            self.comps[0].eval(t),
            self.comps[1].eval(t),
            self.comps[2].eval(t),
            self.comps[3].eval(t),
        ];
        Some(vec![SolutionPoint::Exact(SplitQuaternion::from_coords(
            coords,
        ))])
    }

    pub fn membership(&self, cand: &SolutionPoint, tol: f64) -> Option<Vec<Real>> {
        match cand {
            SolutionPoint::Exact(q) => {
                let t = q.x0.clone();
                if self.excluded.contains(&t) {
                    return None;
                }
                for (i, comp) in self.comps.iter().enumerate() {
                    if &comp.eval(&t) != q.coord(i) {
                        return None;
                    }
                }
                Some(vec![Real::Exact(t)])
            }
            SolutionPoint::Approx(v) => {
                let t = v[0];
                for e in &self.excluded {
                    if (t - scalar_to_f64(e)).abs() <= tol {
                        return None;
                    }
                }
                for (i, comp) in self.comps.iter().enumerate() {
                    if (comp.eval_f64(t) - v[i]).abs() > tol {
                        return None;
                    }
                }
                Some(vec![Real::Approx(t)])
            }
        }
    }

    fn translate_x0(&mut self, delta: &Scalar) {
        let neg = -delta.clone();
        for comp in self.comps.iter_mut().skip(1) {
            *comp = comp.shift_arg(&neg);
        }
        for v in self.excluded.iter_mut() {
            *v = &*v + delta;
        }
    }
}

/// One coordinate carries `± sqrt_scale · √(disc(params))` on top of an
/// affine part; the others are affine in the parameters. Defined where
/// `disc ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtFamily {
    pub param_names: Vec<&'static str>,
    pub param_coords: Vec<usize>,
    pub affine: [AffineExpr; 4],
    pub sqrt_coord: usize,
    pub sqrt_scale: Scalar,
    pub disc: QuadExpr,
}

impl SqrtFamily {
    pub fn evaluate(&self, params: &[Scalar]) -> Option<Vec<SolutionPoint>> {
        let d = self.disc.eval(params);
        if d.is_negative() {
            return None;
        }
        let base: Vec<Scalar> = self.affine.iter().map(|a| a.eval(params)).collect();
        match exact_sqrt(&d) {
            Some(s) => {
                let mut out = Vec::new();
                let offs = &self.sqrt_scale * &s;
                let signs: &[i64] = if s.is_zero() { &[1] } else { &[1, -1] };
                for sgn in signs {
                    let mut coords = [
                        base[0].clone(),
                        base[1].clone(),
                        base[2].clone(),
                        base[3].clone(),
                    ];
                    let delta = &offs * &Scalar::from_integer((*sgn).into());
                    coords[self.sqrt_coord] = &coords[self.sqrt_coord] + &delta;
                    out.push(SolutionPoint::Exact(SplitQuaternion::from_coords(coords)));
                }
                Some(out)
            }
            None => {
                let s = scalar_to_f64(&d).sqrt();
                let scale = scalar_to_f64(&self.sqrt_scale);
                let mut out = Vec::new();
                for sgn in [1.0, -1.0] {
                    let mut coords = [
                        scalar_to_f64(&base[0]),
                        scalar_to_f64(&base[1]),
                        scalar_to_f64(&base[2]),
                        scalar_to_f64(&base[3]),
                    ];
                    coords[self.sqrt_coord] += sgn * scale * s;
                    out.push(SolutionPoint::Approx(coords));
                }
                Some(out)
            }
        }
    }

    pub fn membership(&self, cand: &SolutionPoint, tol: f64) -> Option<Vec<Real>> {
        match cand {
            SolutionPoint::Exact(q) => {
                let params: Vec<Scalar> = self
                    .param_coords
                    .iter()
                    .map(|&c| q.coord(c).clone())
                    .collect();
                for (i, a) in self.affine.iter().enumerate() {
                    if i == self.sqrt_coord {
                        continue;
                    }
                    if &a.eval(&params) != q.coord(i) {
                        return None;
                    }
                }
                let diff = q.coord(self.sqrt_coord) - &self.affine[self.sqrt_coord].eval(&params);
                let lhs = &diff * &diff;
                let rhs = &(&self.sqrt_scale * &self.sqrt_scale) * &self.disc.eval(&params);
                if lhs == rhs {
                    Some(params.into_iter().map(Real::Exact).collect())
                } else {
                    None
                }
            }
            SolutionPoint::Approx(v) => {
                let params: Vec<f64> = self.param_coords.iter().map(|&c| v[c]).collect();
                for (i, a) in self.affine.iter().enumerate() {
                    if i == self.sqrt_coord {
                        continue;
                    }
                    if (a.eval_f64(&params) - v[i]).abs() > tol {
                        return None;
                    }
                }
                let d = self.disc.eval_f64(&params);
                if d < -tol {
                    return None;
                }
                let s = scalar_to_f64(&self.sqrt_scale) * d.max(0.0).sqrt();
                let a = self.affine[self.sqrt_coord].eval_f64(&params);
                if (v[self.sqrt_coord] - (a + s)).abs() <= tol
                    || (v[self.sqrt_coord] - (a - s)).abs() <= tol
                {
                    Some(params.into_iter().map(Real::Approx).collect())
                } else {
                    None
                }
            }
        }
    }

    fn translate_x0(&mut self, delta: &Scalar) {
        debug_assert!(
            !self.param_coords.contains(&0),
            "sqrt families fix the real part"
        );
        self.affine[0].constant = &self.affine[0].constant + delta;
    }

    /// When the discriminant is the square of an affine polynomial the two
    /// branches close up into affine families.
    pub fn simplify(self) -> Vec<Family> {
        if self.param_names.len() == 1 {
            let a = self.disc.quad[0][0].clone();
            let b = self.disc.lin[0].clone();
            let c = self.disc.constant.clone();
            let four = Scalar::from_integer(4.into());
            let disc_of_disc = &(&b * &b) - &(&four * &(&a * &c));
            if disc_of_disc.is_zero() && !a.is_zero() {
                if let Some(sa) = exact_sqrt(&a) {
                    // disc = (sa·p + b/(2sa))², so ±sqrt collapses to two
                    // affine branches
                    let two = Scalar::one() + Scalar::one();
                    let half_b = &b / &(&two * &sa);
                    let mut out = Vec::new();
                    for sgn in [1i64, -1] {
                        let sgn = Scalar::from_integer(sgn.into());
                        let mut base = [
                            Real::Exact(self.affine[0].constant.clone()),
                            Real::Exact(self.affine[1].constant.clone()),
                            Real::Exact(self.affine[2].constant.clone()),
                            Real::Exact(self.affine[3].constant.clone()),
                        ];
                        let mut dir = [
                            self.affine[0].lin[0].clone(),
                            self.affine[1].lin[0].clone(),
                            self.affine[2].lin[0].clone(),
                            self.affine[3].lin[0].clone(),
                        ];
                        let sc = self.sqrt_coord;
                        let extra_const = &(&self.sqrt_scale * &sgn) * &half_b;
                        let extra_lin = &(&self.sqrt_scale * &sgn) * &sa;
                        base[sc] = Real::Exact(self.affine[sc].constant.clone() + extra_const);
                        dir[sc] = &dir[sc] + &extra_lin;
                        out.push(Family::Affine(AffineFamily {
                            param_names: self.param_names.clone(),
                            param_coords: self.param_coords.clone(),
                            base,
                            dirs: vec![dir],
                            excluded: Vec::new(),
                        }));
                    }
                    return out;
                }
            }
        }
        vec![Family::SqrtBranch(self)]
    }
}

/// Free coordinates `(x2, x3)`; the real part is a nonzero real root of a
/// quartic whose coefficients depend on them, and `x1` follows in closed
/// form. `b1` may be zero (the no-linear-term variant).
#[derive(Debug, Clone, PartialEq)]
pub struct SemiExplicitFamily {
    pub a2: Scalar,
    pub a3: Scalar,
    pub b1: Scalar,
    pub c0: Scalar,
    pub c1: Scalar,
    /// Added to the real part of every member (from de-normalization).
    pub x0_offset: Scalar,
}

impl SemiExplicitFamily {
    /// The guard excludes the parameter line handled by the polynomial case.
    pub fn guard_ok(&self, x2: &Scalar, x3: &Scalar) -> bool {
        if self.b1.is_zero() {
            return true;
        }
        let q = &(&self.a2 * x2) + &(&self.a3 * x3);
        q != &self.c1 / &self.b1
    }

    /// The quartic whose nonzero real roots are the (normalized) real parts.
    pub fn quartic(&self, x2: &Scalar, x3: &Scalar) -> RealPoly {
        let q = &(&self.a2 * x2) + &(&self.a3 * x3);
        let two = Scalar::one() + Scalar::one();
        let four = &two * &two;
        let c4 = Scalar::one();
        let c3 = &two * &q;
        let mut c2 = &(&q * &q) + &(&self.b1 * &(&(&self.a3 * x2) - &(&self.a2 * x3)));
        c2 = &(&c2 + &self.c0) + &(&(&self.b1 * &self.b1) / &four);
        let c1 = {
            let t1 = &(&(&self.a2 * &self.a3) * &self.b1) * &(&(x2 * x2) - &(x3 * x3));
            let t2 = &(&self.b1 * &(&(&self.a3 * &self.a3) - &(&self.a2 * &self.a2))) * &(x2 * x3);
            let t3 = &self.c1 * &(&(&self.a2 * x3) - &(&self.a3 * x2));
            &(&t1 + &t2) + &t3
        };
        let c0 = {
            let w = &(&self.b1 * &q) - &self.c1;
            -(&(&w * &w) / &four)
        };
        RealPoly::new(vec![c0, c1, c2, c3, c4])
    }

    /// Closed-form `x1` for a given (normalized) real part `T ≠ 0`.
    pub fn x1_for(&self, t: &Scalar, x2: &Scalar, x3: &Scalar) -> Scalar {
        let two_t = &(Scalar::one() + Scalar::one()) * t;
        let half_b1_t = &self.b1 / &two_t;
        let coef2 = &(&self.a2 * &half_b1_t) - &self.a3;
        let coef3 = &(&self.a3 * &half_b1_t) + &self.a2;
        let last = &(&self.c1 + &(&self.b1 * t)) / &two_t;
        &(&(&coef2 * x2) + &(&coef3 * x3)) - &last
    }

    fn x1_for_f64(&self, t: f64, x2: f64, x3: f64) -> f64 {
        let a2 = scalar_to_f64(&self.a2);
        let a3 = scalar_to_f64(&self.a3);
        let b1 = scalar_to_f64(&self.b1);
        let c1 = scalar_to_f64(&self.c1);
        (a2 * b1 / (2.0 * t) - a3) * x2 + (a3 * b1 / (2.0 * t) + a2) * x3
            - (c1 + b1 * t) / (2.0 * t)
    }

    pub fn evaluate(&self, x2: &Scalar, x3: &Scalar) -> Option<Vec<SolutionPoint>> {
        if !self.guard_ok(x2, x3) {
            return None;
        }
        let quartic = self.quartic(x2, x3);
        let roots = realroots::real_roots(&quartic).ok()?;
        let mut out = Vec::new();
        for root in roots.reals {
            match root.value {
                Real::Exact(t) => {
                    if t.is_zero() {
                        continue;
                    }
                    let x1 = self.x1_for(&t, x2, x3);
                    let x0 = &t + &self.x0_offset;
                    out.push(SolutionPoint::Exact(SplitQuaternion::new(
                        x0,
                        x1,
                        x2.clone(),
                        x3.clone(),
                    )));
                }
                Real::Approx(t) => {
                    if t == 0.0 {
                        continue;
                    }
                    let x1 = self.x1_for_f64(t, scalar_to_f64(x2), scalar_to_f64(x3));
                    out.push(SolutionPoint::Approx([
                        t + scalar_to_f64(&self.x0_offset),
                        x1,
                        scalar_to_f64(x2),
                        scalar_to_f64(x3),
                    ]));
                }
            }
        }
        Some(out)
    }

    pub fn membership(&self, cand: &SolutionPoint, tol: f64) -> Option<Vec<Real>> {
        match cand {
            SolutionPoint::Exact(q) => {
                let t = &q.x0 - &self.x0_offset;
                if t.is_zero() || !self.guard_ok(&q.x2, &q.x3) {
                    return None;
                }
                if !self.quartic(&q.x2, &q.x3).eval(&t).is_zero() {
                    return None;
                }
                if self.x1_for(&t, &q.x2, &q.x3) != q.x1 {
                    return None;
                }
                Some(vec![Real::Exact(q.x2.clone()), Real::Exact(q.x3.clone())])
            }
            SolutionPoint::Approx(v) => {
                let t = v[0] - scalar_to_f64(&self.x0_offset);
                if t.abs() <= tol {
                    return None;
                }
                let x2 = v[2];
                let x3 = v[3];
                // float guard
                if !self.b1.is_zero() {
                    let q = scalar_to_f64(&self.a2) * x2 + scalar_to_f64(&self.a3) * x3;
                    if (q - scalar_to_f64(&self.c1) / scalar_to_f64(&self.b1)).abs() <= tol {
                        return None;
                    }
                }
                // scale-aware residual on the quartic
                let quartic = self.quartic_f64(x2, x3);
                let scale = quartic.iter().fold(1.0f64, |m, c| m.max(c.abs()));
                let p = quartic.iter().rev().fold(0.0, |acc, c| acc * t + c);
                if p.abs() > tol * scale * 100.0 {
                    return None;
                }
                if (self.x1_for_f64(t, x2, x3) - v[1]).abs() > tol {
                    return None;
                }
                Some(vec![Real::Approx(x2), Real::Approx(x3)])
            }
        }
    }

    fn quartic_f64(&self, x2: f64, x3: f64) -> [f64; 5] {
        let a2 = scalar_to_f64(&self.a2);
        let a3 = scalar_to_f64(&self.a3);
        let b1 = scalar_to_f64(&self.b1);
        let c0 = scalar_to_f64(&self.c0);
        let c1 = scalar_to_f64(&self.c1);
        let q = a2 * x2 + a3 * x3;
        [
            -(b1 * q - c1) * (b1 * q - c1) / 4.0,
            a2 * a3 * b1 * (x2 * x2 - x3 * x3)
                + b1 * (a3 * a3 - a2 * a2) * x2 * x3
                + c1 * (a2 * x3 - a3 * x2),
            q * q + b1 * (a3 * x2 - a2 * x3) + c0 + b1 * b1 / 4.0,
            2.0 * q,
            1.0,
        ]
    }
}

/// The closed set of family shapes the case formulas emit.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Affine(AffineFamily),
    PolyInParams(PolyFamily),
    SqrtBranch(SqrtFamily),
    SemiExplicit(SemiExplicitFamily),
}

impl Family {
    pub fn shape_name(&self) -> &'static str {
        match self {
            Family::Affine(_) => "affine",
            Family::PolyInParams(_) => "poly-in-params",
            Family::SqrtBranch(_) => "sqrt-branch",
            Family::SemiExplicit(_) => "semi-explicit",
        }
    }

    /// Number of free real parameters.
    pub fn dim(&self) -> usize {
        match self {
            Family::Affine(f) => f.dirs.len(),
            Family::PolyInParams(_) => 1,
            Family::SqrtBranch(f) => f.param_names.len(),
            Family::SemiExplicit(_) => 2,
        }
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        match self {
            Family::Affine(f) => f.param_names.clone(),
            Family::PolyInParams(_) => vec!["x0"],
            Family::SqrtBranch(f) => f.param_names.clone(),
            Family::SemiExplicit(_) => vec!["x2", "x3"],
        }
    }

    /// Points for one parameter assignment; `None` when out of domain.
    pub fn evaluate(&self, params: &[Scalar]) -> Option<Vec<SolutionPoint>> {
        match self {
            Family::Affine(f) => f.evaluate(params),
            Family::PolyInParams(f) => f.evaluate(&params[0]),
            Family::SqrtBranch(f) => f.evaluate(params),
            Family::SemiExplicit(f) => f.evaluate(&params[0], &params[1]),
        }
    }

    /// Membership test; returns the witnessing parameters.
    pub fn membership(&self, cand: &SolutionPoint, tol: f64) -> Option<Vec<Real>> {
        match self {
            Family::Affine(f) => f.membership(cand, tol),
            Family::PolyInParams(f) => f.membership(cand, tol),
            Family::SqrtBranch(f) => f.membership(cand, tol),
            Family::SemiExplicit(f) => f.membership(cand, tol),
        }
    }

    pub fn contains(&self, cand: &SolutionPoint, tol: f64) -> bool {
        self.membership(cand, tol).is_some()
    }

    pub fn translate_x0(&mut self, delta: &Scalar) {
        match self {
            Family::Affine(f) => f.translate_x0(delta),
            Family::PolyInParams(f) => f.translate_x0(delta),
            Family::SqrtBranch(f) => f.translate_x0(delta),
            Family::SemiExplicit(f) => f.x0_offset = &f.x0_offset + delta,
        }
    }

    /// Deterministic in-domain sample points (up to `want` of them).
    pub fn sample_points(&self, want: usize) -> Vec<SolutionPoint> {
        let mut out = Vec::new();
        for params in sample_assignments(self.dim()) {
            if let Some(points) = self.evaluate(&params) {
                for p in points {
                    out.push(p);
                    if out.len() >= want {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// Structure checks used by debug builds.
    pub fn validate(&self) {
        if let Family::Affine(f) = self {
            f.check_structure();
        }
    }
}

/// Deterministic parameter value sequence used for sampling: small halves,
/// then thirds, growing outward so constrained domains are eventually hit.
fn sample_values() -> Vec<Scalar> {
    let mut vals = vec![Scalar::zero()];
    for n in 1..=16i64 {
        for d in [2i64, 1, 3] {
            for s in [1i64, -1] {
                let v = Scalar::new((s * n).into(), d.into());
                if !vals.contains(&v) {
                    vals.push(v);
                }
            }
        }
    }
    vals
}

fn sample_assignments(dim: usize) -> Vec<Vec<Scalar>> {
    let vals = sample_values();
    match dim {
        1 => vals.into_iter().map(|v| vec![v]).collect(),
        _ => {
            // diagonal enumeration of pairs keeps early samples small
            let mut out = Vec::new();
            let n = vals.len();
            for total in 0..(2 * n - 1) {
                for i in 0..=total.min(n - 1) {
                    let j = total - i;
                    if j < n {
                        out.push(vec![vals[i].clone(), vals[j].clone()]);
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn affine_line() -> AffineFamily {
        // x = x1 i + x1 j + k
        AffineFamily {
            param_names: vec!["x1"],
            param_coords: vec![1],
            base: [
                Real::Exact(int(0)),
                Real::Exact(int(0)),
                Real::Exact(int(0)),
                Real::Exact(int(1)),
            ],
            dirs: vec![[int(0), int(1), int(1), int(0)]],
            excluded: Vec::new(),
        }
    }

    #[test]
    fn affine_eval_and_membership() {
        let fam = affine_line();
        let pts = fam.evaluate(&[rat(3, 2)]).unwrap();
        let expected = SplitQuaternion::new(int(0), rat(3, 2), rat(3, 2), int(1));
        assert_eq!(pts, vec![SolutionPoint::Exact(expected.clone())]);
        assert!(fam
            .membership(&SolutionPoint::Exact(expected), 0.0)
            .is_some());
        let off = SplitQuaternion::new(int(0), rat(3, 2), rat(1, 2), int(1));
        assert!(fam.membership(&SolutionPoint::Exact(off), 0.0).is_none());
    }

    #[test]
    fn excluded_values_are_out_of_domain() {
        let mut fam = affine_line();
        fam.param_coords = vec![1];
        fam.excluded = vec![(0, int(2))];
        assert!(fam.evaluate(&[int(2)]).is_none());
        assert!(fam.evaluate(&[int(3)]).is_some());
    }

    #[test]
    fn sqrt_family_evaluates_both_branches() {
        // x3 = ±sqrt(x1² - x2² + 1), x = x1 i + x2 j + x3 k
        let fam = SqrtFamily {
            param_names: vec!["x1", "x2"],
            param_coords: vec![1, 2],
            affine: [
                AffineExpr::constant(int(0), 2),
                AffineExpr {
                    constant: int(0),
                    lin: vec![int(1), int(0)],
                },
                AffineExpr {
                    constant: int(0),
                    lin: vec![int(0), int(1)],
                },
                AffineExpr::constant(int(0), 2),
            ],
            sqrt_coord: 3,
            sqrt_scale: int(1),
            disc: QuadExpr::new(
                int(1),
                vec![int(0), int(0)],
                vec![vec![int(1), int(0)], vec![int(0), int(-1)]],
            ),
        };
        // params (0,1): disc = 0 → single point (0,0,1,0) = j
        let pts = fam.evaluate(&[int(0), int(1)]).unwrap();
        assert_eq!(pts.len(), 1);
        // params (2,1): disc = 4 → two exact points with x3 = ±2
        let pts = fam.evaluate(&[int(2), int(1)]).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.is_exact()));
        // membership of i (1,0,0,0 imag): disc(1,0) = 2, x3² = 0 ≠ 2 → no
        let not_member = SolutionPoint::Exact(SplitQuaternion::unit_i());
        assert!(fam.membership(&not_member, 0.0).is_none());
        // but (0, 1, 0, √2) is approx-member
        let m = SolutionPoint::Approx([0.0, 1.0, 0.0, std::f64::consts::SQRT_2]);
        assert!(fam.membership(&m, 1e-9).is_some());
        // out of domain: (0, 0) → disc = ... 1 ≥ 0 fine; (0, 2) → 1-4 < 0
        assert!(fam.evaluate(&[int(0), int(2)]).is_none());
    }

    #[test]
    fn sqrt_family_simplifies_perfect_square() {
        // disc = (x3 + 1/2)², x1 = -(-1)/2 ± sqrt(disc)/1
        let fam = SqrtFamily {
            param_names: vec!["x3"],
            param_coords: vec![3],
            affine: [
                AffineExpr::constant(int(0), 1),
                AffineExpr::constant(rat(1, 2), 1),
                AffineExpr::constant(int(-1), 1),
                AffineExpr {
                    constant: int(0),
                    lin: vec![int(1)],
                },
            ],
            sqrt_coord: 1,
            sqrt_scale: int(1),
            disc: QuadExpr::new(rat(1, 4), vec![int(1)], vec![vec![int(1)]]),
        };
        let fams = fam.simplify();
        assert_eq!(fams.len(), 2);
        for f in &fams {
            assert_eq!(f.shape_name(), "affine");
        }
        // branches: x1 = 1/2 + (x3 + 1/2) = x3 + 1 and x1 = 1/2 - (x3 + 1/2) = -x3
        let at = |k: usize, v: i64| fams[k].evaluate(&[int(v)]).unwrap().pop().unwrap();
        let p0 = at(0, 2);
        let p1 = at(1, 2);
        let xs: Vec<Scalar> = vec![
            p0.as_exact().unwrap().x1.clone(),
            p1.as_exact().unwrap().x1.clone(),
        ];
        assert!(xs.contains(&int(3)) && xs.contains(&int(-2)));
    }

    #[test]
    fn poly_family_membership_respects_exclusion() {
        // x = x0 + (-x0² + 2x0 + 1/4) i - j + (x1 - 1/2) k pattern
        let x1 = UniQuad::new(rat(1, 4), int(2), int(-1));
        let fam = PolyFamily {
            comps: [
                UniQuad::identity(),
                x1.clone(),
                UniQuad::new(int(-1), int(0), int(0)),
                UniQuad::new(rat(-1, 4), int(2), int(-1)),
            ],
            excluded: vec![int(0)],
        };
        assert!(fam.evaluate(&int(0)).is_none());
        let pts = fam.evaluate(&int(1)).unwrap();
        let q = pts[0].as_exact().unwrap().clone();
        assert_eq!(q.x1, rat(5, 4));
        assert!(fam.membership(&SolutionPoint::Exact(q), 0.0).is_some());
    }

    #[test]
    fn translate_moves_the_set() {
        let mut fam = Family::Affine(affine_line());
        fam.translate_x0(&rat(-1, 2));
        let pts = fam.evaluate(&[int(1)]).unwrap();
        assert_eq!(pts[0].as_exact().unwrap().x0, rat(-1, 2));
    }
}
