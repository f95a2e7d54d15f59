//! Independent oracles: residual evaluation, exhaustive grid search, and
//! two-sided checks of a claimed solution set against the grid.

use crate::algebra::scalar::Scalar;
use crate::algebra::{SplitQuaternion, SplitQuaternionF64};
use crate::solver::{QuadEquation, SolutionPoint, SolutionSet};
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("grid has {0} points, over the 10^7 budget")]
    GridTooLarge(u128),
    #[error("grid step must be positive")]
    BadStep,
}

/// Residual of `a x² + b x + c` at a candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Largest absolute residual component, as a double.
    pub max_abs: f64,
    /// True only when the residual is the rational zero in all components.
    pub exact_zero: bool,
}

/// Evaluate the residual; exact when the candidate is exact.
pub fn residual(eq: &QuadEquation, x: &SolutionPoint) -> ResidualReport {
    match x {
        SolutionPoint::Exact(x) => {
            let r = &(&(&eq.a * &(x * x)) + &(&eq.b * x)) + &eq.c;
            ResidualReport {
                max_abs: r.max_abs_f64(),
                exact_zero: r.is_zero(),
            }
        }
        SolutionPoint::Approx(v) => {
            let x = SplitQuaternionF64(*v);
            let a = SplitQuaternionF64(eq.a.to_f64());
            let b = SplitQuaternionF64(eq.b.to_f64());
            let c = SplitQuaternionF64(eq.c.to_f64());
            let r = a.mul(&x.mul(&x)).add(&b.mul(&x)).add(&c);
            ResidualReport {
                max_abs: r.max_abs(),
                exact_zero: false,
            }
        }
    }
}

/// A rectangular rational grid over the four coordinates.
#[derive(Debug, Clone)]
pub struct GridSpec {
    /// `(lo, hi, step)` per coordinate; empty when `lo > hi`.
    pub ranges: [(Scalar, Scalar, Scalar); 4],
}

impl GridSpec {
    pub fn new(ranges: [(Scalar, Scalar, Scalar); 4]) -> Result<Self, VerifyError> {
        for (_, _, step) in &ranges {
            if !step.is_positive() {
                return Err(VerifyError::BadStep);
            }
        }
        let g = Self { ranges };
        let n = g.len() as u128;
        if n > 10_000_000 {
            return Err(VerifyError::GridTooLarge(n));
        }
        Ok(g)
    }

    /// The desk-scale default: `{-2, -3/2, ..., 2}⁴` (6561 points).
    pub fn standard() -> Self {
        let mk = || {
            (
                Scalar::from_integer((-2).into()),
                Scalar::from_integer(2.into()),
                Scalar::new(1.into(), 2.into()),
            )
        };
        Self {
            ranges: [mk(), mk(), mk(), mk()],
        }
    }

    fn axis(&self, idx: usize) -> Vec<Scalar> {
        let (lo, hi, step) = &self.ranges[idx];
        let mut out = Vec::new();
        let mut v = lo.clone();
        while &v <= hi {
            out.push(v.clone());
            v = &v + step;
        }
        out
    }

    pub fn len(&self) -> usize {
        (0..4).map(|i| self.axis(i).len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> impl Iterator<Item = SplitQuaternion> {
        let axes: Vec<Vec<Scalar>> = (0..4).map(|i| self.axis(i)).collect();
        let [a0, a1, a2, a3] = [
            axes[0].clone(),
            axes[1].clone(),
            axes[2].clone(),
            axes[3].clone(),
        ];
        a0.into_iter().flat_map(move |x0| {
            let (a1, a2, a3) = (a1.clone(), a2.clone(), a3.clone());
            let x0 = x0.clone();
            a1.into_iter().flat_map(move |x1| {
                let (a2, a3) = (a2.clone(), a3.clone());
                let (x0, x1) = (x0.clone(), x1.clone());
                a2.into_iter().flat_map(move |x2| {
                    let a3 = a3.clone();
                    let (x0, x1, x2) = (x0.clone(), x1.clone(), x2.clone());
                    a3.into_iter()
                        .map(move |x3| SplitQuaternion::new(x0.clone(), x1.clone(), x2.clone(), x3))
                })
            })
        })
    }
}

/// Exactly the grid points with exact-zero residual.
pub fn brute_force_roots(
    eq: &QuadEquation,
    grid: &GridSpec,
) -> Result<Vec<SplitQuaternion>, VerifyError> {
    let n = grid.len() as u128;
    if n > 10_000_000 {
        return Err(VerifyError::GridTooLarge(n));
    }
    Ok(grid
        .points()
        .filter(|x| {
            let r = &(&(&eq.a * &(x * x)) + &(&eq.b * x)) + &eq.c;
            r.is_zero()
        })
        .collect())
}

/// Two-sided check of a claimed solution set.
#[derive(Debug, Clone)]
pub struct CheckReport {
    /// Every listed point and family sample has a vanishing residual.
    pub sound: bool,
    /// Every grid root is a member of the set.
    pub complete: bool,
    pub grid_hits: usize,
    pub samples_checked: usize,
    pub unsound: Vec<String>,
    pub missing: Vec<SplitQuaternion>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.sound && self.complete
    }
}

/// Soundness: residuals of all points plus `samples_per_family` samples per
/// family. Completeness: every brute-force grid root belongs to the set.
pub fn check_solution_set(
    eq: &QuadEquation,
    set: &SolutionSet,
    grid: &GridSpec,
    samples_per_family: usize,
) -> Result<CheckReport, VerifyError> {
    let mut report = CheckReport {
        sound: true,
        complete: true,
        grid_hits: 0,
        samples_checked: 0,
        unsound: Vec::new(),
        missing: Vec::new(),
    };
    for p in set.sample_members(samples_per_family) {
        report.samples_checked += 1;
        let r = residual(eq, &p);
        let ok = r.exact_zero || (!p.is_exact() && r.max_abs < 1e-9);
        if !ok {
            report.sound = false;
            report
                .unsound
                .push(format!("residual {:.3e} at {:?}", r.max_abs, p));
        }
    }
    for root in brute_force_roots(eq, grid)? {
        report.grid_hits += 1;
        if !set.contains(&SolutionPoint::Exact(root.clone()), 1e-9) {
            report.complete = false;
            report.missing.push(root);
        }
    }
    Ok(report)
}

/// Set equivalence up to reparametrization: equal point multisets, equal
/// family dimension profiles, and mutual containment of family samples.
pub fn sets_equivalent(
    s1: &SolutionSet,
    s2: &SolutionSet,
    samples_per_family: usize,
    tol: f64,
) -> bool {
    if s1.family_dims() != s2.family_dims() {
        return false;
    }
    let contained = |from: &SolutionSet, into: &SolutionSet| {
        from.sample_members(samples_per_family)
            .iter()
            .all(|p| into.contains(p, tol))
    };
    contained(s1, s2) && contained(s2, s1)
}

/// Convenience: the largest residual over points and family samples.
pub fn max_residual(eq: &QuadEquation, set: &SolutionSet, samples_per_family: usize) -> f64 {
    set.sample_members(samples_per_family)
        .iter()
        .map(|p| residual(eq, p).max_abs)
        .fold(0.0, f64::max)
}
