//! The complete solution set of a quadratic: isolated points plus
//! parametric families, presented disjointly.

use super::family::{Family, SolutionPoint};
use crate::algebra::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolutionSet {
    pub points: Vec<SolutionPoint>,
    pub families: Vec<Family>,
}

impl SolutionSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.families.is_empty()
    }

    pub fn push_point(&mut self, p: SolutionPoint) {
        self.points.push(p);
    }

    pub fn push_family(&mut self, f: Family) {
        f.validate();
        self.families.push(f);
    }

    pub fn extend(&mut self, other: SolutionSet) {
        self.points.extend(other.points);
        self.families.extend(other.families);
    }

    /// Set membership: equal to some listed point or inside some family.
    pub fn contains(&self, cand: &SolutionPoint, tol: f64) -> bool {
        self.points.iter().any(|p| p.close_to(cand, tol))
            || self.families.iter().any(|f| f.contains(cand, tol))
    }

    /// Shift every member by `delta` along the real coordinate.
    pub fn translate_x0(&mut self, delta: &Scalar) {
        if delta.is_zero() {
            return;
        }
        for p in self.points.iter_mut() {
            *p = p.translate_x0(delta);
        }
        for f in self.families.iter_mut() {
            f.translate_x0(delta);
        }
    }

    /// Isolated points plus up to `per_family` samples from each family.
    pub fn sample_members(&self, per_family: usize) -> Vec<SolutionPoint> {
        let mut out = self.points.clone();
        for f in &self.families {
            out.extend(f.sample_points(per_family));
        }
        out
    }

    /// Family dimensions, sorted (a coarse shape signature of the set).
    pub fn family_dims(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.families.iter().map(|f| f.dim()).collect();
        dims.sort_unstable();
        dims
    }
}

use num_traits::Zero;
