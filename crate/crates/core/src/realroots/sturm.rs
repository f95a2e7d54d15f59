//! Sturm-sequence isolation of the real roots of a square-free polynomial
//! with exact rational coefficients. Isolation is exact; the isolated roots
//! are then refined in floating point.

use super::poly::RealPoly;
use crate::algebra::scalar::{sign, Scalar};
use num_traits::{One, Signed, Zero};

pub(crate) struct SturmChain {
    polys: Vec<RealPoly>,
}

impl SturmChain {
    pub fn new(p: &RealPoly) -> Self {
        let mut polys = vec![p.clone(), p.derivative()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            if polys[n - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = polys[n - 2].div_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.scale(&-Scalar::one()));
        }
        Self { polys }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Scalar) -> usize {
        Self::variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &Scalar, hi: &Scalar) -> usize {
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }
}

/// A bound `M` with all real roots of `p` in `(-M, M)` (Cauchy bound).
pub(crate) fn root_bound(p: &RealPoly) -> Scalar {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut m = Scalar::zero();
    if let Some(deg) = p.degree() {
        for k in 0..deg {
            let v = p.coeff(k).abs() / &lead;
            if v > m {
                m = v;
            }
        }
    }
    m + Scalar::one()
}

/// Disjoint open intervals each containing exactly one real root of the
/// square-free polynomial `p`. Rational roots must already be deflated;
/// if a bisection point happens to be a root it is returned separately.
pub(crate) fn isolate(p: &RealPoly) -> (Vec<(Scalar, Scalar)>, Vec<Scalar>) {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return (Vec::new(), Vec::new());
    }
    let chain = SturmChain::new(p);
    let bound = root_bound(p);
    let mut exact = Vec::new();
    let mut isolated = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_in(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            isolated.push((lo, hi));
            continue;
        }
        let two = Scalar::one() + Scalar::one();
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            // a rational root slipped past screening: record it and isolate
            // the deflated polynomial from scratch (the fresh run re-finds
            // anything already isolated, so the old intervals are dropped)
            exact.push(mid.clone());
            let deflated = p.deflate_root(&mid);
            let (ivs, more) = isolate(&deflated);
            exact.extend(more);
            return (ivs, exact);
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    (isolated, exact)
}

/// Shrink an isolating interval by exact bisection until it is tight enough
/// for floating-point refinement. Returns `(lo, hi)` with width `< 2^-28`.
pub(crate) fn tighten(p: &RealPoly, mut lo: Scalar, mut hi: Scalar) -> (Scalar, Scalar) {
    let two = Scalar::one() + Scalar::one();
    let eps = Scalar::new(1.into(), (1u64 << 28).into());
    let sign_lo = sign(&p.eval(&lo));
    debug_assert!(sign_lo != 0);
    let mut width = &hi - &lo;
    while width > eps {
        let mid = (&lo + &hi) / &two;
        let s = sign(&p.eval(&mid));
        if s == 0 {
            // exact hit; collapse the interval
            return (mid.clone(), mid);
        }
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        width = &hi - &lo;
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn poly(cs: &[(i64, i64)]) -> RealPoly {
        RealPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn isolates_quartic_with_two_real_roots() {
        // z⁴ + 2z³ + 13/4 z² - z - 1/4: two real roots near 0.3914 and -0.1675
        let p = poly(&[(-1, 4), (-1, 1), (13, 4), (2, 1), (1, 1)]);
        let (intervals, exact) = isolate(&p);
        assert!(exact.is_empty());
        assert_eq!(intervals.len(), 2);
    }

    #[test]
    fn counts_roots_of_simple_cubic() {
        // (x-1)(x-2)(x-3)
        let p = poly(&[(-6, 1), (11, 1), (-6, 1), (1, 1)]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_in(&int(0), &int(4)), 3);
        assert_eq!(chain.count_in(&rat(3, 2), &rat(5, 2)), 1);
    }

    #[test]
    fn tighten_converges() {
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]); // x² - 2
        let (lo, hi) = tighten(&p, int(1), int(2));
        let mid = (crate::algebra::scalar::scalar_to_f64(&lo)
            + crate::algebra::scalar::scalar_to_f64(&hi))
            / 2.0;
        assert!((mid - std::f64::consts::SQRT_2).abs() < 1e-7);
    }
}
