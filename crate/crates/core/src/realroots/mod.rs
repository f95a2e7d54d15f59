//! Real (and complex-conjugate-pair) root extraction for real polynomials
//! of degree at most four.
//!
//! Strategy: exact square-free decomposition first, then rational-root
//! screening with exact deflation, and only then floating point (Sturm
//! isolation plus Newton polish) on whatever genuinely irrational part
//! remains. Rational roots therefore always come out exact.

mod numeric;
pub mod poly;
mod sturm;

pub use poly::RealPoly;

use crate::algebra::scalar::{scalar_to_f64, Real, Scalar};
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealRootsError {
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("degree too low for quadratic divisors")]
    DegreeTooLow,
    #[error("degree {0} exceeds the supported maximum")]
    DegreeTooHigh(usize),
}

/// One real root with multiplicity; `residual` is `|p(root)|` in doubles
/// (zero for exact roots).
#[derive(Debug, Clone)]
pub struct RealRoot {
    pub value: Real,
    pub multiplicity: usize,
    pub residual: f64,
}

/// A complex-conjugate pair, stored through its real quadratic
/// `x² - T x + N` (trace and norm).
#[derive(Debug, Clone)]
pub struct ConjugatePair {
    pub trace: Real,
    pub norm: Real,
    pub multiplicity: usize,
}

/// All roots of a real polynomial: real roots ascending plus
/// conjugate pairs. Multiplicities sum to the degree.
#[derive(Debug, Clone, Default)]
pub struct RootList {
    pub reals: Vec<RealRoot>,
    pub pairs: Vec<ConjugatePair>,
}

impl RootList {
    pub fn total_multiplicity(&self) -> usize {
        self.reals.iter().map(|r| r.multiplicity).sum::<usize>()
            + 2 * self.pairs.iter().map(|p| p.multiplicity).sum::<usize>()
    }
}

fn real_mul(a: &Real, b: &Real) -> Real {
    match (a, b) {
        (Real::Exact(x), Real::Exact(y)) => Real::Exact(x * y),
        _ => Real::Approx(a.to_f64() * b.to_f64()),
    }
}

fn real_add(a: &Real, b: &Real) -> Real {
    match (a, b) {
        (Real::Exact(x), Real::Exact(y)) => Real::Exact(x + y),
        _ => Real::Approx(a.to_f64() + b.to_f64()),
    }
}

/// All real roots (with multiplicity) and conjugate pairs of `p`.
pub fn real_roots(p: &RealPoly) -> Result<RootList, RealRootsError> {
    let Some(deg) = p.degree() else {
        return Err(RealRootsError::IdenticallyZero);
    };
    if deg > 4 {
        return Err(RealRootsError::DegreeTooHigh(deg));
    }
    let mut list = RootList::default();
    if deg == 0 {
        return Ok(list);
    }

    for (factor, mult) in p.square_free_decomposition() {
        collect_square_free_roots(&factor, mult, p, &mut list);
    }

    cluster(&mut list);
    list.reals.sort_by(|a, b| {
        a.value
            .to_f64()
            .partial_cmp(&b.value.to_f64())
            .expect("roots are finite")
    });
    debug_assert_eq!(list.total_multiplicity(), deg);
    Ok(list)
}

/// Roots of one square-free factor, appended to `list` with multiplicity
/// `mult`. `original` is only used to report polish residuals.
fn collect_square_free_roots(
    factor: &RealPoly,
    mult: usize,
    original: &RealPoly,
    list: &mut RootList,
) {
    let mut rest = factor.monic();
    if let Some(rationals) = poly::rational_roots(&rest) {
        for r in rationals {
            rest = rest.deflate_root(&r);
            list.reals.push(RealRoot {
                value: Real::Exact(r),
                multiplicity: mult,
                residual: 0.0,
            });
        }
    }
    let Some(deg) = rest.degree() else { return };
    match deg {
        0 => {}
        1 => {
            // only reachable when screening was skipped for oversized inputs
            let r = -rest.coeff(0) / rest.coeff(1);
            list.reals.push(RealRoot {
                value: Real::Exact(r),
                multiplicity: mult,
                residual: 0.0,
            });
        }
        2 => {
            let b = rest.coeff(1);
            let c = rest.coeff(0);
            let two = Scalar::from_integer(2.into());
            let disc = &(&b * &b) - &(&(&two + &two) * &c);
            if disc.is_negative() {
                list.pairs.push(ConjugatePair {
                    trace: Real::Exact(-b),
                    norm: Real::Exact(c),
                    multiplicity: mult,
                });
            } else {
                // two irrational real roots (a rational double root would
                // have been screened away)
                let bb = scalar_to_f64(&b);
                let dd = scalar_to_f64(&disc).sqrt();
                let coeffs = rest.coeffs_f64();
                for root in [(-bb - dd) / 2.0, (-bb + dd) / 2.0] {
                    let lo = root - 1e-6 * (1.0 + root.abs());
                    let hi = root + 1e-6 * (1.0 + root.abs());
                    let polished = numeric::refine(&coeffs, lo, hi);
                    push_float_root(list, polished, mult, original);
                }
            }
        }
        _ => {
            let (intervals, exact_hits) = sturm::isolate(&rest);
            for r in exact_hits {
                rest = rest.deflate_root(&r);
                list.reals.push(RealRoot {
                    value: Real::Exact(r),
                    multiplicity: mult,
                    residual: 0.0,
                });
            }
            let coeffs = rest.coeffs_f64();
            let mut float_roots = Vec::new();
            for (lo, hi) in intervals {
                let (lo, hi) = sturm::tighten(&rest, lo, hi);
                let root = if lo == hi {
                    scalar_to_f64(&lo)
                } else {
                    numeric::refine(&coeffs, scalar_to_f64(&lo), scalar_to_f64(&hi))
                };
                float_roots.push(root);
                push_float_root(list, root, mult, original);
            }
            // whatever degree is left after removing the real roots consists
            // of conjugate pairs
            let remaining = rest.degree().unwrap_or(0) - float_roots.len();
            if remaining == 2 {
                let mut reduced = coeffs.clone();
                for r in &float_roots {
                    reduced = numeric::deflate(&reduced, *r);
                }
                let t = -reduced[1] / reduced[2];
                let n = reduced[0] / reduced[2];
                list.pairs.push(ConjugatePair {
                    trace: Real::Approx(t),
                    norm: Real::Approx(n),
                    multiplicity: mult,
                });
            } else if remaining == 4 {
                for (t, n) in numeric::quartic_conjugate_pairs(&coeffs) {
                    list.pairs.push(ConjugatePair {
                        trace: Real::Approx(t),
                        norm: Real::Approx(n),
                        multiplicity: mult,
                    });
                }
            }
        }
    }
}

fn push_float_root(list: &mut RootList, root: f64, mult: usize, original: &RealPoly) {
    list.reals.push(RealRoot {
        value: Real::Approx(root),
        multiplicity: mult,
        residual: original.eval_f64(root).abs(),
    });
}

/// Merge float roots that agree to 1e-8 relative; multiplicities add.
fn cluster(list: &mut RootList) {
    let mut merged: Vec<RealRoot> = Vec::new();
    for root in list.reals.drain(..) {
        let target = merged.iter_mut().find(|m| {
            if m.value.is_exact() || root.value.is_exact() {
                return m.value == root.value;
            }
            let a = m.value.to_f64();
            let b = root.value.to_f64();
            (a - b).abs() <= 1e-8 * a.abs().max(b.abs()).max(1.0)
        });
        match target {
            Some(m) => {
                m.multiplicity += root.multiplicity;
                if root.residual < m.residual {
                    m.value = root.value;
                    m.residual = root.residual;
                }
            }
            None => merged.push(root),
        }
    }
    list.reals = merged;
}

/// Every monic quadratic `x² - T x + N` dividing `p` (respecting
/// multiplicity): all unordered pairs of real roots whose combined
/// multiplicity is available, plus each conjugate pair.
pub fn quadratic_divisors(p: &RealPoly) -> Result<Vec<(Real, Real)>, RealRootsError> {
    let Some(deg) = p.degree() else {
        return Err(RealRootsError::IdenticallyZero);
    };
    if deg <= 1 {
        return Err(RealRootsError::DegreeTooLow);
    }
    if deg > 3 {
        return Err(RealRootsError::DegreeTooHigh(deg));
    }
    let roots = real_roots(p)?;
    let mut out = Vec::new();
    for (i, ri) in roots.reals.iter().enumerate() {
        for (j, rj) in roots.reals.iter().enumerate().skip(i) {
            if i == j && ri.multiplicity < 2 {
                continue;
            }
            let t = real_add(&ri.value, &rj.value);
            let n = real_mul(&ri.value, &rj.value);
            out.push((t, n));
        }
    }
    for pair in &roots.pairs {
        out.push((pair.trace.clone(), pair.norm.clone()));
    }
    out.sort_by(|a, b| {
        (a.0.to_f64(), a.1.to_f64())
            .partial_cmp(&(b.0.to_f64(), b.1.to_f64()))
            .expect("finite")
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn poly(cs: &[(i64, i64)]) -> RealPoly {
        RealPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn triple_rational_root() {
        // -4x³ - 6x² - 3x - 1/2 = -4(x + 1/2)³
        let p = poly(&[(-1, 2), (-3, 1), (-6, 1), (-4, 1)]);
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.reals.len(), 1);
        assert_eq!(roots.reals[0].value, Real::Exact(rat(-1, 2)));
        assert_eq!(roots.reals[0].multiplicity, 3);
        assert!(roots.pairs.is_empty());
    }

    #[test]
    fn double_plus_simple_roots() {
        // -2(x-1)(x+1)² = -2x³ - 2x² + 2x + 2
        let p = poly(&[(2, 1), (2, 1), (-2, 1), (-2, 1)]);
        let roots = real_roots(&p).unwrap();
        let summary: Vec<(Real, usize)> = roots
            .reals
            .iter()
            .map(|r| (r.value.clone(), r.multiplicity))
            .collect();
        assert_eq!(
            summary,
            vec![(Real::Exact(int(-1)), 2), (Real::Exact(int(1)), 1)]
        );
    }

    #[test]
    fn quartic_two_irrational_roots() {
        // z⁴ + 2z³ + 13/4 z² - z - 1/4: real roots near 0.3914 and -0.1675
        let p = poly(&[(-1, 4), (-1, 1), (13, 4), (2, 1), (1, 1)]);
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.reals.len(), 2);
        assert_eq!(roots.pairs.len(), 1);
        let r0 = roots.reals[0].value.to_f64();
        let r1 = roots.reals[1].value.to_f64();
        assert!((r0 + 0.1675).abs() < 5e-4, "got {r0}");
        assert!((r1 - 0.3914).abs() < 5e-4, "got {r1}");
        let bound = 1e-12 * p.max_abs_coeff_f64();
        for r in &roots.reals {
            assert!(r.residual < bound, "residual {}", r.residual);
        }
    }

    #[test]
    fn irrational_double_roots_from_square() {
        // (x² - 2)² = x⁴ - 4x² + 4
        let p = poly(&[(4, 1), (0, 1), (-4, 1), (0, 1), (1, 1)]);
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.reals.len(), 2);
        for r in &roots.reals {
            assert_eq!(r.multiplicity, 2);
            assert!((r.value.to_f64().abs() - std::f64::consts::SQRT_2).abs() < 1e-10);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            real_roots(&RealPoly::zero()),
            Err(RealRootsError::IdenticallyZero)
        ));
        assert!(real_roots(&poly(&[(3, 1)])).unwrap().reals.is_empty());
        assert_eq!(
            quadratic_divisors(&poly(&[(1, 1), (2, 1)])),
            Err(RealRootsError::DegreeTooLow)
        );
        assert_eq!(
            quadratic_divisors(&RealPoly::zero()),
            Err(RealRootsError::IdenticallyZero)
        );
    }

    #[test]
    fn divisors_single_complex_pair() {
        // 2(x² - x + 1)
        let p = poly(&[(2, 1), (-2, 1), (2, 1)]);
        let divisors = quadratic_divisors(&p).unwrap();
        assert_eq!(divisors, vec![(Real::Exact(int(1)), Real::Exact(int(1)))]);
    }

    #[test]
    fn divisors_with_multiplicity() {
        // -2(x-1)(x+1)² → (T,N) = (-2, 1) and (0, -1)
        let p = poly(&[(2, 1), (2, 1), (-2, 1), (-2, 1)]);
        let divisors = quadratic_divisors(&p).unwrap();
        assert_eq!(
            divisors,
            vec![
                (Real::Exact(int(-2)), Real::Exact(int(1))),
                (Real::Exact(int(0)), Real::Exact(int(-1))),
            ]
        );
    }

    #[test]
    fn divisors_two_simple_real_roots() {
        // (x-1)(x+3) → single divisor (T,N) = (-2, -3)
        let p = poly(&[(-3, 1), (2, 1), (1, 1)]);
        let divisors = quadratic_divisors(&p).unwrap();
        assert_eq!(divisors, vec![(Real::Exact(int(-2)), Real::Exact(int(-3)))]);
    }

    #[test]
    fn quartic_with_four_irrational_roots() {
        // x⁴ - 10x² + 1 has roots ±√2 ± √3
        let p = poly(&[(1, 1), (0, 1), (-10, 1), (0, 1), (1, 1)]);
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.reals.len(), 4);
        assert!(roots.pairs.is_empty());
        let expected = [
            -(2f64.sqrt() + 3f64.sqrt()),
            -(3f64.sqrt() - 2f64.sqrt()),
            3f64.sqrt() - 2f64.sqrt(),
            2f64.sqrt() + 3f64.sqrt(),
        ];
        for (r, want) in roots.reals.iter().zip(expected) {
            assert!((r.value.to_f64() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn reconstruction_of_mixed_quartic() {
        // (x² + 1)(x - 2)(x + 5) = x⁴ + 3x³ - 9x² + 3x - 10
        let p = poly(&[(-10, 1), (3, 1), (-9, 1), (3, 1), (1, 1)]);
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.total_multiplicity(), 4);
        assert_eq!(roots.reals.len(), 2);
        assert_eq!(roots.pairs.len(), 1);
        assert!(roots.pairs[0].trace.close_to(&Real::Exact(int(0)), 1e-9));
        assert!(roots.pairs[0].norm.close_to(&Real::Exact(int(1)), 1e-9));
    }
}
