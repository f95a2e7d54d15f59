//! Floating-point refinement of isolated roots and extraction of
//! complex-conjugate quadratic factors.

/// Horner evaluation of `c0 + c1 x + ...`.
pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn horner_deriv(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * x + c * k as f64;
    }
    acc
}

/// Newton iteration from `x0`, kept inside `[lo, hi]` by bisection fallback.
pub(crate) fn refine(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = horner(coeffs, lo);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..60 {
        let f = horner(coeffs, x);
        if f == 0.0 {
            return x;
        }
        // maintain the bracket
        if (f > 0.0) == (f_lo > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        let d = horner_deriv(coeffs, x);
        let mut next = if d != 0.0 { x - f / d } else { 0.5 * (lo + hi) };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= f64::EPSILON * x.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

/// Synthetic division of `coeffs` by `x - root` (drops the remainder).
pub(crate) fn deflate(coeffs: &[f64], root: f64) -> Vec<f64> {
    let n = coeffs.len();
    if n <= 1 {
        return Vec::new();
    }
    let mut out = vec![0.0; n - 1];
    let mut carry = coeffs[n - 1];
    for k in (0..n - 1).rev() {
        out[k] = carry;
        carry = coeffs[k] + carry * root;
    }
    out
}

/// Factor a real quartic with no real roots into two real quadratics
/// `x² - T x + N`, returning the two `(T, N)` pairs.
///
/// Uses the resolvent cubic of the depressed quartic.
pub(crate) fn quartic_conjugate_pairs(coeffs: &[f64]) -> Vec<(f64, f64)> {
    debug_assert_eq!(coeffs.len(), 5);
    let a = coeffs[3] / coeffs[4];
    let b = coeffs[2] / coeffs[4];
    let c = coeffs[1] / coeffs[4];
    let d = coeffs[0] / coeffs[4];
    // depressed: y⁴ + p y² + q y + r with x = y - a/4
    let p = b - 3.0 * a * a / 8.0;
    let q = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    let scale = 1.0f64.max(p.abs()).max(q.abs()).max(r.abs());

    // y⁴ + p y² + q y + r = (y² + u y + v)(y² - u y + w) with z = u² a root of
    // z³ + 2p z² + (p² - 4r) z - q² = 0, v + w = p + z, w - v = q/u.
    let (u, v, w) = if q.abs() <= 1e-12 * scale {
        let disc = p * p - 4.0 * r;
        if disc >= 0.0 {
            // y² takes two (negative) real values z1, z2: (y² - z1)(y² - z2)
            let s = disc.sqrt();
            let z1 = (-p - s) / 2.0;
            let z2 = (-p + s) / 2.0;
            (0.0, -z1, -z2)
        } else {
            // complex y²: v = w = sqrt(r), u² = 2v - p
            let v = r.max(0.0).sqrt();
            let u2 = (2.0 * v - p).max(0.0);
            (u2.sqrt(), v, v)
        }
    } else {
        let res = [-q * q, p * p - 4.0 * r, 2.0 * p, 1.0];
        // the resolvent has a positive real root when the quartic splits
        // into two complex pairs; take the largest real root
        let mut z = largest_real_root_cubic(&res).max(0.0);
        if z <= 0.0 {
            z = 1e-30;
        }
        let u = z.sqrt();
        let v = (p + z - q / u) / 2.0;
        let w = (p + z + q / u) / 2.0;
        (u, v, w)
    };
    // shift back: x = y - a/4; quadratic y² + s y + t becomes
    // x² + (s + a/2) x + (t + s a/4 + a²/16)
    let shift = a / 4.0;
    let to_pair = |s: f64, t: f64| {
        let p1 = s + 2.0 * shift;
        let q1 = t + s * shift + shift * shift;
        (-p1, q1)
    };
    vec![to_pair(u, v), to_pair(-u, w)]
}

/// Largest real root of a cubic (coefficients low-to-high), by closed form.
fn largest_real_root_cubic(coeffs: &[f64]) -> f64 {
    let a = coeffs[2] / coeffs[3];
    let b = coeffs[1] / coeffs[3];
    let c = coeffs[0] / coeffs[3];
    // depressed: t³ + pt + q, x = t - a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    let root = if disc >= 0.0 {
        let s = disc.sqrt();
        let cbrt = |v: f64| v.signum() * v.abs().powf(1.0 / 3.0);
        cbrt(-q / 2.0 + s) + cbrt(-q / 2.0 - s)
    } else {
        // three real roots; take the largest via the trigonometric form
        let m = 2.0 * (-p / 3.0).sqrt();
        let theta = (3.0 * q / (p * m)).acos() / 3.0;
        m * theta.cos()
    };
    let x = root + shift;
    // one polish step
    let f = horner(coeffs, x);
    let d = horner_deriv(coeffs, x);
    if d != 0.0 {
        x - f / d
    } else {
        x
    }
}
