//! Split quaternions over exact rationals.
//!
//! The algebra has basis `1, i, j, k` with `i² = -1`, `j² = k² = +1`,
//! `ij = k`, `jk = -i`, `ki = j` (and the anti-commuted counterparts).
//! Unlike the Hamilton quaternions it contains zero divisors: exactly the
//! nonzero elements on the null cone of the indefinite form
//! `I_x = x0² + x1² - x2² - x3²`.

use super::scalar::{format_scalar, parse_scalar, scalar_to_f64, Scalar};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("element is not invertible (its quadratic form vanishes)")]
    NotInvertible,
    #[error("cannot parse split quaternion from {0:?}")]
    Parse(String),
}

/// Classification of an element by its quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Zero,
    ZeroDivisor,
    Invertible,
}

/// `x = x0 + x1 i + x2 j + x3 k` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct SplitQuaternion {
    pub x0: Scalar,
    pub x1: Scalar,
    pub x2: Scalar,
    pub x3: Scalar,
}

impl SplitQuaternion {
    pub fn new(x0: Scalar, x1: Scalar, x2: Scalar, x3: Scalar) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn from_coords(c: [Scalar; 4]) -> Self {
        let [x0, x1, x2, x3] = c;
        Self { x0, x1, x2, x3 }
    }

    pub fn coords(&self) -> [Scalar; 4] {
        [
            self.x0.clone(),
            self.x1.clone(),
            self.x2.clone(),
            self.x3.clone(),
        ]
    }

    pub fn coord(&self, idx: usize) -> &Scalar {
        match idx {
            0 => &self.x0,
            1 => &self.x1,
            2 => &self.x2,
            3 => &self.x3,
            _ => panic!("coordinate index out of range"),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(Scalar::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Scalar::one())
    }

    pub fn from_real(r: Scalar) -> Self {
        Self::new(r, Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn unit_i() -> Self {
        Self::new(
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
            Scalar::zero(),
        )
    }

    pub fn unit_j() -> Self {
        Self::new(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
        )
    }

    pub fn unit_k() -> Self {
        Self::new(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    /// `x̄ = x0 - x1 i - x2 j - x3 k`.
    pub fn conjugate(&self) -> Self {
        Self::new(
            self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }

    /// Real part `(x + x̄)/2 = x0`.
    pub fn re(&self) -> Scalar {
        self.x0.clone()
    }

    /// Imaginary part `(x - x̄)/2 = x1 i + x2 j + x3 k`.
    pub fn im(&self) -> Self {
        Self::new(
            Scalar::zero(),
            self.x1.clone(),
            self.x2.clone(),
            self.x3.clone(),
        )
    }

    /// The quadratic form `I_x = x̄x = x0² + x1² - x2² - x3²`.
    pub fn qform(&self) -> Scalar {
        &(&self.x0 * &self.x0) + &(&self.x1 * &self.x1)
            - &(&self.x2 * &self.x2)
            - &(&self.x3 * &self.x3)
    }

    /// The indefinite inner product `⟨x,y⟩ = x0y0 + x1y1 - x2y2 - x3y3`.
    pub fn inner(&self, y: &Self) -> Scalar {
        &(&self.x0 * &y.x0) + &(&self.x1 * &y.x1) - &(&self.x2 * &y.x2) - &(&self.x3 * &y.x3)
    }

    pub fn classify(&self) -> Class {
        if self.is_zero() {
            Class::Zero
        } else if self.qform().is_zero() {
            Class::ZeroDivisor
        } else {
            Class::Invertible
        }
    }

    /// `x⁻¹ = x̄ / I_x` for invertible elements.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let q = self.qform();
        if q.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(self.conjugate().scale(&q.recip()))
    }

    /// Moore-Penrose inverse. Writing `x = t1 + t2 j` with complex `t1, t2`:
    /// zero maps to zero, invertible elements to `x̄/I_x`, and zero divisors
    /// to `(t̄1 + t2 j) / (4|t1|²)`.
    pub fn pinv(&self) -> Self {
        match self.classify() {
            Class::Zero => Self::zero(),
            Class::Invertible => self.inverse().expect("invertible"),
            Class::ZeroDivisor => {
                // |t1|² = x0² + x1², nonzero for a nonzero zero divisor
                let t1_norm = &(&self.x0 * &self.x0) + &(&self.x1 * &self.x1);
                let denom = &Scalar::from_integer(4.into()) * &t1_norm;
                Self::new(
                    self.x0.clone(),
                    -self.x1.clone(),
                    self.x2.clone(),
                    self.x3.clone(),
                )
                .scale(&denom.recip())
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(s * &self.x0, s * &self.x1, s * &self.x2, s * &self.x3)
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            scalar_to_f64(&self.x0),
            scalar_to_f64(&self.x1),
            scalar_to_f64(&self.x2),
            scalar_to_f64(&self.x3),
        ]
    }

    /// Largest absolute coordinate, as a double.
    pub fn max_abs_f64(&self) -> f64 {
        self.to_f64().iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Exact equality with another element.
    pub fn max_abs(&self) -> Scalar {
        let mut m = self.x0.abs();
        for c in [&self.x1, &self.x2, &self.x3] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }
}

fn mul_parts(x: &SplitQuaternion, y: &SplitQuaternion) -> SplitQuaternion {
    let z0 = &(&x.x0 * &y.x0) - &(&x.x1 * &y.x1) + &(&x.x2 * &y.x2) + &(&x.x3 * &y.x3);
    let z1 = &(&x.x0 * &y.x1) + &(&x.x1 * &y.x0) - &(&x.x2 * &y.x3) + &(&x.x3 * &y.x2);
    let z2 = &(&x.x0 * &y.x2) + &(&x.x2 * &y.x0) - &(&x.x1 * &y.x3) + &(&x.x3 * &y.x1);
    let z3 = &(&x.x0 * &y.x3) + &(&x.x3 * &y.x0) + &(&x.x1 * &y.x2) - &(&x.x2 * &y.x1);
    SplitQuaternion::new(z0, z1, z2, z3)
}

impl<'b> Mul<&'b SplitQuaternion> for &SplitQuaternion {
    type Output = SplitQuaternion;
    fn mul(self, rhs: &'b SplitQuaternion) -> SplitQuaternion {
        mul_parts(self, rhs)
    }
}

impl Mul for SplitQuaternion {
    type Output = SplitQuaternion;
    fn mul(self, rhs: Self) -> Self {
        mul_parts(&self, &rhs)
    }
}

impl<'b> Add<&'b SplitQuaternion> for &SplitQuaternion {
    type Output = SplitQuaternion;
    fn add(self, rhs: &'b SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion::new(
            &self.x0 + &rhs.x0,
            &self.x1 + &rhs.x1,
            &self.x2 + &rhs.x2,
            &self.x3 + &rhs.x3,
        )
    }
}

impl Add for SplitQuaternion {
    type Output = SplitQuaternion;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'b> Sub<&'b SplitQuaternion> for &SplitQuaternion {
    type Output = SplitQuaternion;
    fn sub(self, rhs: &'b SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion::new(
            &self.x0 - &rhs.x0,
            &self.x1 - &rhs.x1,
            &self.x2 - &rhs.x2,
            &self.x3 - &rhs.x3,
        )
    }
}

impl Sub for SplitQuaternion {
    type Output = SplitQuaternion;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Neg for &SplitQuaternion {
    type Output = SplitQuaternion;
    fn neg(self) -> SplitQuaternion {
        SplitQuaternion::new(
            -self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }
}

impl Neg for SplitQuaternion {
    type Output = SplitQuaternion;
    fn neg(self) -> SplitQuaternion {
        -&self
    }
}

impl fmt::Display for SplitQuaternion {
    /// Canonical text form: `x0 + x1 i + x2 j + x3 k` with rational coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} i + {} j + {} k",
            format_scalar(&self.x0),
            format_scalar(&self.x1),
            format_scalar(&self.x2),
            format_scalar(&self.x3)
        )
    }
}

impl fmt::Debug for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for SplitQuaternion {
    type Err = AlgebraError;

    /// Accepts the canonical form `x0 + x1 i + x2 j + x3 k`, the
    /// comma-separated form `x0,x1,x2,x3`, or a bare rational (a real value).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let t = s.trim();
        if t.contains(',') {
            let parts: Vec<_> = t.split(',').collect();
            if parts.len() != 4 {
                return Err(bad());
            }
            let mut c = Vec::with_capacity(4);
            for p in parts {
                c.push(parse_scalar(p).map_err(|_| bad())?);
            }
            return Ok(Self::new(
                c[0].clone(),
                c[1].clone(),
                c[2].clone(),
                c[3].clone(),
            ));
        }
        // canonical spaced form: tokens separated by + / - at top level
        let mut coords = [
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        ];
        // normalize "a - b" to "a + -b", then split on '+'
        let mut norm = String::new();
        let mut prev_was_space_or_start = true;
        for ch in t.chars() {
            if ch == '-' && !prev_was_space_or_start {
                norm.push_str("+-");
            } else if ch == '-' && prev_was_space_or_start {
                norm.push('-');
            } else {
                norm.push(ch);
            }
            prev_was_space_or_start = ch == '+' || ch == ' ' || ch == '/';
        }
        for term in norm.split('+') {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let (idx, lit) = if let Some(rest) = term.strip_suffix('i') {
                (1, rest.trim())
            } else if let Some(rest) = term.strip_suffix('j') {
                (2, rest.trim())
            } else if let Some(rest) = term.strip_suffix('k') {
                (3, rest.trim())
            } else {
                (0, term)
            };
            let value = if lit.is_empty() || lit == "-" {
                let one = Scalar::one();
                if lit == "-" {
                    -one
                } else {
                    one
                }
            } else {
                parse_scalar(lit).map_err(|_| bad())?
            };
            coords[idx] = &coords[idx] + &value;
        }
        Ok(Self::from_coords(coords))
    }
}

/// Quaternion with double-precision coordinates; the floating mirror of
/// [`SplitQuaternion`] used to validate numeric roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitQuaternionF64(pub [f64; 4]);

impl SplitQuaternionF64 {
    pub fn mul(&self, y: &Self) -> Self {
        let x = self.0;
        let y = y.0;
        Self([
            x[0] * y[0] - x[1] * y[1] + x[2] * y[2] + x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - x[2] * y[3] + x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] - x[1] * y[3] + x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
        ])
    }

    pub fn add(&self, y: &Self) -> Self {
        let mut out = [0.0; 4];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(y.0.iter())) {
            *o = a + b;
        }
        Self(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    pub fn qform(&self) -> f64 {
        let x = self.0;
        x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]
    }

    pub fn conjugate(&self) -> Self {
        Self([self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let q = self.qform();
        if q.abs() < 1e-12 {
            return None;
        }
        let c = self.conjugate();
        Some(Self([c.0[0] / q, c.0[1] / q, c.0[2] / q, c.0[3] / q]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn q(x0: i64, x1: i64, x2: i64, x3: i64) -> SplitQuaternion {
        SplitQuaternion::new(int(x0), int(x1), int(x2), int(x3))
    }

    #[test]
    fn multiplication_table() {
        let i = SplitQuaternion::unit_i();
        let j = SplitQuaternion::unit_j();
        let k = SplitQuaternion::unit_k();
        let one = SplitQuaternion::one();
        assert_eq!(&i * &i, -one.clone());
        assert_eq!(&j * &j, one.clone());
        assert_eq!(&k * &k, one.clone());
        assert_eq!(&i * &j, k.clone());
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&j * &k, -i.clone());
        assert_eq!(&k * &j, i.clone());
        assert_eq!(&k * &i, j.clone());
        assert_eq!(&i * &k, -j);
    }

    #[test]
    fn zero_divisor_annihilation() {
        let a = q(1, 0, 1, 0); // 1 + j
        let b = q(1, 0, -1, 0); // 1 - j
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn conjugate_re_im() {
        let x = q(1, 2, 3, 4);
        assert_eq!(x.conjugate(), q(1, -2, -3, -4));
        assert_eq!(q(0, 1, 1, 0).re(), int(0));
        let reassembled = &SplitQuaternion::from_real(x.re()) + &x.im();
        assert_eq!(reassembled, x);
        // anti-homomorphism on a concrete pair: conj(ij) = (-j)(-i)
        let i = SplitQuaternion::unit_i();
        let j = SplitQuaternion::unit_j();
        assert_eq!((&i * &j).conjugate(), &(-j.clone()) * &(-i.clone()));
    }

    #[test]
    fn qform_values() {
        assert_eq!(q(1, 0, 1, 0).qform(), int(0));
        assert_eq!(SplitQuaternion::unit_i().qform(), int(1));
        assert_eq!(q(0, 2, 0, 1).qform(), int(3));
    }

    #[test]
    fn inner_values() {
        let a = q(1, 0, 1, 0);
        assert_eq!(a.inner(&q(0, 1, 2, 1)), int(-2));
        assert_eq!(a.inner(&q(0, 2, 0, 1)), int(0));
        let x = q(1, 1, 1, 1);
        assert_eq!(x.inner(&x), x.qform());
        assert_eq!(x.qform(), int(0));
    }

    #[test]
    fn classification() {
        assert_eq!(q(1, 0, 1, 0).classify(), Class::ZeroDivisor);
        assert_eq!(q(-2, 2, -2, 1).classify(), Class::Invertible);
        assert_eq!(SplitQuaternion::zero().classify(), Class::Zero);
    }

    #[test]
    fn inverses() {
        assert_eq!(
            q(2, 0, 0, 0).inverse().unwrap(),
            SplitQuaternion::from_real(rat(1, 2))
        );
        assert_eq!(
            SplitQuaternion::unit_i().inverse().unwrap(),
            -SplitQuaternion::unit_i()
        );
        assert_eq!(q(1, 0, 1, 0).inverse(), Err(AlgebraError::NotInvertible));
        // (-2+2i-2j+k)^{-1} (-4-i-5j-k) = -1 + 17/3 i + 1/3 j + 6 k
        let lhs = q(-2, 2, -2, 1).inverse().unwrap();
        let prod = &lhs * &q(-4, -1, -5, -1);
        assert_eq!(
            prod,
            SplitQuaternion::new(int(-1), rat(17, 3), rat(1, 3), int(6))
        );
    }

    #[test]
    fn pseudoinverse_values() {
        assert_eq!(SplitQuaternion::zero().pinv(), SplitQuaternion::zero());
        let a = q(1, 0, 1, 0);
        assert_eq!(a.pinv(), a.scale(&rat(1, 4)));
        assert_eq!(q(2, 0, 0, 0).pinv(), SplitQuaternion::from_real(rat(1, 2)));
        // defining identities on a zero divisor
        let ap = a.pinv();
        assert_eq!(&(&a * &ap) * &a, a);
        assert_eq!(&(&ap * &a) * &ap, ap);
    }

    #[test]
    fn parse_round_trip() {
        let x = SplitQuaternion::new(rat(-1, 2), int(1), int(0), int(1));
        let printed = x.to_string();
        assert_eq!(printed, "-1/2 + 1 i + 0 j + 1 k");
        assert_eq!(printed.parse::<SplitQuaternion>().unwrap(), x);
        assert_eq!("-1/2,1,0,1".parse::<SplitQuaternion>().unwrap(), x);
        assert_eq!("1".parse::<SplitQuaternion>().unwrap(), q(1, 0, 0, 0));
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SplitQuaternion>();
        assert_send_sync::<crate::algebra::LinearSolutionSet>();
        assert_send_sync::<crate::solver::SolutionSet>();
        assert_send_sync::<crate::solver::Family>();
    }
}
