//! Double-double arithmetic: an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`,
//! giving roughly 106 bits of significand with the exponent range of `f64`.
//!
//! Error-free transformations follow Dekker and Knuth; products use a fused
//! multiply-add.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_traits::{Num, One, Zero};

#[derive(Copy, Clone, Default, Debug)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    /// 2^-104.
    pub const EPSILON: f64 = 4.930380657631324e-32;

    pub const LN2: DoubleDouble = DoubleDouble {
        hi: std::f64::consts::LN_2,
        lo: 2.319046813846299558e-17,
    };

    pub const PI: DoubleDouble = DoubleDouble {
        hi: std::f64::consts::PI,
        lo: 1.224646799147353207e-16,
    };

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        DoubleDouble { hi, lo }
    }

    /// Exact sum of two doubles.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        DoubleDouble { hi, lo }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleDouble { hi, lo }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    /// Multiply by `2^k` exactly (barring under/overflow).
    pub fn ldexp(self, k: i32) -> Self {
        let mut out = self;
        let mut k = k;
        while k != 0 {
            let step = k.clamp(-1000, 1000);
            let f = 2f64.powi(step);
            out = DoubleDouble::new(out.hi * f, out.lo * f);
            k -= step;
        }
        out
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 {
            DoubleDouble::one() / self
        } else {
            self
        };
        let mut e = n.unsigned_abs();
        let mut acc = DoubleDouble::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return DoubleDouble::new(f64::INFINITY, 0.0);
        }
        if self.hi < -745.2 {
            return DoubleDouble::zero();
        }
        if self.hi == 0.0 {
            return DoubleDouble::one();
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - DoubleDouble::LN2 * DoubleDouble::from(k);
        // |r| <= ln2/2; scale down by 2^-10 so the Taylor series converges fast.
        let r = r.ldexp(-10);
        // expm1 by Taylor, then undo the scaling with (1+s)^2 - 1 = s(2+s).
        let mut term = r;
        let mut s = r;
        for i in 2..=12 {
            term = term * r / DoubleDouble::from(i as f64);
            s += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            s = s * (s + DoubleDouble::from(2.0));
        }
        (s + DoubleDouble::one()).ldexp(k as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::new(f64::NAN, 0.0);
        }
        let mut y = DoubleDouble::from(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - DoubleDouble::one();
        }
        y
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::zero();
        }
        let x = self.hi.sqrt();
        let corr = (self - DoubleDouble::from_prod(x, x)).hi / (2.0 * x);
        DoubleDouble::from_sum(x, corr)
    }
}

impl From<f64> for DoubleDouble {
    #[inline]
    fn from(v: f64) -> Self {
        DoubleDouble { hi: v, lo: 0.0 }
    }
}

impl From<DoubleDouble> for f64 {
    #[inline]
    fn from(v: DoubleDouble) -> f64 {
        v.hi + v.lo
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} + {:e}", self.hi, self.lo)
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        DoubleDouble::new(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b * DoubleDouble::from(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * DoubleDouble::from(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::from(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        let q = (self / b).hi.trunc();
        self - b * DoubleDouble::from(q)
    }
}

impl AddAssign for DoubleDouble {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl DivAssign for DoubleDouble {
    #[inline]
    fn div_assign(&mut self, b: Self) {
        *self = *self / b;
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble::new(1.0, 0.0)
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(DoubleDouble::from)
    }
}
