//! Scalar abstraction shared by the generic kernels.
//!
//! Special functions are evaluated in `f64`. The pieces that benefit from
//! running at more than one precision (divided-difference tables, Horner
//! evaluation, compensated sums) are written against [`Real`], which is
//! implemented for `f32`, `f64` and [`DoubleDouble`].

use std::fmt::Debug;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_traits::Num;

pub use crate::dd::DoubleDouble;

/// Real scalar usable by the generic numerical kernels.
pub trait Real:
    Num
    + Copy
    + PartialOrd
    + Debug
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    /// Unit roundoff of the representation.
    fn epsilon() -> Self;

    fn max_of(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Real for f64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn exp(self) -> Self {
        f64::exp(self)
    }
    #[inline]
    fn ln(self) -> Self {
        f64::ln(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn epsilon() -> Self {
        f64::EPSILON / 2.0
    }
}

impl Real for f32 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
    #[inline]
    fn exp(self) -> Self {
        f32::exp(self)
    }
    #[inline]
    fn ln(self) -> Self {
        f32::ln(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f32::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f32::sqrt(self)
    }
    #[inline]
    fn epsilon() -> Self {
        f32::EPSILON / 2.0
    }
}

impl Real for DoubleDouble {
    #[inline]
    fn from_f64(v: f64) -> Self {
        DoubleDouble::from(v)
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
    #[inline]
    fn exp(self) -> Self {
        DoubleDouble::exp(self)
    }
    #[inline]
    fn ln(self) -> Self {
        DoubleDouble::ln(self)
    }
    #[inline]
    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
    #[inline]
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    #[inline]
    fn epsilon() -> Self {
        DoubleDouble::from(DoubleDouble::EPSILON)
    }
}
