//! Asymptotic approximants for the zeros of the Airy function `Ai`.
//!
//! `a_m ≈ -T(3π(4m-1)/8)` with `T(t) = t^{2/3} (1 + 5/48 t^{-2} - 5/36 t^{-4})`.
//! Only these three terms are used. The truncation error is `O(t^{-6})`
//! relative, which is about `2e-4` relative at `m = 1` and below `1e-5`
//! from `m = 2` on.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Number of terms of the `T` expansion kept.
pub const SERIES_ORDER: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AiryZeroApprox {
    pub index: usize,
    pub value: f64,
    pub series_order: u32,
}

/// `T(t)` truncated after the `t^{-4}` term.
pub fn airy_t(t: f64) -> f64 {
    let t2 = 1.0 / (t * t);
    t.powf(2.0 / 3.0) * (1.0 + t2 * (5.0 / 48.0 - t2 * 5.0 / 36.0))
}

pub fn airy_zero(m: usize) -> Result<AiryZeroApprox> {
    if m == 0 {
        return Err(Error::domain("Airy zero index starts at 1"));
    }
    let t = 3.0 * PI * (4.0 * m as f64 - 1.0) / 8.0;
    Ok(AiryZeroApprox {
        index: m,
        value: -airy_t(t),
        series_order: SERIES_ORDER,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ai by its Maclaurin series; fine for |x| <= 6 in f64.
    fn airy_ai(x: f64) -> f64 {
        let c1 = 0.355028053887817239;
        let c2 = 0.258819403792806798;
        let x3 = x * x * x;
        let (mut f, mut g) = (1.0, x);
        let (mut tf, mut tg) = (1.0, x);
        for k in 1..200 {
            let k = k as f64;
            tf *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
            tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
            f += tf;
            g += tg;
            if tf.abs() + tg.abs() < 1e-18 {
                break;
            }
        }
        c1 * f - c2 * g
    }

    fn bisect(mut a: f64, mut b: f64) -> f64 {
        let fa = airy_ai(a);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (airy_ai(mid) > 0.0) == (fa > 0.0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn first_zeros_against_series_oracle() {
        let a1 = bisect(-2.5, -2.2);
        let a2 = bisect(-4.2, -4.0);
        assert!((a1 + 2.33811).abs() < 1e-5);
        assert!((a2 + 4.08795).abs() < 1e-5);
        let z1 = airy_zero(1).unwrap();
        let z2 = airy_zero(2).unwrap();
        assert!((z1.value - a1).abs() < 1e-3, "{} vs {a1}", z1.value);
        assert!((z2.value - a2).abs() < 3e-5, "{} vs {a2}", z2.value);
        assert_eq!(z1.series_order, 3);
    }

    #[test]
    fn decreasing_and_leading_term() {
        let mut prev = 0.0;
        for m in 1..200 {
            let v = airy_zero(m).unwrap().value;
            assert!(v < prev);
            prev = v;
        }
        let m = 10_000;
        let lead = -(3.0 * PI * (4.0 * m as f64 - 1.0) / 8.0).powf(2.0 / 3.0);
        let v = airy_zero(m).unwrap().value;
        assert!((v / lead - 1.0).abs() < 1e-8);
        assert!(airy_zero(0).is_err());
    }
}
