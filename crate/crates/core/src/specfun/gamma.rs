//! Log-gamma and the regularized upper incomplete gamma function.

use std::f64::consts::PI;

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};

// B_{2k} / (2k (2k-1)) for k = 1..12.
const STIRLING: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
];

// Numerators / denominators of the same coefficients, for the double-double path.
const STIRLING_FRAC: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (77683.0, 5796.0),
    (-236364091.0, 1506960.0),
];

/// `ln Γ(x)` for `x > 0`.
///
/// Arguments below 10 are shifted up with the recurrence, then the Stirling
/// series is summed with eight correction terms.
pub fn log_gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    let mut shift = 0.0;
    let mut y = x;
    if y < 10.0 {
        let mut prod = 1.0;
        while y < 10.0 {
            prod *= y;
            y += 1.0;
        }
        shift = prod.ln();
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for c in STIRLING[..8].iter().rev() {
        corr = corr * inv2 + c;
    }
    corr *= inv;
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + corr - shift
}

/// Checked variant of [`log_gamma`].
pub fn try_log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma needs x > 0, got {x}")));
    }
    Ok(log_gamma(x))
}

/// `ln Γ(x)` in double-double.
///
/// Only used where `ln Γ` of a large argument feeds a quantity that is
/// later exponentiated against other large logs.
pub fn log_gamma_dd(x: f64) -> DoubleDouble {
    let mut y = DoubleDouble::from(x);
    let mut prod = DoubleDouble::from(1.0);
    while y.hi < 30.0 {
        prod *= y;
        y += DoubleDouble::from(1.0);
    }
    let inv = DoubleDouble::from(1.0) / y;
    let inv2 = inv * inv;
    let mut corr = DoubleDouble::from(0.0);
    for &(num, den) in STIRLING_FRAC.iter().rev() {
        corr = corr * inv2 + DoubleDouble::from(num) / DoubleDouble::from(den);
    }
    corr = corr * inv;
    let half_ln_2pi = (DoubleDouble::PI * DoubleDouble::from(2.0)).ln() * DoubleDouble::from(0.5);
    (y - DoubleDouble::from(0.5)) * y.ln() - y + half_ln_2pi + corr - prod.ln()
}

/// `Q(s, x) = Γ(s, x) / Γ(s)`.
pub fn reg_gamma_upper(s: f64, x: f64) -> Result<f64> {
    Ok(log_reg_gamma_upper(s, x)?.exp())
}

/// `ln Q(s, x)`, usable when `Q` underflows.
pub fn log_reg_gamma_upper(s: f64, x: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!(
            "incomplete gamma needs s > 0, got {s}"
        )));
    }
    if !(x >= 0.0) || x.is_nan() {
        return Err(Error::domain(format!(
            "incomplete gamma needs x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::NEG_INFINITY);
    }
    let log_pref = s * x.ln() - x - log_gamma(s);
    if x < s + 1.0 {
        // P by the series, Q = 1 - P.
        let p = (log_pref + lower_series(s, x)?.ln()).exp();
        Ok((-p).ln_1p())
    } else {
        Ok(log_pref + upper_cf(s, x)?.ln())
    }
}

/// Σ x^k / (s (s+1) ... (s+k)), so that P(s,x) = x^s e^{-x}/Γ(s) · sum.
fn lower_series(s: f64, x: f64) -> Result<f64> {
    let mut ap = s;
    let mut del = 1.0 / s;
    let mut sum = del;
    for _ in 0..100_000 {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if del.abs() < sum.abs() * 1e-17 {
            return Ok(sum);
        }
    }
    Err(Error::convergence(format!(
        "incomplete gamma series at s={s}, x={x}"
    )))
}

/// Continued fraction for Γ(s,x) e^x x^{-s}, modified Lentz.
fn upper_cf(s: f64, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..100_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::convergence(format!(
        "incomplete gamma continued fraction at s={s}, x={x}"
    )))
}
