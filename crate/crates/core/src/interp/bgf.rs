//! Check of the summation formula on `h*(x) = c_0 J_{n/2}(πr|x|)^2 / (πr|x|)^n`.
//!
//! `h*` has exponential type `2πr`, vanishes at every radius `λ_m/(πr)` and
//! has `h*(0) = 1`, so the formula collapses to `vol(B_{r/2}) ∫ h* = 1`.
//! After the substitution `y = πr|x|` the integral is a constant times
//! `∫_0^∞ J_{n/2}(y)^2 / y dy`.

use std::f64::consts::{LN_2, PI};

use crate::bounds::params::BoundParams;
use crate::error::{Error, Result};
use crate::quad::GaussLegendre;
use crate::specfun::ball::{log_ball_volume, log_unit_sphere_area};
use crate::specfun::bessel::bessel_j;
use crate::specfun::gamma::log_gamma;
use crate::specfun::zeros::bessel_zeros;
use crate::sum::CompensatedSum;

pub const MAX_DIM: u32 = 32;

/// Zero counts `BASE · 2^j` at which partial integrals are extrapolated.
const BASE: usize = 8;
const LEVELS: usize = 6;
const POINTS_PER_GAP: usize = 32;

/// `∫_0^∞ J_ν(y)^2 / y dy` (equal to `1/(2ν)`), integrated between zeros of
/// `J_ν` and extrapolated in `1/λ_m`. Returns the value and the size of the
/// last Neville correction.
pub fn bessel_square_integral(order: f64) -> Result<(f64, f64)> {
    let count = BASE << (LEVELS - 1);
    let zeros = bessel_zeros(order, count)?.zeros;
    let rule = GaussLegendre::new(POINTS_PER_GAP);
    let mut partial = CompensatedSum::new();
    let mut xs = Vec::with_capacity(LEVELS);
    let mut ys = Vec::with_capacity(LEVELS);
    let mut lo = 0.0;
    let mut err = None;
    for (m, &hi) in zeros.iter().enumerate() {
        let piece = rule.integrate(lo, hi, |y| {
            let j = bessel_j(order, y).unwrap_or_else(|e| {
                err.get_or_insert(e);
                0.0
            });
            j * j / y
        });
        partial.add(piece);
        lo = hi;
        if (m + 1) % BASE == 0 && ((m + 1) / BASE).is_power_of_two() {
            xs.push(1.0 / hi);
            ys.push(partial.value());
        }
    }
    if let Some(e) = err {
        return Err(e);
    }
    // Neville's scheme at x = 0.
    let mut p = ys.clone();
    let mut last_step = f64::INFINITY;
    for level in 1..p.len() {
        for i in (level..p.len()).rev() {
            let prev = p[i];
            p[i] = (xs[i - level] * p[i] - xs[i] * p[i - 1]) / (xs[i - level] - xs[i]);
            if i == p.len() - 1 {
                last_step = (p[i] - prev).abs();
            }
        }
    }
    Ok((p[p.len() - 1], last_step))
}

/// `|vol(B_{r/2}) ∫_{R^n} h* - 1|` at density `rho`.
pub fn bgf_residual(n: u32, rho: f64) -> Result<f64> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::domain(format!(
            "dimension must lie in 1..={MAX_DIM}, got {n}"
        )));
    }
    let r = BoundParams::new(n, 1.0, rho)?.r;
    let nf = n as f64;
    let (integral, step) = bessel_square_integral(0.5 * nf)?;
    if !(step <= 1e-3 * integral) {
        return Err(Error::convergence(format!(
            "tail extrapolation for n={n} did not settle (last correction {step:e})"
        )));
    }
    // c_0 = (2^{n/2} Γ(n/2+1))^2
    let log_c0 = 2.0 * (0.5 * nf * LN_2 + log_gamma(0.5 * nf + 1.0));
    let log_total = log_ball_volume(n, 0.5 * r)? + log_unit_sphere_area(n)? + log_c0
        - nf * (PI * r).ln()
        + integral.ln();
    Ok(log_total.exp_m1().abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimension() {
        // J_{1/2}(y)^2 / y = (2/π) sin^2 y / y^2, whose integral is 1
        let (v, _) = bessel_square_integral(0.5).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "{v}");
        assert!(bgf_residual(1, 1.0).unwrap() <= 1e-8);
    }

    #[test]
    fn residual_targets() {
        assert!(bgf_residual(2, 1.0).unwrap() <= 1e-7);
        assert!(bgf_residual(8, 1.0).unwrap() <= 1e-6);
        for rho in [0.5, 3.0] {
            assert!(bgf_residual(4, rho).unwrap() <= 1e-6);
        }
    }

    #[test]
    fn rejects_large_dimension() {
        assert!(bgf_residual(33, 1.0).is_err());
    }
}
