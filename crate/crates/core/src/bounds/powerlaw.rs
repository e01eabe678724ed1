//! Bounds for the inverse power law `f(t) = t^{-(n+s)}`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::GaussLegendre;
use crate::specfun::ball::radius_for_log_volume;
use crate::specfun::gamma::log_gamma;
use crate::sum::LogSum;

use super::asymptotics::SHARP_THRESHOLD;
use super::params::BoundParams;
use super::result::{BoundKind, BoundResult};
use super::series::{main_lower_bound_with_table, zero_table_for, DEFAULT_TOL};

const PANEL_POINTS: usize = 20;
const MAX_PANELS: usize = 1 << 10;

fn check(n: u32, s: f64, rho: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("s must be > 0, got {s}")));
    }
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::domain(format!("rho must be > 0, got {rho}")));
    }
    Ok(())
}

/// Upper bound with `vol(B_r) = 1/n`:
/// `ρ/(1 - 1/(2n)) · n π^{n/2} / Γ(n/2+1) · r^{-s}/s`.
///
/// The large-`n` form `(2ρ/s) π^{(n+s)/2} e^{s/2} / Γ((n+s)/2)` is reported
/// in the notes (and by [`inverse_power_upper_asymptotic`]).
pub fn inverse_power_upper_bound(n: u32, s: f64, rho: f64) -> Result<BoundResult> {
    check(n, s, rho)?;
    if n <= 1 {
        return Err(Error::domain("inverse power upper bound needs n > 1"));
    }
    let nf = n as f64;
    let r = radius_for_log_volume(n, -nf.ln())?;
    let log_value = rho.ln() - (-1.0 / (2.0 * nf)).ln_1p() + nf.ln() + 0.5 * nf * PI.ln()
        - log_gamma(0.5 * nf + 1.0)
        - s * r.ln()
        - s.ln();
    let asym = inverse_power_upper_asymptotic(n, s, rho)?;
    Ok(BoundResult {
        kind: BoundKind::InvpowUpper,
        value: log_value.exp(),
        log_value,
        terms_used: 0,
        tail_bound: 0.0,
        params: None,
        n,
        rho,
        notes: vec![
            format!("s = {s}"),
            format!("asymptotic form: log_value {asym:.17e}"),
        ],
    })
}

/// `ln` of `(2ρ/s) π^{(n+s)/2} e^{s/2} / Γ((n+s)/2)`.
pub fn inverse_power_upper_asymptotic(n: u32, s: f64, rho: f64) -> Result<f64> {
    check(n, s, rho)?;
    let h = 0.5 * (n as f64 + s);
    Ok((2.0 * rho / s).ln() + h * PI.ln() + 0.5 * s - log_gamma(h))
}

/// `∫_0^{4π/e} E_low(α) α^{(n+s)/2-1} / Γ((n+s)/2) dα` with `E_low` the
/// series lower bound.
///
/// The substitution `α = A v^{2/s}` (`A = 4π/e`) removes the endpoint
/// singularity at `α = 0`, after which the integrand is smooth on `[0, 1]`
/// and composite Gauss-Legendre panels are doubled until two successive
/// values agree to `tol`.
pub fn inverse_power_lower_bound(n: u32, s: f64, rho: f64, tol: f64) -> Result<BoundResult> {
    check(n, s, rho)?;
    if !(tol > 0.0) {
        return Err(Error::domain("tol must be positive"));
    }
    let base = BoundParams::new(n, 1.0, rho)?;
    let mut table = zero_table_for(n);
    let rule = GaussLegendre::new(PANEL_POINTS);
    let h = 0.5 * (n as f64 + s);
    let big_a = SHARP_THRESHOLD;
    // ln of the v-integrand: ln E(α) + (h-1) ln α - lnΓ(h) + ln(dα/dv).
    let log_const = h * big_a.ln() + (2.0 / s).ln() - log_gamma(h);
    let alpha_switch = small_alpha_switch(&base, &mut table)?;
    let mut integrand = |v: f64| -> Result<f64> {
        let alpha = big_a * v.powf(2.0 / s);
        let log_e = if alpha < alpha_switch {
            log_small_alpha_bound(&base, alpha)
        } else {
            main_lower_bound_with_table(&base.with_alpha(alpha)?, DEFAULT_TOL, &mut table)?
                .log_value
        };
        Ok(log_e + log_const + (n as f64 / s) * v.ln())
    };

    let mut panels = 1;
    let mut prev: Option<f64> = None;
    let mut evaluations = 0;
    loop {
        let mut acc = LogSum::new();
        let width = 1.0 / panels as f64;
        for p in 0..panels {
            let a = p as f64 * width;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let v = a + 0.5 * width * (1.0 + x);
                acc.add_log((0.5 * width * w).ln() + integrand(v)?);
                evaluations += 1;
            }
        }
        let cur = acc.ln();
        if let Some(p) = prev {
            let change = (cur - p).abs();
            if change < tol {
                return Ok(BoundResult {
                    kind: BoundKind::InvpowLower,
                    value: cur.exp(),
                    log_value: cur,
                    terms_used: evaluations,
                    tail_bound: cur.exp() * change.exp_m1(),
                    params: None,
                    n,
                    rho,
                    notes: vec![
                        format!("s = {s}"),
                        format!("{panels} panels of {PANEL_POINTS} points"),
                        format!("closed form rho(pi/alpha)^(n/2) - 1 used for alpha < {alpha_switch:.6e}"),
                    ],
                });
            }
        }
        if panels >= MAX_PANELS {
            return Err(Error::convergence(format!(
                "alpha quadrature for n={n}, s={s} did not settle within {MAX_PANELS} panels"
            )));
        }
        prev = Some(cur);
        panels *= 2;
    }
}

/// `ln(ρ(π/α)^{n/2} - 1)`.
///
/// For small `α` the series equals this up to a relative error of order
/// `e^{-π^2 r^2/α}`: the summation over Bessel zeros is exact for functions
/// whose Fourier transform is supported in the ball of radius `r`, and the
/// Gaussian's transform has only that much mass outside it.
fn log_small_alpha_bound(base: &BoundParams, alpha: f64) -> f64 {
    let log_exp = base.rho.ln() + 0.5 * base.n as f64 * (PI / alpha).ln();
    log_exp + (-(-log_exp).exp()).ln_1p()
}

/// Largest `α = π^2 r^2 / x`, `x = 40, 50, ...`, at which the series and
/// [`log_small_alpha_bound`] agree to `1e-14` relative; below it the closed
/// form is used.
fn small_alpha_switch(
    base: &BoundParams,
    table: &mut crate::specfun::zeros::BesselZeroTable,
) -> Result<f64> {
    let pr2 = (PI * base.r).powi(2);
    let mut x: f64 = 40.0;
    loop {
        let alpha = pr2 / x;
        let series =
            main_lower_bound_with_table(&base.with_alpha(alpha)?, DEFAULT_TOL, table)?.log_value;
        if (series - log_small_alpha_bound(base, alpha)).abs() < 1e-14 {
            return Ok(alpha);
        }
        if x > 2000.0 {
            return Err(Error::convergence(
                "series never reached its small-alpha closed form".to_string(),
            ));
        }
        x += 10.0;
    }
}
