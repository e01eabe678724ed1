//! Closed-form upper bounds and the dual cap.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::ball::{log_ball_volume, radius_for_log_volume};
use crate::specfun::gamma::log_reg_gamma_upper;

use super::params::BoundParams;
use super::result::{BoundKind, BoundResult};

fn log_gaussian_mass(params: &BoundParams) -> f64 {
    0.5 * params.n as f64 * (PI / params.alpha).ln()
}

/// `ρ (π/α)^{n/2}`.
pub fn expectation_bound(params: &BoundParams) -> BoundResult {
    BoundResult::closed_form(
        BoundKind::Expectation,
        *params,
        params.rho.ln() + log_gaussian_mass(params),
    )
}

/// `ρ / (1 - vol(B_{r_cut})/k_div) · ∫_{|x| > r_cut} e^{-α|x|^2} dx`.
pub fn general_truncated_expectation(
    params: &BoundParams,
    r_cut: f64,
    k_div: f64,
) -> Result<BoundResult> {
    if !(k_div >= 2.0) {
        return Err(Error::domain(format!("divisor must be >= 2, got {k_div}")));
    }
    if !(r_cut >= 0.0) || !r_cut.is_finite() {
        return Err(Error::domain(format!(
            "cut radius must be >= 0, got {r_cut}"
        )));
    }
    let log_vol = if r_cut == 0.0 {
        f64::NEG_INFINITY
    } else {
        log_ball_volume(params.n, r_cut)?
    };
    let frac = (log_vol - k_div.ln()).exp();
    if frac >= 1.0 {
        return Err(Error::domain(format!(
            "ball volume {} reaches the divisor {k_div}",
            log_vol.exp()
        )));
    }
    let log_q = log_reg_gamma_upper(0.5 * params.n as f64, params.alpha * r_cut * r_cut)?;
    let log_value = params.rho.ln() - (-frac).ln_1p() + log_gaussian_mass(params) + log_q;
    Ok(BoundResult::closed_form(
        BoundKind::TruncatedExpectation,
        *params,
        log_value,
    ))
}

/// The conditional expectation bound with `vol(B_{r_c}) = 1/n` and divisor 2.
pub fn conditional_expectation_bound(params: &BoundParams) -> Result<BoundResult> {
    let n = params.n;
    if n <= 1 {
        return Err(Error::domain("conditional expectation bound needs n > 1"));
    }
    let r_c = radius_for_log_volume(n, -(n as f64).ln())?;
    let nf = n as f64;
    let log_q = log_reg_gamma_upper(0.5 * nf, params.alpha * r_c * r_c)?;
    let log_value =
        params.rho.ln() - (-1.0 / (2.0 * nf)).ln_1p() + log_gaussian_mass(params) + log_q;
    Ok(
        BoundResult::closed_form(BoundKind::CondExpectation, *params, log_value)
            .note(format!("r_c = {r_c:.17e}")),
    )
}

/// `ρ ∫_{|x| > r_d} e^{-α|x|^2} dx` with `vol(B_{r_d}) = 1/ρ`.
pub fn dual_cap(params: &BoundParams) -> Result<BoundResult> {
    let r_d = radius_for_log_volume(params.n, -params.rho.ln())?;
    let log_q = log_reg_gamma_upper(0.5 * params.n as f64, params.alpha * r_d * r_d)?;
    let log_value = params.rho.ln() + log_gaussian_mass(params) + log_q;
    Ok(BoundResult::closed_form(
        BoundKind::DualCap,
        *params,
        log_value,
    ))
}
