//! Volumes and surface areas of Euclidean balls, in log form.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma;

/// `ln vol(B_R^n)`.
pub fn log_ball_volume(n: u32, radius: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("dimension must be >= 1"));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::domain(format!("radius must be > 0, got {radius}")));
    }
    let nf = n as f64;
    Ok(0.5 * nf * PI.ln() + nf * radius.ln() - log_gamma(0.5 * nf + 1.0))
}

/// Radius whose `n`-ball has volume `exp(log_volume)`.
pub fn radius_for_log_volume(n: u32, log_volume: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("dimension must be >= 1"));
    }
    let nf = n as f64;
    Ok(((log_volume - 0.5 * nf * PI.ln() + log_gamma(0.5 * nf + 1.0)) / nf).exp())
}

/// `ln` of the surface area of the unit sphere `S^{n-1}`, i.e. `n` times the
/// unit-ball volume.
pub fn log_unit_sphere_area(n: u32) -> Result<f64> {
    Ok((n as f64).ln() + log_ball_volume(n, 1.0)?)
}
