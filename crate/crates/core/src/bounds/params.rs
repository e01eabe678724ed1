use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::specfun::ball::log_ball_volume;
use crate::specfun::gamma::log_gamma;

/// Dimension, Gaussian steepness and density, plus the radius `r` with
/// `vol(B_{r/2}^n) = ρ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundParams {
    pub n: u32,
    pub alpha: f64,
    pub rho: f64,
    pub r: f64,
}

impl BoundParams {
    pub fn new(n: u32, alpha: f64, rho: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be >= 1"));
        }
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!(
                "alpha must be a positive number, got {alpha}"
            )));
        }
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::domain(format!(
                "rho must be a positive number, got {rho}"
            )));
        }
        let r = radius_for_density(n, rho);
        Ok(BoundParams { n, alpha, rho, r })
    }

    /// Same `(n, ρ)` with a different steepness; `r` is reused.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!(
                "alpha must be a positive number, got {alpha}"
            )));
        }
        Ok(BoundParams { alpha, ..*self })
    }

    /// `ν = n/2`.
    pub fn order(&self) -> f64 {
        0.5 * self.n as f64
    }

    /// `ln ρ` recomputed from `r`.
    pub fn log_density_from_r(&self) -> f64 {
        log_ball_volume(self.n, 0.5 * self.r).unwrap_or(f64::NAN)
    }

    /// Coefficient `a` in `f(λ/(πr)) = e^{-a λ^2}`.
    pub fn gaussian_rate(&self) -> f64 {
        let pr = PI * self.r;
        self.alpha / (pr * pr)
    }
}

fn radius_for_density(n: u32, rho: f64) -> f64 {
    let nf = n as f64;
    let ln_r = LN_2 + (rho.ln() - 0.5 * nf * PI.ln() + log_gamma(0.5 * nf + 1.0)) / nf;
    ln_r.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_reproduces_density() {
        for &n in &[1u32, 2, 3, 8, 24, 100, 500] {
            for &rho in &[0.5, 1.0, 2.0, 1e-3] {
                let p = BoundParams::new(n, 1.0, rho).unwrap();
                let back = p.log_density_from_r().exp();
                assert!((back / rho - 1.0).abs() < 1e-12, "n={n} rho={rho}");
            }
        }
    }

    #[test]
    fn low_dimensional_radii() {
        // n=1: r/2 * 2 = ρ; n=2: π r^2/4 = ρ
        assert!((BoundParams::new(1, 1.0, 3.0).unwrap().r - 3.0).abs() < 1e-14);
        assert!((BoundParams::new(2, 1.0, 1.0).unwrap().r - 2.0 / PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(BoundParams::new(0, 1.0, 1.0).is_err());
        assert!(BoundParams::new(2, 0.0, 1.0).is_err());
        assert!(BoundParams::new(2, 1.0, -1.0).is_err());
        assert!(BoundParams::new(2, f64::NAN, 1.0).is_err());
    }
}
