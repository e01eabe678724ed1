//! Large-`n` behaviour: growth rates of the bounds and the Gaussian shape of
//! the summands around their peak.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};

use super::params::BoundParams;
use super::series::{log_prefactor, log_summand, zero_table_for};

/// `4π/e`, where the lower bound stops matching the expectation bound.
pub const SHARP_THRESHOLD: f64 = 4.0 * PI / E;

/// `πe`, beyond which the conditional expectation bound improves the rate.
pub const CONDEXP_THRESHOLD: f64 = PI * E;

/// `n`-th root growth rates of the lower and upper bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatePair {
    pub lower_rate: f64,
    pub upper_rate: f64,
}

pub fn asymptotic_rate(alpha: f64) -> Result<RatePair> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!(
            "alpha must be a positive number, got {alpha}"
        )));
    }
    let base = (PI / alpha).sqrt();
    let lower_rate = if alpha < SHARP_THRESHOLD {
        base
    } else {
        0.5 * (1.0 - alpha * E / (8.0 * PI)).exp()
    };
    let upper_rate = if alpha <= CONDEXP_THRESHOLD {
        base
    } else {
        base * condexp_factor_rate(alpha)
    };
    Ok(RatePair {
        lower_rate,
        upper_rate,
    })
}

/// `lim Q(n/2, α r_c^2)^{1/n}` for `α > πe`, where `r_c^2 ~ n/(2πe)`.
///
/// Writing `β = α/(πe)`, Laplace's method on `Γ(s, βs)/Γ(s)` gives
/// `exp(s(1 - β + ln β))`, so the rate is `exp((1 - β + ln β)/2)`.
pub fn condexp_factor_rate(alpha: f64) -> f64 {
    let beta = alpha / CONDEXP_THRESHOLD;
    if beta <= 1.0 {
        return 1.0;
    }
    (0.5 * (1.0 - beta + beta.ln())).exp()
}

/// `e^{1/2 - α/(2πe)}`: the same limit with the `ln β` term dropped. This
/// is strictly smaller than [`condexp_factor_rate`] and is not attained.
pub fn condexp_factor_rate_without_log_term(alpha: f64) -> f64 {
    (0.5 - alpha / (2.0 * CONDEXP_THRESHOLD)).exp()
}

/// Constant `c` placing the peak summand at `m ≈ c n`; zero for `α >= 4π/e`.
pub fn profile_constant_c(alpha: f64) -> f64 {
    if alpha >= SHARP_THRESHOLD {
        return 0.0;
    }
    let t2 = 4.0 * PI / (alpha * E);
    let t = t2.sqrt();
    ((t2 - 1.0).sqrt() - (1.0 / t).acos()) / (2.0 * PI)
}

/// Shape of the summands of the normalized series near their peak.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticProfile {
    pub c: f64,
    /// `None` when `α >= 4π/e`, where the peak sits at `m = 1`.
    pub k: Option<f64>,
    pub t_m: f64,
    pub peak_index: f64,
    pub n: u32,
    pub rho: f64,
}

impl AsymptoticProfile {
    /// `ρ e^{-πK d^2} sqrt(K/n)`.
    pub fn predicted_term(&self, d: f64) -> Option<f64> {
        let k = self.k?;
        Some(self.rho * (-PI * k * d * d).exp() * (k / self.n as f64).sqrt())
    }

    pub fn is_degenerate(&self) -> bool {
        self.k.is_none()
    }
}

pub fn gaussian_profile(params: &BoundParams) -> AsymptoticProfile {
    let alpha = params.alpha;
    let c = profile_constant_c(alpha);
    let k = (alpha < SHARP_THRESHOLD).then(|| 4.0 * PI * alpha / (SHARP_THRESHOLD - alpha));
    AsymptoticProfile {
        c,
        k,
        t_m: (4.0 * PI / (alpha * E)).sqrt(),
        peak_index: c * params.n as f64,
        n: params.n,
        rho: params.rho,
    }
}

/// Comparison of the actual normalized summands with the Gaussian profile.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileAgreement {
    /// `max |actual/predicted - 1|` over the window.
    pub max_deviation: f64,
    /// `d` at which the maximum occurs.
    pub argmax_d: f64,
    /// `(m, d, actual, predicted)` for every sampled summand.
    pub samples: Vec<(usize, f64, f64, f64)>,
    /// Sum of the actual summands over the window.
    pub actual_mass: f64,
    /// `ρ sqrt(K) ∫_{-w}^{w} e^{-πKx^2} dx`, the Riemann-sum limit of the same.
    pub predicted_mass: f64,
}

impl ProfileAgreement {
    /// `|actual_mass / predicted_mass - 1|`.
    pub fn mass_deviation(&self) -> f64 {
        (self.actual_mass / self.predicted_mass - 1.0).abs()
    }
}

/// Samples `m = round(cn + d sqrt(n))` for `|d| <= window`.
pub fn profile_agreement(params: &BoundParams, window: f64) -> Result<ProfileAgreement> {
    let prof = gaussian_profile(params);
    if prof.is_degenerate() {
        return Err(Error::domain("no Gaussian profile for alpha >= 4pi/e"));
    }
    if !(window > 0.0) {
        return Err(Error::domain("window must be positive"));
    }
    if prof.peak_index < 5.0 {
        return Err(Error::domain(format!(
            "peak index c*n = {:.3} is below 5; increase n",
            prof.peak_index
        )));
    }
    let n = params.n;
    let sn = (n as f64).sqrt();
    let lo = ((prof.peak_index - window * sn).ceil().max(1.0)) as usize;
    let hi = (prof.peak_index + window * sn).floor() as usize;
    let mut table = zero_table_for(n);
    table.extend_to(hi)?;
    let a = params.gaussian_rate();
    let shift = log_prefactor(n) - 0.5 * n as f64 * (PI / params.alpha).ln();
    let mut out = ProfileAgreement {
        max_deviation: 0.0,
        argmax_d: 0.0,
        samples: Vec::new(),
        actual_mass: 0.0,
        predicted_mass: 0.0,
    };
    let mut mass = crate::sum::CompensatedSum::<f64>::new();
    for m in lo..=hi {
        let d = (m as f64 - prof.peak_index) / sn;
        let actual =
            (shift + log_summand(n, a, table.zeros[m - 1], table.companion_values[m - 1])).exp();
        let predicted = prof.predicted_term(d).unwrap_or(f64::NAN);
        let dev = (actual / predicted - 1.0).abs();
        if dev > out.max_deviation || dev.is_nan() {
            out.max_deviation = dev;
            out.argmax_d = d;
        }
        out.samples.push((m, d, actual, predicted));
        mass.add(actual);
    }
    out.actual_mass = mass.value();
    let k = prof.k.unwrap_or(f64::NAN);
    // sqrt(K) ∫_{-w}^{w} e^{-πKx^2} dx = erf(w sqrt(πK))
    out.predicted_mass = params.rho * erf(window * (PI * k).sqrt());
    Ok(out)
}

fn erf(x: f64) -> f64 {
    use crate::specfun::gamma::reg_gamma_upper;
    // erf(x) = 1 - Q(1/2, x^2) for x >= 0
    let q = reg_gamma_upper(0.5, x * x).unwrap_or(0.0);
    if x >= 0.0 {
        1.0 - q
    } else {
        q - 1.0
    }
}
