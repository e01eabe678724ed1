//! The Bessel-zero series lower bound
//!
//! `E >= n / (2^{n-1} Γ(n/2+1)^2) Σ_m λ_m^{n-2} / J_{n/2-1}(λ_m)^2 · e^{-α λ_m^2/(πr)^2}`,
//!
//! summed term by term in log space.
//!
//! Tail control: at a zero of `J_ν`, the Wronskian gives
//! `J'_ν(λ)^2 = 4 / (π^2 λ^2 M_ν(λ)^2)` with `M_ν^2 = J_ν^2 + Y_ν^2`, and
//! `M_ν` is decreasing (Nicholson). Hence for `λ > λ_k`,
//! `1 / (λ^2 J_{ν-1}(λ)^2) <= 1 / (λ_k^2 J_{ν-1}(λ_k)^2)`, so every later
//! term is at most `C λ^n e^{-a λ^2}`. Past the peak of `λ^n e^{-aλ^2}` and
//! with zero spacing at least `δ`, the rest is dominated by a geometric
//! series whose ratio is that of consecutive samples `δ` apart.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::specfun::gamma::{log_gamma, log_gamma_dd};
use crate::specfun::zeros::BesselZeroTable;
use crate::sum::LogSum;

use super::asymptotics::profile_constant_c;
use super::params::BoundParams;
use super::result::{BoundKind, BoundResult};

/// Guaranteed lower bound on the gap between consecutive zeros used by
/// the tail majorant. The true gap exceeds `π` for `ν >= 1/2`.
pub const ZERO_SPACING: f64 = PI / 2.0;

const CHUNK: usize = 64;

/// Largest `tol` accepted by [`main_lower_bound`].
pub const MAX_TOL: f64 = 1e-6;

/// Default series tolerance.
pub const DEFAULT_TOL: f64 = 1e-14;

/// `ln( n / (2^{n-1} Γ(n/2+1)^2) )`.
pub fn log_prefactor(n: u32) -> f64 {
    let nf = n as f64;
    let lg = if nf > 100.0 {
        f64::from(log_gamma_dd(0.5 * nf + 1.0))
    } else {
        log_gamma(0.5 * nf + 1.0)
    };
    nf.ln() - (nf - 1.0) * LN_2 - 2.0 * lg
}

/// `ln` of the `m`-th summand without the prefactor.
#[inline]
pub fn log_summand(n: u32, a: f64, lambda: f64, companion: f64) -> f64 {
    (n as f64 - 2.0) * lambda.ln() - 2.0 * companion.abs().ln() - a * lambda * lambda
}

/// Empty zero table for `J_{n/2}`, to be shared across calls with the same `n`.
pub fn zero_table_for(n: u32) -> BesselZeroTable {
    BesselZeroTable {
        order: 0.5 * n as f64,
        zeros: Vec::new(),
        companion_values: Vec::new(),
    }
}

/// `ln` of the rigorous majorant for the terms after the one at
/// `(lambda, companion)`, prefactor excluded. `None` when the geometric
/// ratio is not yet below one.
pub fn log_tail_majorant(n: u32, a: f64, lambda: f64, companion: f64) -> Option<f64> {
    let nf = n as f64;
    if lambda * lambda * 2.0 * a < nf {
        return None;
    }
    let d = ZERO_SPACING;
    let x1 = lambda + d;
    let log_q = nf * (d / x1).ln_1p() - a * (2.0 * x1 * d + d * d);
    if log_q >= 0.0 {
        return None;
    }
    let log_c = -2.0 * lambda.ln() - 2.0 * companion.abs().ln();
    let log_g = nf * x1.ln() - a * x1 * x1;
    Some(log_c + log_g - (-log_q.exp()).ln_1p())
}

pub fn main_lower_bound(params: &BoundParams, tol: f64) -> Result<BoundResult> {
    let mut table = zero_table_for(params.n);
    main_lower_bound_with_table(params, tol, &mut table)
}

/// As [`main_lower_bound`], growing a caller-owned zero table for `J_{n/2}`.
pub fn main_lower_bound_with_table(
    params: &BoundParams,
    tol: f64,
    table: &mut BesselZeroTable,
) -> Result<BoundResult> {
    if !(tol > 0.0 && tol <= MAX_TOL) {
        return Err(Error::domain(format!(
            "tol must lie in (0, {MAX_TOL:e}], got {tol}"
        )));
    }
    let n = params.n;
    let nu = params.order();
    if table.order != nu {
        return Err(Error::domain(format!(
            "zero table has order {} but n/2 = {nu}",
            table.order
        )));
    }
    let a = params.gaussian_rate();
    let log_pre = log_prefactor(n);
    let cap = 10 * n as usize + 10_000;
    let peak_index = profile_constant_c(params.alpha) * n as f64;
    let min_terms = (2.0 * peak_index).ceil() as usize;
    let log_tol = tol.ln();

    let mut acc = LogSum::new();
    let mut m = 0;
    loop {
        if m == cap {
            return Err(Error::convergence(format!(
                "main series for n={n}, alpha={}, rho={} not certified within {cap} terms",
                params.alpha, params.rho
            )));
        }
        if m == table.len() {
            table.extend_to((m + CHUNK).min(cap))?;
        }
        let lambda = table.zeros[m];
        let comp = table.companion_values[m];
        let log_t = log_summand(n, a, lambda, comp);
        acc.add_log(log_t);
        m += 1;
        if m < min_terms.max(1) {
            continue;
        }
        let partial = acc.ln();
        if log_t > partial + log_tol {
            continue;
        }
        if let Some(log_tail) = log_tail_majorant(n, a, lambda, comp) {
            if log_tail < partial + log_tol {
                let log_value = log_pre + partial;
                return Ok(BoundResult {
                    kind: BoundKind::MainLower,
                    value: log_value.exp(),
                    log_value,
                    terms_used: m,
                    tail_bound: (log_pre + log_tail).exp(),
                    params: Some(*params),
                    n,
                    rho: params.rho,
                    notes: vec![format!(
                        "tail majorant: Nicholson monotonicity with zero spacing >= {:.6}",
                        ZERO_SPACING
                    )],
                });
            }
        }
    }
}

/// The main bound divided by `(π/α)^{n/2}`.
pub fn normalized_main_bound(params: &BoundParams, tol: f64) -> Result<BoundResult> {
    let main = main_lower_bound(params, tol)?;
    let shift = 0.5 * params.n as f64 * (PI / params.alpha).ln();
    let log_value = main.log_value - shift;
    Ok(BoundResult {
        value: log_value.exp(),
        log_value,
        tail_bound: main.tail_bound * (-shift).exp(),
        ..main
    }
    .note("normalized by (pi/alpha)^(n/2)"))
}

/// Individual summands `prefactor · w_m`, as `ln`, for `m = 1..=count`.
pub fn log_terms(params: &BoundParams, count: usize) -> Result<Vec<f64>> {
    let mut table = zero_table_for(params.n);
    table.extend_to(count)?;
    let a = params.gaussian_rate();
    let pre = log_prefactor(params.n);
    Ok(table
        .zeros
        .iter()
        .zip(&table.companion_values)
        .map(|(&l, &c)| pre + log_summand(params.n, a, l, c))
        .collect())
}

/// `2 Σ_{m>=1} e^{-α m^2 / ρ^2}`, the one-dimensional case in closed form.
pub fn one_dimensional_closed_form(alpha: f64, rho: f64) -> f64 {
    let mut s = 0.0;
    let mut m = 1.0;
    loop {
        let t = (-alpha * m * m / (rho * rho)).exp();
        s += t;
        if t < 1e-18 * s || t == 0.0 {
            break;
        }
        m += 1.0;
    }
    2.0 * s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn main(n: u32, alpha: f64, rho: f64) -> BoundResult {
        main_lower_bound(&BoundParams::new(n, alpha, rho).unwrap(), DEFAULT_TOL).unwrap()
    }

    #[test]
    fn low_dimensional_table_rows() {
        let want = [
            0.08643481, 0.15702654, 0.21736068, 0.27028747, 0.31750042, 0.36010894, 0.39889096,
            0.43442005, 0.46713560,
        ];
        // The printed digits are truncated, not rounded.
        for (i, w) in want.iter().enumerate() {
            let v = main(i as u32 + 1, PI, 1.0).value;
            assert!(v >= *w && v < w + 1e-8, "n={}: {v}", i + 1);
        }
        // mpmath, 30 digits: Σ e^{-λ^2/4} / J_0(λ)^2 over zeros of J_1.
        assert!((main(2, PI, 1.0).value - 0.157026546335711533816).abs() < 1e-15);
    }

    #[test]
    fn one_dimension_matches_closed_form() {
        let mut seed = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20 {
            let alpha = 0.2 + 6.0 * next();
            let rho = 0.3 + 3.0 * next();
            let got = main(1, alpha, rho);
            let want = one_dimensional_closed_form(alpha, rho);
            assert!(
                (got.value / want - 1.0).abs() < 1e-12,
                "alpha={alpha} rho={rho}"
            );
        }
    }

    #[test]
    fn tail_bound_is_small_and_honest() {
        let r = main(8, PI, 1.0);
        assert!(r.tail_bound <= 1e-10 * r.value);
        // Adding many more terms changes the sum by less than the reported tail.
        let p = BoundParams::new(8, PI, 1.0).unwrap();
        let all: f64 = log_terms(&p, r.terms_used + 200)
            .unwrap()
            .iter()
            .map(|l| l.exp())
            .sum();
        assert!(all - r.value <= r.tail_bound + 1e-15 * r.value);
    }

    #[test]
    fn normalized_equals_main_at_pi() {
        let p = BoundParams::new(6, PI, 1.0).unwrap();
        let a = main_lower_bound(&p, DEFAULT_TOL).unwrap();
        let b = normalized_main_bound(&p, DEFAULT_TOL).unwrap();
        assert!((a.log_value - b.log_value).abs() < 1e-15);
    }

    #[test]
    fn normalized_regression_n200_alpha2() {
        let p = BoundParams::new(200, 2.0, 1.0).unwrap();
        let v = normalized_main_bound(&p, DEFAULT_TOL).unwrap().value;
        // The exact value is 1 - (2/π)^100 ~ 1 - 2.5e-20; the residual is
        // rounding in a log value near 45.
        assert!((v - 1.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn rejects_loose_tolerance() {
        let p = BoundParams::new(2, PI, 1.0).unwrap();
        assert!(matches!(main_lower_bound(&p, 1e-3), Err(Error::Domain(_))));
    }

    #[test]
    fn scaling_invariance_termwise() {
        // (α, r) -> (αk^2, rk) leaves every exponent αλ^2/(πr)^2 unchanged.
        let p = BoundParams::new(5, 1.3, 0.7).unwrap();
        let k: f64 = 1.7;
        let mut q = p.with_alpha(1.3 * k * k).unwrap();
        q.r = p.r * k;
        assert!((p.gaussian_rate() - q.gaussian_rate()).abs() <= 1e-15 * p.gaussian_rate());
        let a = log_terms(&p, 30).unwrap();
        let tbl = {
            let mut t = zero_table_for(5);
            t.extend_to(30).unwrap();
            t
        };
        for (m, la) in a.iter().enumerate() {
            let lb = log_prefactor(5)
                + log_summand(5, q.gaussian_rate(), tbl.zeros[m], tbl.companion_values[m]);
            assert!((la - lb).abs() < 1e-12);
        }
    }
}
