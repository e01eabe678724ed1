//! The linear programming bound `ρĥ(0) - h(0)` computed from `p_M`.
//!
//! Two routes are compared. The summation route uses the rearrangement
//! `ρĥ(0) - h(0) = Σ_m w_m h(λ_m/(πr))` with the series weights `w_m`; the
//! values up to the faithful radius (below) come from evaluating `p_M`, the
//! rest from the interpolation condition `h = f`. Past that radius `p_M`
//! still interpolates in exact arithmetic, but its value there is a
//! cancellation of huge terms and carries no digits. The radial route integrates
//! `p_M(-t^2)` directly up to the end of the node interval where `p_M` tracks
//! the Gaussian best, and the Gaussian itself beyond. The truncated `p_M` is
//! not band-limited, so the radial route is only a consistency check; its gap
//! to the summation route shrinks slowly with `M`.

use std::f64::consts::PI;

use crate::bounds::result::{BoundKind, BoundResult};
use crate::bounds::series::{log_prefactor, log_summand, main_lower_bound, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::quad::GaussLegendre;
use crate::specfun::ball::log_unit_sphere_area;
use crate::specfun::gamma::log_reg_gamma_upper;
use crate::sum::CompensatedSum;

use super::aux::AuxFunction;

/// Points per node interval when locating the faithful radius.
const SCAN_POINTS: usize = 12;

/// Where the radial route switches from `p_M` to the Gaussian.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FaithfulRadius {
    /// Index (1-based) of the node radius that ends the chosen interval.
    pub index: usize,
    pub radius: f64,
    /// Largest `|p_M(-t^2) - e^{-αt^2}|` seen on that interval.
    pub max_gap: f64,
}

/// The node interval `[t_{j-1}, t_j]` (with `t_0 = 0`) on which `p_M` is
/// uniformly closest to the Gaussian; beyond it the truncation error grows.
pub fn faithful_radius(h: &AuxFunction) -> FaithfulRadius {
    let radii = h.node_radii();
    let rule = GaussLegendre::new(SCAN_POINTS);
    let mut best = FaithfulRadius {
        index: 1,
        radius: radii[0],
        max_gap: f64::INFINITY,
    };
    let mut lo = 0.0;
    for (j, &hi) in radii.iter().enumerate() {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let gap = rule
            .nodes
            .iter()
            .map(|x| {
                let t = mid + half * x;
                (h.eval_u(-t * t) - h.potential(t)).abs()
            })
            .fold(0.0f64, f64::max);
        if gap <= best.max_gap {
            best = FaithfulRadius {
                index: j + 1,
                radius: hi,
                max_gap: gap,
            };
        }
        lo = hi;
    }
    best
}

/// The summation route: `Σ_m w_m h(λ_m/(πr))`.
pub fn lp_value_by_summation(h: &AuxFunction, cut: &FaithfulRadius) -> Result<(f64, f64)> {
    let p = &h.params;
    let main = main_lower_bound(p, DEFAULT_TOL)?;
    let log_pre = log_prefactor(p.n);
    // Replace f by p_M at the radii inside the cut; the difference is the
    // interpolation residual weighted by w_m.
    let mut delta = CompensatedSum::new();
    for (&lambda, &comp) in h.zeros.iter().zip(&h.companions).take(cut.index) {
        let t = lambda / (PI * p.r);
        let f = h.potential(t);
        // weight without the Gaussian factor
        let w = (log_pre + log_summand(p.n, 0.0, lambda, comp)).exp();
        delta.add(w * (h.eval_u(-t * t) - f));
    }
    Ok((main.value + delta.value(), main.tail_bound))
}

/// The radial route: `ρ ∫ h - h(0)` with `h = p_M` inside the faithful
/// radius and the Gaussian outside. Also returns the Gaussian part of `ρ ∫ h`.
pub fn lp_value_by_radial_quadrature(h: &AuxFunction, cut: &FaithfulRadius) -> Result<(f64, f64)> {
    let p = &h.params;
    let n = p.n as i32;
    let radii = h.node_radii();
    // p_M(-t^2) t^{n-1} has degree 2M + n - 3, integrated exactly.
    let rule = GaussLegendre::new(h.m + p.n as usize / 2 + 1);
    let mut inner = CompensatedSum::new();
    let mut lo = 0.0;
    for &hi in &radii[..cut.index] {
        inner.add(rule.integrate(lo, hi, |t| h.eval_u(-t * t) * t.powi(n - 1)));
        lo = hi;
    }
    let surface = log_unit_sphere_area(p.n)?.exp();
    let outer = p.rho
        * (0.5 * p.n as f64 * (PI / p.alpha).ln()
            + log_reg_gamma_upper(0.5 * p.n as f64, p.alpha * cut.radius * cut.radius)?)
        .exp();
    let value = p.rho * surface * inner.value() + outer - h.eval_u(0.0);
    Ok((value, outer))
}

/// `ρĥ(0) - h(0)` for the truncated auxiliary function.
///
/// Returns the summation route with the gap to the radial route in
/// `tail_bound`. Fails with [`Error::Disagreement`] when the relative gap
/// exceeds `100 · quadrature_tol`.
pub fn lp_bound_via_aux(h: &AuxFunction, quadrature_tol: f64) -> Result<BoundResult> {
    if !(quadrature_tol > 0.0) || !quadrature_tol.is_finite() {
        return Err(Error::domain(format!(
            "quadrature_tol must be positive, got {quadrature_tol}"
        )));
    }
    let cut = faithful_radius(h);
    let (series, series_tail) = lp_value_by_summation(h, &cut)?;
    let (radial, outer) = lp_value_by_radial_quadrature(h, &cut)?;
    let gap = (series - radial).abs();
    let allowed = 100.0 * quadrature_tol * series.abs();
    if !(gap <= allowed) {
        return Err(Error::Disagreement {
            series,
            radial,
            allowed,
        });
    }
    let p = h.params;
    Ok(BoundResult {
        kind: BoundKind::LpAux,
        value: series,
        log_value: series.ln(),
        terms_used: h.m,
        tail_bound: gap,
        params: Some(p),
        n: p.n,
        rho: p.rho,
        notes: vec![
            format!("radial route: {radial:.17e}"),
            format!(
                "radial route uses p_M up to t = {:.6} (node {}, max |p_M - f| = {:.3e}); Gaussian beyond contributes {outer:.6e}",
                cut.radius, cut.index, cut.max_gap
            ),
            format!(
                "summation route: radii beyond node {} use h = f; series tail majorant {series_tail:.3e}",
                cut.index
            ),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::params::BoundParams;
    use crate::interp::aux::{build_aux, Precision};

    fn aux(n: u32, alpha: f64, rho: f64, m: usize) -> AuxFunction {
        build_aux(
            &BoundParams::new(n, alpha, rho).unwrap(),
            m,
            Precision::Extended,
        )
        .unwrap()
    }

    #[test]
    fn two_dimensional_row() {
        let b = lp_bound_via_aux(&aux(2, PI, 1.0, 200), 1e-5).unwrap();
        assert!((b.value - 0.15702654).abs() < 1e-6, "{}", b.value);
        assert!(b.tail_bound < 1e-3 * b.value);
    }

    #[test]
    fn one_dimensional_row() {
        let b = lp_bound_via_aux(&aux(1, PI, 1.0, 200), 1e-5).unwrap();
        assert!((b.value - 0.08643481).abs() < 1e-6, "{}", b.value);
    }

    #[test]
    fn radial_gap_shrinks_with_m() {
        let mut prev = f64::INFINITY;
        for m in [50, 100, 200, 400] {
            let h = aux(2, PI, 1.0, m);
            let cut = faithful_radius(&h);
            let (s, _) = lp_value_by_summation(&h, &cut).unwrap();
            let (r, _) = lp_value_by_radial_quadrature(&h, &cut).unwrap();
            let gap = (s - r).abs();
            assert!(gap < prev, "M={m}: {gap}");
            prev = gap;
        }
    }

    #[test]
    fn tight_tolerance_reports_disagreement() {
        let e = lp_bound_via_aux(&aux(2, PI, 1.0, 40), 1e-9).unwrap_err();
        assert!(matches!(e, Error::Disagreement { .. }));
    }
}
