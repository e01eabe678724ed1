//! Cross-module verification suites shared by `gcm verify` and the
//! acceptance harness. Each suite reduces a grid of checks to its worst
//! case and compares that with a fixed threshold.

use std::f64::consts::{E, PI};
use std::fmt;

use num_complex::Complex;

use crate::bounds::{
    dual_cap, expectation_bound, inverse_power_lower_bound, inverse_power_upper_bound,
    main_lower_bound, BoundParams, DEFAULT_TOL,
};
use crate::error::Result;
use crate::interp::{
    alg_identity_residual, bgf_residual, build_aux, lp_bound_via_aux, midpoint_gaps,
    psd_sample_check, verify_minorant, NodeSeed, Precision,
};
use crate::lattices::{lattice_energy, LatticeModel};

const ALPHAS: [f64; 3] = [PI / 2.0, PI, 2.0 * PI];
const RHOS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Psd,
    Bgf,
    Minorant,
    Coefficients,
    Sandwich,
    InversePower,
    Alg,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Oracle,
        Suite::Psd,
        Suite::Bgf,
        Suite::Minorant,
        Suite::Coefficients,
        Suite::Sandwich,
        Suite::InversePower,
        Suite::Alg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Psd => "psd",
            Suite::Bgf => "bgf",
            Suite::Minorant => "minorant",
            Suite::Coefficients => "coefficients",
            Suite::Sandwich => "sandwich",
            Suite::InversePower => "inverse_power",
            Suite::Alg => "alg",
        }
    }
}

/// Knobs for the expensive suites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Truncation level for the oracle and minorant suites.
    pub m: usize,
    /// Quadrature tolerance handed to the radial cross-check.
    pub quadrature_tol: f64,
    pub psd_trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            m: 200,
            quadrature_tol: 2e-3,
            psd_trials: 100,
            seed: 17,
        }
    }
}

/// Outcome of one suite. `worst` is on the same scale as `threshold`;
/// the suite passes when every case ran and `worst <= threshold`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub worst: f64,
    pub threshold: f64,
    /// The case attaining `worst`, or the first error.
    pub detail: String,
    pub error: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite, threshold: f64) -> Self {
        SuiteReport {
            suite,
            cases: 0,
            worst: f64::NEG_INFINITY,
            threshold,
            detail: String::new(),
            error: None,
        }
    }

    fn record(&mut self, value: f64, detail: impl FnOnce() -> String) {
        self.cases += 1;
        // NaN counts as worst
        if !(value <= self.worst) {
            self.worst = value;
            self.detail = detail();
        }
    }

    fn fail(&mut self, e: crate::Error, case: String) {
        if self.error.is_none() {
            self.error = Some(format!("{case}: {e}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.cases > 0 && self.worst <= self.threshold
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {:<4} cases={:<4} worst={:>11.3e} threshold={:.1e}",
            self.suite.name(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.worst,
            self.threshold
        )?;
        match &self.error {
            Some(e) => write!(f, "  error: {e}"),
            None => write!(f, "  at {}", self.detail),
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    match suite {
        Suite::Oracle => oracle(cfg),
        Suite::Psd => psd(cfg),
        Suite::Bgf => bgf(),
        Suite::Minorant => minorant(cfg),
        Suite::Coefficients => coefficients(),
        Suite::Sandwich => sandwich(),
        Suite::InversePower => inverse_power(),
        Suite::Alg => alg(),
    }
}

/// Relative gap between the auxiliary-function route and the series bound
/// over `n ∈ {1,2,4}` and the α, ρ grid.
pub fn oracle(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Oracle, 1e-6);
    for n in [1, 2, 4] {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                let case = format!("n={n} alpha={alpha:.6} rho={rho}");
                match oracle_gap(n, alpha, rho, cfg.m, cfg.quadrature_tol) {
                    Ok(g) => rep.record(g, || case),
                    Err(e) => rep.fail(e, case),
                }
            }
        }
    }
    rep
}

/// `|lp/main - 1|` at one grid point.
pub fn oracle_gap(n: u32, alpha: f64, rho: f64, m: usize, quadrature_tol: f64) -> Result<f64> {
    let p = BoundParams::new(n, alpha, rho)?;
    let h = build_aux(&p, m, Precision::Extended)?;
    let lp = lp_bound_via_aux(&h, quadrature_tol)?;
    let main = main_lower_bound(&p, DEFAULT_TOL)?;
    Ok((lp.value / main.value - 1.0).abs())
}

/// `-λ_min / K(0)` over `(n, k) ∈ {1..8} × {0..5}`.
pub fn psd(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Psd, 1e-9);
    for n in 1..=8 {
        for k in 0..=5 {
            let case = format!("n={n} k={k}");
            match psd_sample_check(n, k, 12, cfg.psd_trials, cfg.seed + n as u64) {
                Ok(s) => rep.record(-s.min_eigenvalue / s.diagonal, || case),
                Err(e) => rep.fail(e, case),
            }
        }
    }
    rep
}

pub fn bgf() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Bgf, 1e-6);
    for n in 1..=32 {
        for rho in [0.5, 1.0, 2.0] {
            let case = format!("n={n} rho={rho}");
            match bgf_residual(n, rho) {
                Ok(r) => rep.record(r, || case),
                Err(e) => rep.fail(e, case),
            }
        }
    }
    rep
}

/// Largest `p_M(-t^2) - e^{-αt^2}` on a dense grid; also fails if `p_M`
/// fails to dip below the Gaussian between consecutive nodes.
pub fn minorant(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Minorant, 1e-8);
    for n in [1, 2, 4, 8] {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                let case = format!("n={n} alpha={alpha:.6} rho={rho}");
                let res = BoundParams::new(n, alpha, rho)
                    .and_then(|p| build_aux(&p, cfg.m, Precision::Extended))
                    .and_then(|h| {
                        let radii = h.node_radii();
                        let scan = verify_minorant(&h, 0.9 * radii[radii.len() - 1], 4000)?;
                        let positive = midpoint_gaps(&h, radii.len())
                            .iter()
                            .filter(|(_, g)| !(*g < 0.0))
                            .count();
                        Ok((scan.max_violation, positive))
                    });
                match res {
                    Ok((v, 0)) => rep.record(v, || case),
                    Ok((_, k)) => rep.fail(
                        crate::Error::Convergence(format!("{k} midpoint gaps are not negative")),
                        case,
                    ),
                    Err(e) => rep.fail(e, case),
                }
            }
        }
    }
    rep
}

/// `-min_k H_k / max_k H_k`, which should not exceed rounding level.
pub fn coefficients() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Coefficients, 1e-14);
    for n in [1, 2, 3, 5, 8] {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                for (m, prec) in [
                    (20, Precision::Standard),
                    (60, Precision::Standard),
                    (200, Precision::Extended),
                ] {
                    let case = format!("n={n} alpha={alpha:.6} rho={rho} M={m}");
                    match BoundParams::new(n, alpha, rho).and_then(|p| build_aux(&p, m, prec)) {
                        Ok(h) => {
                            let scale = h.coeffs.iter().fold(1.0f64, |a, &c| a.max(c));
                            let low = h.coeffs.iter().fold(0.0f64, |a, &c| a.min(c));
                            // + 0.0 turns -0.0 into 0.0
                            rep.record(-low / scale + 0.0, || case);
                        }
                        Err(e) => rep.fail(e, case),
                    }
                }
            }
        }
    }
    rep
}

/// `ln(lower) - ln(upper)` for the series bound against the expectation
/// bound, the dual cap and the computable lattice energies.
pub fn sandwich() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Sandwich, 1e-12);
    let dims = [1, 2, 3, 5, 8, 16, 24, 32, 64];
    let alphas = [0.5, 1.0, 2.0, PI, 4.0, 6.0, 8.0, 12.0];
    for &n in &dims {
        for &alpha in &alphas {
            for &rho in &RHOS {
                let case = format!("n={n} alpha={alpha} rho={rho}");
                let res = BoundParams::new(n, alpha, rho).and_then(|p| {
                    let lo = main_lower_bound(&p, DEFAULT_TOL)?;
                    let up = expectation_bound(&p).log_value.min(dual_cap(&p)?.log_value);
                    Ok((lo.log_value - up) / lo.log_value.abs().max(1.0))
                });
                match res {
                    Ok(g) => rep.record(g, || case),
                    Err(e) => rep.fail(e, case),
                }
            }
        }
    }
    let lattices = [
        LatticeModel::Zn(1),
        LatticeModel::A2,
        LatticeModel::D4,
        LatticeModel::E8,
        LatticeModel::Leech,
    ];
    for model in &lattices {
        for alpha in [1.0, PI, 8.0] {
            for &rho in &RHOS {
                let case = format!("{model} alpha={alpha} rho={rho}");
                let res = BoundParams::new(model.dim(), alpha, rho).and_then(|p| {
                    let lo = main_lower_bound(&p, DEFAULT_TOL)?;
                    let e = lattice_energy(model, alpha, rho, 1e-12)?;
                    Ok((lo.log_value - e.log_value) / lo.log_value.abs().max(1.0))
                });
                match res {
                    Ok(g) => rep.record(g, || case),
                    Err(e) => rep.fail(e, case),
                }
            }
        }
    }
    rep
}

/// `ln(lower/upper)` for the inverse-power sandwich, plus the pinned ratio
/// at `n = 64, s = 2`, which must stay above `0.8 (2/e)^2`.
pub fn inverse_power() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::InversePower, 0.0);
    for n in [2u32, 4, 8, 16, 24] {
        for s in [0.5, 1.0, 2.0, 4.0] {
            let case = format!("n={n} s={s}");
            let res = inverse_power_lower_bound(n, s, 1.0, 1e-8)
                .and_then(|lo| Ok(lo.log_value - inverse_power_upper_bound(n, s, 1.0)?.log_value));
            match res {
                Ok(g) => rep.record(g, || case),
                Err(e) => rep.fail(e, case),
            }
        }
    }
    let res = inverse_power_lower_bound(64, 2.0, 1.0, 1e-8)
        .and_then(|lo| Ok(lo.value / inverse_power_upper_bound(64, 2.0, 1.0)?.value));
    match res {
        // recorded as floor - ratio so that <= 0 passes
        Ok(ratio) => rep.record(0.8 * (2.0 / E).powi(2) - ratio, || {
            format!("n=64 s=2 ratio={ratio:.6}")
        }),
        Err(e) => rep.fail(e, "n=64 s=2".into()),
    }
    rep
}

/// Residual of the partial-fraction identity behind the interpolation
/// weights, scaled by `|z - u0|`.
pub fn alg() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Alg, 1e-12);
    let seeds = [
        NodeSeed::Squares { scale: 1.0 },
        NodeSeed::Squares { scale: 0.25 },
        NodeSeed::Interpolation(BoundParams::new(5, PI, 1.0).expect("valid parameters")),
    ];
    let pairs = [
        (Complex::new(-0.5, 0.0), Complex::new(1.0, 1.0)),
        (Complex::new(0.0, 0.0), Complex::new(-0.3, 2.0)),
        (Complex::new(-0.1, 0.1), Complex::new(3.0, -4.0)),
    ];
    for seed in &seeds {
        for &(u0, z) in &pairs {
            for m in [0, 1, 7, 30, 100] {
                let case = format!("{seed:?} u0={u0} z={z} M={m}");
                match alg_identity_residual(u0, z, seed, m) {
                    Ok(r) => rep.record(r * (z - u0).norm(), || case),
                    Err(e) => rep.fail(e, case),
                }
            }
        }
    }
    rep
}
