//! `Σ_{x ≠ 0} e^{-α|x|^2}` over a lattice rescaled to density `ρ`.
//!
//! The standard presentation with covolume `V` is shrunk by
//! `s = (ρV)^{1/n}`, so a shell of norm `ℓ^2` contributes
//! `N(ℓ^2) e^{-α ℓ^2 / s^2}`.
//!
//! Tail control: vectors of length at most `R` own disjoint balls of the
//! packing radius `p`, so `A(x) = #{|v|^2 <= x} <= ((√x + p)/p)^n`. Summing
//! by parts, the shells beyond `X` contribute at most
//! `a ∫_X^∞ e^{-ax} A(x) dx <= p^{-n} (1 + p/√X)^n a^{-n/2} Γ(n/2+1) Q(n/2+1, aX)`.

use std::path::Path;

use crate::bounds::params::BoundParams;
use crate::bounds::result::{BoundKind, BoundResult};
use crate::error::{Error, Result};
use crate::specfun::gamma::{log_gamma, log_reg_gamma_upper};
use crate::sum::CompensatedSum;

use super::cache::cached_theta_coefficients;
use super::theta::{theta_coefficients, MAX_TAU_INDEX};
use super::LatticeModel;

/// Largest `tol` accepted by [`lattice_energy`].
pub const MAX_TOL: f64 = 1e-10;

pub fn lattice_energy(model: &LatticeModel, alpha: f64, rho: f64, tol: f64) -> Result<BoundResult> {
    lattice_energy_with_cache(model, alpha, rho, tol, None)
}

/// As [`lattice_energy`], reading and writing theta coefficients under
/// `cache_dir` when given.
pub fn lattice_energy_with_cache(
    model: &LatticeModel,
    alpha: f64,
    rho: f64,
    tol: f64,
    cache_dir: Option<&Path>,
) -> Result<BoundResult> {
    if !(tol > 0.0 && tol <= MAX_TOL) {
        return Err(Error::domain(format!(
            "tol must lie in (0, {MAX_TOL:e}], got {tol}"
        )));
    }
    let n = model.dim();
    let params = BoundParams::new(n, alpha, rho)?;
    let s2 = (rho * model.covolume()).powf(2.0 / n as f64);
    let a = alpha / s2;
    let (value, tail, shells) = match model {
        LatticeModel::Zn(_) => integer_lattice_energy(n, a, tol),
        _ => shell_sum(model, a, tol, cache_dir)?,
    };
    Ok(BoundResult {
        kind: BoundKind::LatticeEnergy,
        value,
        log_value: value.ln(),
        terms_used: shells,
        tail_bound: tail,
        params: Some(params),
        n,
        rho,
        notes: vec![format!("{model}: squared lengths scaled by 1/{s2:.17e}")],
    })
}

/// `θ_3(e^{-a})^n - 1`.
fn integer_lattice_energy(n: u32, a: f64, tol: f64) -> (f64, f64, usize) {
    let mut acc = CompensatedSum::new();
    let mut k = 1u64;
    loop {
        let t = 2.0 * (-a * (k * k) as f64).exp();
        acc.add(t);
        // 2 Σ_{j>k} e^{-a j^2} <= 2 e^{-a(k+1)^2} / (1 - e^{-a(2k+3)})
        let next = (k + 1) as f64;
        let tail = 2.0 * (-a * next * next).exp() / -(-a * (2.0 * next + 1.0)).exp_m1();
        if tail <= 1e-3 * tol * acc.value() || tail == 0.0 {
            let theta_minus_one = acc.value();
            let nf = n as f64;
            let value = (nf * theta_minus_one.ln_1p()).exp_m1();
            // d/dθ of θ^n - 1 is n θ^{n-1}
            let tail_bound =
                nf * (nf * theta_minus_one.ln_1p()).exp() / (1.0 + theta_minus_one) * tail;
            return (value, tail_bound, k as usize);
        }
        k += 1;
    }
}

fn log_tail(model: &LatticeModel, a: f64, x: f64) -> Result<f64> {
    let nf = model.dim() as f64;
    let p = model.packing_radius();
    Ok(
        -nf * p.ln() + nf * (p / x.sqrt()).ln_1p() - 0.5 * nf * a.ln()
            + log_gamma(0.5 * nf + 1.0)
            + log_reg_gamma_upper(0.5 * nf + 1.0, a * x)?,
    )
}

fn shell_sum(
    model: &LatticeModel,
    a: f64,
    tol: f64,
    cache_dir: Option<&Path>,
) -> Result<(f64, f64, usize)> {
    // enumeration cost grows like X^{n/2} for A2 and D4; Leech is limited
    // by the tau table
    let limit = match model {
        LatticeModel::Leech => 2 * MAX_TAU_INDEX as u64,
        LatticeModel::A2 => 1 << 16,
        LatticeModel::D4 => 1 << 12,
        _ => 1 << 14,
    };
    // smallest X whose tail is negligible against the first shell
    let lead = -a * model.min_norm() as f64 + (model_first_count(model) as f64).ln();
    let mut x = 4 * model.min_norm();
    while log_tail(model, a, x as f64)? > tol.ln() + lead - 1.0 {
        x *= 2;
        if x > limit {
            return Err(Error::convergence(format!(
                "{model} theta series needs norms beyond {limit} at this density and alpha"
            )));
        }
    }
    let x = x.min(limit);
    let shells = match cache_dir {
        Some(dir) => cached_theta_coefficients(model, x, dir)?,
        None => theta_coefficients(model, x)?,
    };
    let mut acc = CompensatedSum::new();
    for &(norm, count) in &shells {
        acc.add(count as f64 * (-a * norm as f64).exp());
    }
    let value = acc.value();
    let tail = log_tail(model, a, x as f64)?.exp();
    if !(tail <= tol * value) {
        return Err(Error::convergence(format!(
            "{model} theta tail {tail:e} exceeds tol"
        )));
    }
    Ok((value, tail, shells.len()))
}

fn model_first_count(model: &LatticeModel) -> u64 {
    match model {
        LatticeModel::Zn(n) => 2 * *n as u64,
        LatticeModel::A2 => 6,
        LatticeModel::D4 => 24,
        LatticeModel::E8 => 240,
        LatticeModel::Leech => 196560,
    }
}
