//! Rows of the comparison table: our lower bound next to the best known
//! energy for each dimension.

use std::f64::consts::PI;
use std::path::Path;

use gcm_core::bounds::{expectation_bound, main_lower_bound, BoundParams};
use gcm_core::lattices::{lattice_energy_with_cache, LatticeModel};
use gcm_core::Result;
use rayon::prelude::*;

use crate::output::TableRow;

/// Energies of the best known configurations at `α = π, ρ = 1` that are
/// not lattices computed here. Values as published, unverified.
const LITERATURE: [(u32, f64); 6] = [
    (3, 0.23153532),
    (4, 0.28576449),
    (5, 0.34868410),
    (6, 0.38874675),
    (7, 0.42445404),
    (9, 0.49771252),
];

pub fn literature_record(n: u32) -> Option<f64> {
    LITERATURE.iter().find(|&&(d, _)| d == n).map(|&(_, v)| v)
}

/// The lattice whose energy is computed for dimension `n`, if any.
pub fn computed_lattice(n: u32) -> Option<LatticeModel> {
    match n {
        1 => Some(LatticeModel::Zn(1)),
        2 => Some(LatticeModel::A2),
        4 => Some(LatticeModel::D4),
        8 => Some(LatticeModel::E8),
        24 => Some(LatticeModel::Leech),
        _ => None,
    }
}

pub fn table_row(
    n: u32,
    alpha: f64,
    rho: f64,
    tol: f64,
    cache_dir: Option<&Path>,
) -> Result<TableRow> {
    let p = BoundParams::new(n, alpha, rho)?;
    let bound = main_lower_bound(&p, tol)?;
    if let Some(model) = computed_lattice(n) {
        let e = lattice_energy_with_cache(&model, alpha, rho, 1e-12, cache_dir)?;
        let mut label = model.name();
        if let Some(lit) = literature_record(n).filter(|_| alpha == PI && rho == 1.0) {
            label.push_str(&format!("; published {lit:.8}"));
        }
        return Ok(TableRow {
            bound,
            record: e.value,
            source: "computed",
            label,
        });
    }
    if alpha == PI && rho == 1.0 {
        if let Some(v) = literature_record(n) {
            return Ok(TableRow {
                bound,
                record: v,
                source: "literature",
                label: "published, unverified".into(),
            });
        }
    }
    let e = expectation_bound(&p);
    Ok(TableRow {
        bound,
        record: e.value,
        source: "expectation",
        label: "rho (pi/alpha)^(n/2)".into(),
    })
}

/// All rows, evaluated in parallel and returned in the order given.
pub fn table_rows(
    rows: &[u32],
    alpha: f64,
    rho: f64,
    tol: f64,
    cache_dir: Option<&Path>,
) -> Result<Vec<TableRow>> {
    rows.par_iter()
        .map(|&n| table_row(n, alpha, rho, tol, cache_dir))
        .collect()
}
