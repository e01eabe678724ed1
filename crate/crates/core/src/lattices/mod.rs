//! Gaussian energies of reference lattices from their theta series.

pub mod cache;
pub mod energy;
pub mod theta;

pub use cache::cached_theta_coefficients;
pub use energy::{lattice_energy, lattice_energy_with_cache, MAX_TOL};
pub use theta::{divisor_sigma, e8_counts_by_enumeration, ramanujan_tau, theta_coefficients};

use std::fmt;

use crate::error::{Error, Result};

/// A lattice in its standard (integral) presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeModel {
    /// `Z^n`, covolume 1.
    Zn(u32),
    /// Gram matrix `[[2,1],[1,2]]`, covolume `√3`.
    A2,
    /// Integer vectors with even coordinate sum, covolume 2.
    D4,
    /// Even unimodular, covolume 1.
    E8,
    /// Even unimodular without roots, covolume 1.
    Leech,
}

impl LatticeModel {
    pub fn dim(&self) -> u32 {
        match *self {
            LatticeModel::Zn(n) => n,
            LatticeModel::A2 => 2,
            LatticeModel::D4 => 4,
            LatticeModel::E8 => 8,
            LatticeModel::Leech => 24,
        }
    }

    pub fn covolume(&self) -> f64 {
        match *self {
            LatticeModel::A2 => 3f64.sqrt(),
            LatticeModel::D4 => 2.0,
            _ => 1.0,
        }
    }

    /// Smallest nonzero squared length.
    pub fn min_norm(&self) -> u64 {
        match *self {
            LatticeModel::Zn(_) => 1,
            LatticeModel::Leech => 4,
            _ => 2,
        }
    }

    /// Half the minimal distance.
    pub fn packing_radius(&self) -> f64 {
        0.5 * (self.min_norm() as f64).sqrt()
    }

    pub fn name(&self) -> String {
        match *self {
            LatticeModel::Zn(n) => format!("Z{n}"),
            LatticeModel::A2 => "A2".into(),
            LatticeModel::D4 => "D4".into(),
            LatticeModel::E8 => "E8".into(),
            LatticeModel::Leech => "Leech".into(),
        }
    }

    /// Parses `Z<n>`, `A2`, `D4`, `E8` or `Leech` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "a2" => Ok(LatticeModel::A2),
            "d4" => Ok(LatticeModel::D4),
            "e8" => Ok(LatticeModel::E8),
            "leech" | "lambda24" => Ok(LatticeModel::Leech),
            _ => {
                let n = lower
                    .strip_prefix('z')
                    .and_then(|d| d.parse::<u32>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| {
                        Error::domain(format!(
                            "unknown lattice '{s}' (expected Z<n>, A2, D4, E8, Leech)"
                        ))
                    })?;
                Ok(LatticeModel::Zn(n))
            }
        }
    }
}

impl fmt::Display for LatticeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
