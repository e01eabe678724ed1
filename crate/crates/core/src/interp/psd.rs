//! Sampling test for positive definiteness of the peeled Bessel kernels
//!
//! `K_k(d) = J_ν(d) / (d^ν ∏_{i<=k} (1 - d^2/λ_i^2))`, `ν = n/2 - 1`,
//!
//! on `R^n`, where `λ_i` are the positive zeros of `J_ν`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::specfun::bessel::{bessel_j, bessel_j_with_derivative};
use crate::specfun::gamma::log_gamma;
use crate::specfun::zeros::bessel_zeros;

/// Half-width of the window around `λ_i` where the removable singularity is
/// filled in from the local expansion.
const NEAR_ZERO: f64 = 1e-4;

/// Below this distance `J_ν(d)/d^ν` is summed from its power series.
const SERIES_CUTOFF: f64 = 2.0;

pub const MAX_PEELED: usize = 10;
pub const MAX_POINTS: usize = 12;
pub const MAX_DIM: u32 = 8;

/// `K_k` for one `(n, k)`, holding `λ_1..λ_{k+1}`.
#[derive(Clone, Debug)]
pub struct PeeledKernel {
    pub n: u32,
    pub k: usize,
    nu: f64,
    pub zeros: Vec<f64>,
    /// `g'(λ_i)` for `g(d) = J_ν(d)/d^ν`.
    slopes: Vec<f64>,
}

impl PeeledKernel {
    pub fn new(n: u32, k: usize) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::domain(format!(
                "dimension must lie in 1..={MAX_DIM}, got {n}"
            )));
        }
        if k > MAX_PEELED {
            return Err(Error::domain(format!(
                "at most {MAX_PEELED} factors can be peeled, got {k}"
            )));
        }
        let nu = 0.5 * n as f64 - 1.0;
        let (zeros, slopes) = if n == 1 {
            // g(d) = sqrt(2/π) cos d
            let c = (2.0 / PI).sqrt();
            (1..=k + 1)
                .map(|i| {
                    let z = (i as f64 - 0.5) * PI;
                    (z, -c * z.sin())
                })
                .unzip()
        } else {
            let table = bessel_zeros(nu, k + 1)?;
            let mut slopes = Vec::with_capacity(k + 1);
            for &z in &table.zeros {
                let (_, dj) = bessel_j_with_derivative(nu, z)?;
                slopes.push(dj * z.powf(-nu));
            }
            (table.zeros, slopes)
        };
        Ok(PeeledKernel {
            n,
            k,
            nu,
            zeros,
            slopes,
        })
    }

    /// `g(d) = J_ν(d)/d^ν`, continuous at `0`.
    fn g(&self, d: f64) -> Result<f64> {
        if self.n == 1 {
            return Ok((2.0 / PI).sqrt() * d.cos());
        }
        if d < SERIES_CUTOFF {
            // Σ_j (-d^2/4)^j / (2^ν j! Γ(ν+j+1))
            let q = -0.25 * d * d;
            let mut term = (-self.nu * std::f64::consts::LN_2 - log_gamma(self.nu + 1.0)).exp();
            let mut sum = term;
            for j in 1..40 {
                term *= q / (j as f64 * (self.nu + j as f64));
                sum += term;
                if term.abs() < 1e-18 * sum.abs() {
                    break;
                }
            }
            return Ok(sum);
        }
        Ok(bessel_j(self.nu, d)? / d.powf(self.nu))
    }

    /// The value at `d = 0`, `1/(2^ν Γ(ν+1))`.
    pub fn at_origin(&self) -> f64 {
        (-self.nu * std::f64::consts::LN_2 - log_gamma(self.nu + 1.0)).exp()
    }

    /// `K_k(d)` for `d >= 0`.
    pub fn eval(&self, d: f64) -> Result<f64> {
        let near = self.zeros[..self.k]
            .iter()
            .position(|&z| (d - z).abs() < NEAR_ZERO);
        let mut denom = 1.0;
        for (i, &z) in self.zeros[..self.k].iter().enumerate() {
            if Some(i) != near {
                denom *= 1.0 - d * d / (z * z);
            }
        }
        let num = match near {
            None => self.g(d)? / denom,
            Some(i) => {
                // g(d)/(d - λ) ≈ g'(λ)(1 - (2ν+1)(d - λ)/(2λ)) from the ODE
                // g'' + (2ν+1)/d g' + g = 0 at a zero of g.
                let z = self.zeros[i];
                let ratio = self.slopes[i] * (1.0 - (2.0 * self.nu + 1.0) * (d - z) / (2.0 * z));
                ratio * (-z * z / (d + z)) / denom
            }
        };
        Ok(num)
    }
}

/// Smallest Gram-matrix eigenvalue seen, with the diagonal `K_k(0)` as scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsdSample {
    pub min_eigenvalue: f64,
    pub diagonal: f64,
}

/// Gram matrices of `K_k` at `num_points` uniform points in a cube of side
/// `4λ_{k+1}`, over `num_trials` seeded trials.
pub fn psd_sample_check(
    n: u32,
    k: usize,
    num_points: usize,
    num_trials: usize,
    seed: u64,
) -> Result<PsdSample> {
    if num_points == 0 || num_points > MAX_POINTS {
        return Err(Error::domain(format!(
            "num_points must lie in 1..={MAX_POINTS}, got {num_points}"
        )));
    }
    if num_trials == 0 {
        return Err(Error::domain("num_trials must be >= 1"));
    }
    let kernel = PeeledKernel::new(n, k)?;
    let half = 2.0 * kernel.zeros[k];
    let dim = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_eig = f64::INFINITY;
    let mut points = vec![0.0; num_points * dim];
    for _ in 0..num_trials {
        for x in points.iter_mut() {
            *x = rng.gen_range(-half..half);
        }
        let mut gram = DMatrix::zeros(num_points, num_points);
        for a in 0..num_points {
            gram[(a, a)] = kernel.at_origin();
            for b in 0..a {
                let d = points[a * dim..(a + 1) * dim]
                    .iter()
                    .zip(&points[b * dim..(b + 1) * dim])
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
                    .sqrt();
                let v = kernel.eval(d)?;
                gram[(a, b)] = v;
                gram[(b, a)] = v;
            }
        }
        let eig = SymmetricEigen::new(gram).eigenvalues;
        min_eig = min_eig.min(eig.min());
    }
    Ok(PsdSample {
        min_eigenvalue: min_eig,
        diagonal: kernel.at_origin(),
    })
}
