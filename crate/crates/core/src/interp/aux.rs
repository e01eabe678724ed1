//! The truncated auxiliary function `p_M(-|x|^2)`.

use crate::bounds::params::BoundParams;
use crate::bounds::series::zero_table_for;
use crate::error::{Error, Result};
use crate::scalar::{DoubleDouble, Real};

use super::newton::{
    eval_product_basis, eval_product_basis_with_derivative, product_basis_coefficients,
};

/// Working precision of the divided-difference table and of evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    Standard,
    Extended,
}

/// Largest `M` built in binary64; larger tables are promoted to double-double.
pub const STANDARD_MAX_M: usize = 60;

/// Largest supported truncation level.
pub const MAX_M: usize = 400;

/// Hermite interpolant `p_M` of `z -> e^{αz}` at the doubled nodes
/// `u_{2j-1} = u_{2j} = -(λ_j/(πr))^2`, stored in the product basis
/// `p_M(u) = Σ_{k=1}^{M} H_k ∏_{j=k+1}^{M} (1 - u/u_j)`.
#[derive(Clone, Debug)]
pub struct AuxFunction {
    pub params: BoundParams,
    /// Truncation level `M` (number of nodes counted with multiplicity).
    pub m: usize,
    /// `u_1 >= u_2 >= ... >= u_M`, each value twice.
    pub nodes: Vec<f64>,
    /// `H_1, ..., H_M`, rounded to `f64`.
    pub coeffs: Vec<f64>,
    /// Precision actually used (may be promoted from the request).
    pub precision: Precision,
    /// `λ_1, ..., λ_{M/2}`, zeros of `J_{n/2}`.
    pub zeros: Vec<f64>,
    /// `J_{n/2-1}(λ_j)`.
    pub companions: Vec<f64>,
    nodes_dd: Vec<DoubleDouble>,
    coeffs_dd: Vec<DoubleDouble>,
}

/// Builds `p_M`. `Standard` is promoted to `Extended` above
/// [`STANDARD_MAX_M`].
pub fn build_aux(params: &BoundParams, m: usize, precision: Precision) -> Result<AuxFunction> {
    if m < 2 || m > MAX_M || m % 2 != 0 {
        return Err(Error::domain(format!(
            "M must be even with 2 <= M <= {MAX_M}, got {m}"
        )));
    }
    let precision = if m > STANDARD_MAX_M {
        Precision::Extended
    } else {
        precision
    };
    let mut table = zero_table_for(params.n);
    table.extend_to(m / 2)?;
    let pi_r = DoubleDouble::PI * DoubleDouble::from(params.r);
    let nodes_dd: Vec<DoubleDouble> = table.zeros[..m / 2]
        .iter()
        .flat_map(|&l| {
            let x = DoubleDouble::from(l) / pi_r;
            let u = -(x * x);
            [u, u]
        })
        .collect();
    let nodes: Vec<f64> = nodes_dd.iter().map(|u| u.to_f64()).collect();
    let alpha = params.alpha;
    let coeffs_dd = match precision {
        Precision::Standard => product_basis_coefficients(
            &nodes,
            |u| (alpha * u).exp(),
            |u| alpha * (alpha * u).exp(),
        )?
        .into_iter()
        .map(DoubleDouble::from)
        .collect::<Vec<_>>(),
        Precision::Extended => {
            let a = DoubleDouble::from(alpha);
            product_basis_coefficients(&nodes_dd, |u| (a * u).exp(), |u| a * (a * u).exp())?
        }
    };
    let coeffs: Vec<f64> = coeffs_dd.iter().map(|c| c.to_f64()).collect();
    // Every H_k is nonnegative for an absolutely monotonic function; a
    // clearly negative one means the table has lost its digits.
    let eps = match precision {
        Precision::Standard => f64::EPSILON,
        Precision::Extended => DoubleDouble::EPSILON,
    };
    let scale = coeffs.iter().fold(1.0f64, |a, &c| a.max(c.abs()));
    if let Some((k, c)) = coeffs
        .iter()
        .enumerate()
        .find(|(_, &c)| c < -64.0 * eps * scale)
    {
        return Err(Error::Precision(format!(
            "coefficient H_{} = {c:e} is negative; the table has lost its significant digits",
            k + 1
        )));
    }
    Ok(AuxFunction {
        params: *params,
        m,
        nodes,
        coeffs,
        precision,
        zeros: table.zeros[..m / 2].to_vec(),
        companions: table.companion_values[..m / 2].to_vec(),
        nodes_dd,
        coeffs_dd,
    })
}

impl AuxFunction {
    /// `p_M(u)`.
    pub fn eval_u(&self, u: f64) -> f64 {
        match self.precision {
            Precision::Standard => eval_product_basis(&self.coeffs, &self.nodes, u),
            Precision::Extended => {
                eval_product_basis(&self.coeffs_dd, &self.nodes_dd, DoubleDouble::from(u)).to_f64()
            }
        }
    }

    /// `p_M(u)` and `p_M'(u)`.
    pub fn eval_u_with_derivative(&self, u: f64) -> (f64, f64) {
        match self.precision {
            Precision::Standard => eval_product_basis_with_derivative(&self.coeffs, &self.nodes, u),
            Precision::Extended => {
                let (v, d) = eval_product_basis_with_derivative(
                    &self.coeffs_dd,
                    &self.nodes_dd,
                    DoubleDouble::from(u),
                );
                (v.to_f64(), d.to_f64())
            }
        }
    }

    /// Interpolation radii `λ_j/(πr)`, `j = 1..M/2`.
    pub fn node_radii(&self) -> Vec<f64> {
        self.nodes.iter().step_by(2).map(|u| (-u).sqrt()).collect()
    }

    /// `ln f[u_k, ..., u_M]`, the Newton divided differences behind `H_k`,
    /// recovered as `ln H_k - Σ_{j>k} ln(-u_j)`; `-∞` where `H_k` is zero.
    pub fn log_divided_differences(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.m];
        let mut acc = 0.0;
        for k in (0..self.m).rev() {
            out[k] = self.coeffs[k].ln() - acc;
            acc += (-self.nodes[k]).ln();
        }
        out
    }

    /// `(min, max)` of `|u_j| / j^2` over the nodes.
    pub fn node_growth(&self) -> (f64, f64) {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, u)| -u / ((i + 1) as f64).powi(2))
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// The potential `e^{-αt^2}`.
    pub fn potential(&self, t: f64) -> f64 {
        (-self.params.alpha * t * t).exp()
    }
}

/// `p_M(-t^2)`, the truncated stand-in for `h` at radius `t`.
pub fn aux_eval(h: &AuxFunction, t: f64) -> f64 {
    h.eval_u(-t * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn aux(n: u32, m: usize, prec: Precision) -> AuxFunction {
        build_aux(&BoundParams::new(n, PI, 1.0).unwrap(), m, prec).unwrap()
    }

    #[test]
    fn two_nodes_give_the_tangent_line() {
        let h = aux(3, 2, Precision::Standard);
        let u1 = h.nodes[0];
        for &u in &[-3.0, u1, -0.1, 0.0] {
            let want = (PI * u1).exp() * (1.0 + PI * (u - u1));
            assert!((h.eval_u(u) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn coefficients_nonnegative_at_40() {
        let h = aux(2, 40, Precision::Standard);
        assert_eq!(h.precision, Precision::Standard);
        assert!(h.coeffs.iter().all(|&c| c >= -1e-20));
    }

    #[test]
    fn promotes_large_tables() {
        let h = aux(2, 62, Precision::Standard);
        assert_eq!(h.precision, Precision::Extended);
    }

    #[test]
    fn interpolates_value_and_slope() {
        for prec in [Precision::Standard, Precision::Extended] {
            let h = aux(4, 40, prec);
            for j in (0..h.m).step_by(2) {
                let u = h.nodes[j];
                let f = (PI * u).exp();
                if f < 1e-5 {
                    break;
                }
                let (v, d) = h.eval_u_with_derivative(u);
                assert!((v - f).abs() <= 1e-10 * f, "j={j}");
                assert!((d - PI * f).abs() <= 1e-10 * f, "j={j}");
            }
        }
    }

    #[test]
    fn extended_residuals_reach_deeper() {
        let h = aux(2, 100, Precision::Extended);
        let mut checked = 0;
        for j in (0..h.m).step_by(2) {
            let u = h.nodes[j];
            let f = (PI * u).exp();
            if f < 1e-20 {
                break;
            }
            assert!((h.eval_u(u) - f).abs() <= 1e-10 * f, "j={j}");
            checked += 1;
        }
        assert!(checked >= 4);
    }

    #[test]
    fn h0_regressions() {
        // p_60(0) and p_200(0) for n=2, α=π, ρ=1, cross-checked against a
        // 300-digit evaluation of the same table.
        let v = aux_eval(&aux(2, 60, Precision::Extended), 0.0);
        assert!((v - 0.394753583591076).abs() < 1e-14, "{v}");
        let v = aux_eval(&aux(2, 200, Precision::Extended), 0.0);
        assert!((v - 0.41202585801493448).abs() < 1e-14, "{v}");
    }

    #[test]
    fn nodes_grow_quadratically() {
        let h = aux(5, 200, Precision::Extended);
        let (lo, hi) = h.node_growth();
        assert!(lo > 0.0 && hi / lo < 20.0, "{lo} {hi}");
        // λ_j ~ jπ, so |u_{2j}| ~ (2j)^2 / (4r^2)
        let r = h.params.r;
        let last = -h.nodes[h.m - 1] / (h.m as f64).powi(2);
        assert!(
            (last * 4.0 * r * r - 1.0).abs() < 0.03,
            "{}",
            last * 4.0 * r * r
        );
        let dd = h.log_divided_differences();
        assert!(dd.iter().take(40).all(|v| v.is_finite()));
    }

    #[test]
    fn rejects_odd_or_large_m() {
        let p = BoundParams::new(2, PI, 1.0).unwrap();
        assert!(build_aux(&p, 3, Precision::Extended).is_err());
        assert!(build_aux(&p, 0, Precision::Extended).is_err());
        assert!(build_aux(&p, 402, Precision::Extended).is_err());
    }
}
