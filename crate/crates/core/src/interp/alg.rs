//! The finite partial-fraction identity behind the product basis
//!
//! `1/(z - u_0) = Σ_{k=0}^{M} 1/(z - u_k) ∏_{j=k+1}^{M} (1 - u_0/u_j)/(1 - z/u_j)`.

use num_complex::Complex;

use crate::bounds::params::BoundParams;
use crate::bounds::series::zero_table_for;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// How the nodes `u_1, ..., u_M` are generated.
#[derive(Clone, Debug, PartialEq)]
pub enum NodeSeed {
    /// `u_j = -scale · j^2`.
    Squares { scale: f64 },
    /// The doubled interpolation nodes `-(λ_j/(πr))^2` of the auxiliary
    /// function for these parameters.
    Interpolation(BoundParams),
}

impl NodeSeed {
    /// The first `m` nodes.
    pub fn nodes(&self, m: usize) -> Result<Vec<f64>> {
        match *self {
            NodeSeed::Squares { scale } => {
                if !(scale > 0.0) || !scale.is_finite() {
                    return Err(Error::domain(format!(
                        "node scale must be positive, got {scale}"
                    )));
                }
                Ok((1..=m).map(|j| -scale * (j * j) as f64).collect())
            }
            NodeSeed::Interpolation(p) => {
                let mut table = zero_table_for(p.n);
                table.extend_to(m.div_ceil(2))?;
                let s = std::f64::consts::PI * p.r;
                Ok((0..m).map(|i| -(table.zeros[i / 2] / s).powi(2)).collect())
            }
        }
    }
}

fn modulus<T: Real>(c: Complex<T>) -> T {
    (c.re * c.re + c.im * c.im).sqrt()
}

/// `|1/(z - u_0) - Σ_k ...|` for explicit nodes, evaluated in `Complex<T>`.
pub fn alg_identity_residual_with_nodes<T: Real>(
    u0: Complex<T>,
    z: Complex<T>,
    nodes: &[T],
) -> Result<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    if z == u0 {
        return Err(Error::DivisionByZero("z coincides with u_0".into()));
    }
    for (j, &u) in nodes.iter().enumerate() {
        if u == T::zero() {
            return Err(Error::DivisionByZero(format!("node u_{} is zero", j + 1)));
        }
        if z == Complex::new(u, T::zero()) {
            return Err(Error::DivisionByZero(format!(
                "z coincides with node u_{}",
                j + 1
            )));
        }
    }
    // Sum from k = M down, carrying ∏_{j>k} (1 - u_0/u_j)/(1 - z/u_j).
    let mut prod = one;
    let mut sum = zero;
    for &u in nodes.iter().rev() {
        let uc = Complex::new(u, T::zero());
        sum = sum + prod / (z - uc);
        prod = prod * (one - u0 / uc) / (one - z / uc);
    }
    sum = sum + prod / (z - u0);
    Ok(modulus(one / (z - u0) - sum))
}

/// Residual of the identity with `M` nodes from `node_seed`, in `f64`.
pub fn alg_identity_residual(
    u0: Complex<f64>,
    z: Complex<f64>,
    node_seed: &NodeSeed,
    m: usize,
) -> Result<f64> {
    let nodes = node_seed.nodes(m)?;
    alg_identity_residual_with_nodes(u0, z, &nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleDouble;
    use std::f64::consts::PI;

    #[test]
    fn empty_product_is_exact() {
        let r = alg_identity_residual(
            Complex::new(-0.5, 0.0),
            Complex::new(1.0, 1.0),
            &NodeSeed::Squares { scale: 1.0 },
            0,
        )
        .unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn thirty_square_nodes() {
        let u0 = Complex::new(-0.5, 0.0);
        let z = Complex::new(1.0, 1.0);
        let r = alg_identity_residual(u0, z, &NodeSeed::Squares { scale: 1.0 }, 30).unwrap();
        let scale = 1.0 / (z - u0).norm();
        assert!(r <= 1e-12 * scale, "{r}");
    }

    #[test]
    fn doubled_interpolation_nodes() {
        let seed = NodeSeed::Interpolation(BoundParams::new(2, PI, 1.0).unwrap());
        let u0 = Complex::new(0.0, 0.0);
        // Away from the nodes; for z among them the partial products grow
        // large and the sum cancels, as with p_M itself.
        for z in [
            Complex::new(-3.3, 0.2),
            Complex::new(2.0, -5.0),
            Complex::new(10.0, 10.0),
        ] {
            let r = alg_identity_residual(u0, z, &seed, 200).unwrap();
            assert!(r <= 1e-12 / (z - u0).norm(), "{z}: {r}");
        }
    }

    #[test]
    fn double_double_residual() {
        let nodes: Vec<DoubleDouble> = (1..=40)
            .map(|j| DoubleDouble::from(-((j * j) as f64)))
            .collect();
        let u0 = Complex::new(DoubleDouble::from(-0.5), DoubleDouble::from(0.0));
        let z = Complex::new(DoubleDouble::from(1.0), DoubleDouble::from(1.0));
        let r = alg_identity_residual_with_nodes(u0, z, &nodes).unwrap();
        assert!(r.to_f64() < 1e-28, "{r:?}");
    }

    #[test]
    fn collision_is_an_error() {
        let z = Complex::new(-25.0, 0.0);
        let e = alg_identity_residual(
            Complex::new(-0.5, 0.0),
            z,
            &NodeSeed::Squares { scale: 1.0 },
            10,
        )
        .unwrap_err();
        assert!(matches!(e, Error::DivisionByZero(_)));
    }
}
