//! Positive zeros `λ_1 < λ_2 < ...` of `J_ν`.
//!
//! Starting values come from McMahon's expansion when the order is small or
//! the index is large compared with the order, and otherwise from the
//! uniform (Airy-type) map `λ_m ≈ ν z(ζ)`, `ζ = ν^{-2/3} a_m`. Each start is
//! polished by Newton's method on `J_ν`; if Newton wanders, the zero is
//! bracketed by a sign scan and bisected.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::airy::airy_zero;
use crate::specfun::bessel::{bessel_j, bessel_j_pair, bessel_j_with_derivative};

const NEWTON_CAP: usize = 50;

/// First zeros of `J_order`, each paired with `J_{order-1}` at the zero.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselZeroTable {
    pub order: f64,
    pub zeros: Vec<f64>,
    pub companion_values: Vec<f64>,
}

impl BesselZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Append zeros until the table holds `count` of them.
    pub fn extend_to(&mut self, count: usize) -> Result<()> {
        self.zeros.reserve(count.saturating_sub(self.zeros.len()));
        while self.zeros.len() < count {
            let m = self.zeros.len() + 1;
            let prev = self.zeros.last().copied();
            let z = bessel_zero(self.order, m, prev)?;
            let (_, jm1) = bessel_j_pair(self.order, z)?;
            if jm1 == 0.0 {
                return Err(Error::ZeroNotConverged {
                    order: self.order,
                    index: m,
                });
            }
            if let Some(&last) = self.companion_values.last() {
                if (last > 0.0) == (jm1 > 0.0) {
                    return Err(Error::ZeroNotConverged {
                        order: self.order,
                        index: m,
                    });
                }
            }
            self.zeros.push(z);
            self.companion_values.push(jm1);
        }
        Ok(())
    }
}

/// The first `count` positive zeros of `J_order`.
pub fn bessel_zeros(order: f64, count: usize) -> Result<BesselZeroTable> {
    if !(order >= 0.0) || !order.is_finite() {
        return Err(Error::domain(format!(
            "Bessel order must be >= 0, got {order}"
        )));
    }
    if count == 0 {
        return Err(Error::domain("zero count must be >= 1"));
    }
    let mut table = BesselZeroTable {
        order,
        zeros: Vec::new(),
        companion_values: Vec::new(),
    };
    table.extend_to(count)?;
    Ok(table)
}

/// McMahon's large-zero expansion.
pub fn mcmahon_guess(order: f64, m: usize) -> f64 {
    let mu = 4.0 * order * order;
    let b = (m as f64 + 0.5 * order - 0.25) * PI;
    let e = 1.0 / (8.0 * b);
    let e2 = e * e;
    b - e * (mu - 1.0)
        - 4.0 * e * e2 * (mu - 1.0) * (7.0 * mu - 31.0) / 3.0
        - 32.0 * e * e2 * e2 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / 15.0
}

/// Root `z > 1` of `sqrt(z^2-1) - arcsec z = (2/3)(-ζ)^{3/2}` for `ζ < 0`.
pub fn uniform_z(zeta: f64) -> f64 {
    let w = 2.0 / 3.0 * (-zeta).powf(1.5);
    let g = |z: f64| (z * z - 1.0).sqrt() - (1.0 / z).acos();
    // g is increasing and convex on (1, ∞) with g(z) >= z - 1/z - π/2, so
    // Newton from this start stays to the right of the root and converges.
    let mut z = w + 0.5 * PI + 1.0;
    for _ in 0..100 {
        let step = (g(z) - w) * z / (z * z - 1.0).sqrt();
        z -= step;
        if step.abs() <= 1e-15 * z {
            break;
        }
    }
    z
}

/// Uniform-asymptotic start `ν z(ν^{-2/3} a_m)`.
pub fn uniform_guess(order: f64, m: usize) -> Result<f64> {
    let a = airy_zero(m)?.value;
    let zeta = order.powf(-2.0 / 3.0) * a;
    Ok(order * uniform_z(zeta))
}

fn initial_guess(order: f64, m: usize) -> Result<f64> {
    if order < 1.0 || m as f64 > 8.0 * order {
        Ok(mcmahon_guess(order, m))
    } else {
        uniform_guess(order, m)
    }
}

/// The `m`-th positive zero of `J_order`; `prev` is the `(m-1)`-th if known.
pub fn bessel_zero(order: f64, m: usize, prev: Option<f64>) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("zero index starts at 1"));
    }
    let lower = match prev {
        Some(p) => p + 1.0,
        None if m == 1 => order,
        None => 0.0,
    };
    let guess = initial_guess(order, m)?.max(lower + 0.5);
    if let Some(z) = newton(order, guess) {
        if z > lower && (prev.is_some() || m == 1) {
            return Ok(z);
        }
    }
    // Fallback: bracket by scanning upward from the previous zero.
    let start = match prev {
        Some(p) => p,
        None if m == 1 => order,
        None => return Err(Error::ZeroNotConverged { order, index: m }),
    };
    bracket_and_bisect(order, start).ok_or(Error::ZeroNotConverged { order, index: m })
}

fn newton(order: f64, mut x: f64) -> Option<f64> {
    for _ in 0..NEWTON_CAP {
        let (j, dj) = bessel_j_with_derivative(order, x).ok()?;
        if dj == 0.0 {
            return None;
        }
        let step = j / dj;
        if !step.is_finite() || step.abs() > 2.0 {
            return None;
        }
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x {
            return Some(x);
        }
    }
    None
}

fn bracket_and_bisect(order: f64, start: f64) -> Option<f64> {
    // Consecutive zeros are more than 3 apart, so a step of 0.5 cannot
    // jump over two sign changes.
    let step = 0.5;
    let mut a = start + 1e-3 * start.max(1.0);
    let mut fa = bessel_j(order, a).ok()?;
    for _ in 0..100_000 {
        let b = a + step;
        let fb = bessel_j(order, b).ok()?;
        if (fa > 0.0) != (fb > 0.0) {
            let (mut lo, mut hi) = (a, b);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = bessel_j(order, mid).ok()?;
                if (fm > 0.0) == (fa > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if hi - lo <= 2.0 * f64::EPSILON * hi {
                    break;
                }
            }
            let mid = 0.5 * (lo + hi);
            return Some(newton(order, mid).unwrap_or(mid));
        }
        a = b;
        fa = fb;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (ν, [λ_1, λ_2, λ_5, λ_20], [J_{ν-1} at the same zeros]) from a 50-digit evaluation.
    const REFERENCE: &[(f64, [f64; 4], [f64; 4])] = &[
        (
            0.0,
            [
                2.4048255576957727686,
                5.5200781102863106496,
                14.930917708487785948,
                62.048469190227169883,
            ],
            [
                -0.51914749728946678814,
                0.34026480655836814856,
                -0.20654643307799602683,
                0.1012934989339432524,
            ],
        ),
        (
            1.0,
            [
                3.8317059702075123156,
                7.0155866698156187535,
                16.470630050877632813,
                63.611356698481232631,
            ],
            [
                -0.4027593957025529721,
                0.30011575252613256321,
                -0.19646537146865718288,
                0.10003514681152326174,
            ],
        ),
        (
            2.5,
            [
                5.7634591968945497914,
                9.0950113304763551563,
                18.689036355362822202,
                65.927941502958645068,
            ],
            [
                -0.31710584016530478247,
                0.25973298352016781154,
                -0.1837695662720638131,
                0.098232540142740237834,
            ],
        ),
        (
            10.0,
            [
                14.475500686554541238,
                18.433463666966582642,
                28.887375063530457027,
                77.106734246861295048,
            ],
            [
                -0.17922250534903781816,
                0.17051585591149893169,
                -0.14381266993262483718,
                0.090480988396933157255,
            ],
        ),
        (
            50.0,
            [
                57.116899160119174119,
                62.807698764835360934,
                76.437072182667947468,
                130.91815372195215855,
            ],
            [
                -0.073776259141736958379,
                0.07840656400705835121,
                -0.079382500118023970298,
                0.067038801292398404543,
            ],
        ),
        (
            124.5,
            [
                133.97324286719905058,
                141.33294182088706097,
                158.36359719266594035,
                221.61978137837506029,
            ],
            [
                -0.04210724494356563524,
                0.046223476638511427346,
                -0.049851613855602230671,
                0.048749365436251464863,
            ],
        ),
        (
            250.0,
            [
                261.85451450578864658,
                270.94067105844933499,
                291.60998875137850501,
                365.24361272058500475,
            ],
            [
                -0.027029905067213196636,
                0.030128995129550346782,
                -0.033529403582191573101,
                0.035647355679036417103,
            ],
        ),
    ];

    #[test]
    fn zeros_and_companions_match_reference() {
        for (nu, zs, cs) in REFERENCE {
            let t = bessel_zeros(*nu, 20).unwrap();
            for (k, &m) in [1usize, 2, 5, 20].iter().enumerate() {
                let z = t.zeros[m - 1];
                assert!(
                    (z - zs[k]).abs() <= 1e-12 * zs[k],
                    "nu={nu} m={m}: {z} vs {}",
                    zs[k]
                );
                let c = t.companion_values[m - 1];
                assert!(
                    ((c - cs[k]) / cs[k]).abs() < 1e-10,
                    "nu={nu} m={m}: {c} vs {}",
                    cs[k]
                );
            }
        }
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        let t = bessel_zeros(0.5, 3).unwrap();
        for (m, z) in t.zeros.iter().enumerate() {
            assert!((z - (m + 1) as f64 * PI).abs() < 1e-13);
        }
        // J_{-1/2}(mπ) = sqrt(2/(π·mπ)) cos(mπ)
        for (m, c) in t.companion_values.iter().enumerate() {
            let m = (m + 1) as f64;
            let want = (2.0 / (PI * m * PI)).sqrt() * (m * PI).cos();
            assert!((c - want).abs() < 1e-14);
        }
    }

    /// Series-evaluated J_n for integer n, used as an independent bisection oracle.
    fn series_j(n: u32, x: f64) -> f64 {
        let mut term = (0.5 * x).powi(n as i32) / (1..=n).map(|k| k as f64).product::<f64>();
        let mut sum = term;
        for k in 1..80 {
            let k = k as f64;
            term *= -(x * x / 4.0) / (k * (k + n as f64));
            sum += term;
        }
        sum
    }

    fn bisect_series(n: u32, mut a: f64, mut b: f64) -> f64 {
        let fa = series_j(n, a);
        for _ in 0..100 {
            let mid = 0.5 * (a + b);
            if (series_j(n, mid) > 0.0) == (fa > 0.0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn first_zeros_against_bisection() {
        let j0 = bisect_series(0, 2.0, 3.0);
        let j1 = bisect_series(1, 3.0, 4.0);
        assert!((j0 - 2.40482556).abs() < 5e-9);
        assert!((j1 - 3.83170597).abs() < 5e-9);
        assert!((bessel_zeros(0.0, 1).unwrap().zeros[0] - j0).abs() < 1e-13);
        assert!((bessel_zeros(1.0, 1).unwrap().zeros[0] - j1).abs() < 1e-13);
    }

    #[test]
    fn interlacing_small_orders() {
        for k in 0..=24 {
            let nu = 0.5 * k as f64;
            let a = bessel_zeros(nu, 51).unwrap();
            let b = bessel_zeros(nu + 1.0, 50).unwrap();
            for m in 0..50 {
                assert!(
                    a.zeros[m] < b.zeros[m] && b.zeros[m] < a.zeros[m + 1],
                    "nu={nu} m={m}"
                );
            }
        }
    }

    #[test]
    fn residuals_and_large_argument_law() {
        for &nu in &[0.0, 2.5, 5.0] {
            let t = bessel_zeros(nu, 2000).unwrap();
            for (m, &z) in t.zeros.iter().enumerate().step_by(97) {
                assert!(bessel_j(nu, z).unwrap().abs() <= 1e-10, "nu={nu} m={m}");
            }
            let z = t.zeros[1999];
            let c = t.companion_values[1999];
            assert!((z * c * c / (2.0 / PI) - 1.0).abs() < 0.01);
        }
    }

    #[test]
    fn large_order_residuals() {
        let t = bessel_zeros(250.0, 400).unwrap();
        assert!(t.zeros[0] > 250.0);
        for w in t.zeros.windows(2) {
            assert!(w[1] - w[0] > 3.0);
        }
        for &z in t.zeros.iter().step_by(13) {
            assert!(bessel_j(250.0, z).unwrap().abs() <= 1e-10);
        }
    }

    #[test]
    fn uniform_map_inverts() {
        for &zeta in &[-0.01, -0.5, -3.0, -40.0] {
            let z = uniform_z(zeta);
            let lhs = (z * z - 1.0).sqrt() - (1.0 / z).acos();
            assert!((lhs - 2.0 / 3.0 * (-zeta).powf(1.5)).abs() < 1e-12);
        }
    }

    #[test]
    fn errors() {
        assert!(bessel_zeros(-1.0, 3).is_err());
        assert!(bessel_zeros(1.0, 0).is_err());
    }
}
