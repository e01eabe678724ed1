use std::f64::consts::PI;

use gcm_core::bounds::*;
use gcm_core::interp::lp::{faithful_radius, lp_value_by_radial_quadrature, lp_value_by_summation};
use gcm_core::interp::*;
use num_complex::Complex;

const ALPHAS: [f64; 3] = [PI / 2.0, PI, 2.0 * PI];
const RHOS: [f64; 3] = [0.5, 1.0, 2.0];

fn aux(n: u32, alpha: f64, rho: f64, m: usize) -> AuxFunction {
    build_aux(
        &BoundParams::new(n, alpha, rho).unwrap(),
        m,
        Precision::Extended,
    )
    .unwrap()
}

#[test]
fn coefficients_are_nonnegative() {
    for n in [1, 2, 3, 5, 8] {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                for (m, prec) in [
                    (20, Precision::Standard),
                    (60, Precision::Standard),
                    (200, Precision::Extended),
                ] {
                    let h = build_aux(&BoundParams::new(n, alpha, rho).unwrap(), m, prec).unwrap();
                    let eps = match h.precision {
                        Precision::Standard => f64::EPSILON,
                        Precision::Extended => 1e-30,
                    };
                    let scale = h.coeffs.iter().fold(1.0f64, |a, &c| a.max(c));
                    assert!(
                        h.coeffs.iter().all(|&c| c >= -eps * scale),
                        "n={n} alpha={alpha} rho={rho} M={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_matches_series_bound() {
    for n in 1..=8 {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                let h = aux(n, alpha, rho, 200);
                // the radial check is loose at M = 200 for large n and α
                let lp = lp_bound_via_aux(&h, 2e-3).unwrap();
                let main = main_lower_bound(&h.params, DEFAULT_TOL).unwrap();
                let rel = (lp.value / main.value - 1.0).abs();
                assert!(rel <= 1e-6, "n={n} alpha={alpha} rho={rho}: {rel:e}");
            }
        }
    }
}

#[test]
fn table_rows_through_the_auxiliary_function() {
    for (n, printed) in [(1, 0.08643481), (2, 0.15702654)] {
        let lp = lp_bound_via_aux(&aux(n, PI, 1.0, 200), 1e-4).unwrap();
        assert!((lp.value - printed).abs() < 1e-6, "n={n}: {}", lp.value);
    }
}

#[test]
fn values_are_cauchy_in_m() {
    let vals: Vec<f64> = [50, 100, 200, 400]
        .iter()
        .map(|&m| lp_bound_via_aux(&aux(3, PI, 1.0, m), 1e-3).unwrap().value)
        .collect();
    for w in vals.windows(2) {
        assert!((w[1] - w[0]).abs() <= 1e-13 * w[0]);
    }
}

#[test]
fn radial_route_tightens_with_m() {
    for (n, alpha, rho) in [(1, PI, 1.0), (4, 2.0 * PI, 0.5), (8, 2.0 * PI, 0.5)] {
        let mut prev = f64::INFINITY;
        for m in [100, 200, 400] {
            let h = aux(n, alpha, rho, m);
            let cut = faithful_radius(&h);
            let (s, _) = lp_value_by_summation(&h, &cut).unwrap();
            let (r, _) = lp_value_by_radial_quadrature(&h, &cut).unwrap();
            let gap = ((s - r) / s).abs();
            assert!(gap < prev, "n={n} M={m}: {gap:e}");
            prev = gap;
        }
    }
}

#[test]
fn center_value_climbs_with_m() {
    // p_M(0) increases toward h(0) <= f(0) = 1
    let mut prev = 0.0;
    for m in [10, 20, 40, 60, 100, 200, 400] {
        let v = aux_eval(&aux(2, PI, 1.0, m), 0.0);
        assert!(v > prev && v < 1.0, "M={m}: {v}");
        prev = v;
    }
}

#[test]
fn minorant_scans() {
    for n in [1, 2, 4, 8] {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                let h = aux(n, alpha, rho, 200);
                let radii = h.node_radii();
                let scan = verify_minorant(&h, 0.9 * radii[radii.len() - 1], 4000).unwrap();
                assert!(
                    scan.max_violation <= 1e-8,
                    "n={n} alpha={alpha} rho={rho}: {scan:?}"
                );
                for (t, gap) in midpoint_gaps(&h, radii.len()) {
                    assert!(gap < 0.0, "n={n} alpha={alpha} rho={rho} t={t}: {gap:e}");
                }
            }
        }
    }
}

#[test]
fn interpolation_residuals_at_nodes() {
    for n in [1, 3, 6] {
        let h = aux(n, PI, 1.0, 120);
        for j in (0..h.m).step_by(2) {
            let u = h.nodes[j];
            let f = (PI * u).exp();
            if f < 1e-12 {
                break;
            }
            let (v, d) = h.eval_u_with_derivative(u);
            assert!((v - f).abs() <= 1e-10 * f, "n={n} j={j}");
            assert!((d - PI * f).abs() <= 1e-10 * f, "n={n} j={j}");
        }
    }
}

#[test]
fn peeled_kernels_sample_positive() {
    for n in 1..=8 {
        for k in 0..=5 {
            let s = psd_sample_check(n, k, 12, 100, 17 + n as u64).unwrap();
            assert!(s.min_eigenvalue >= -1e-9 * s.diagonal, "n={n} k={k}: {s:?}");
        }
    }
}

#[test]
fn summation_formula_residuals() {
    for n in 1..=32 {
        let r = bgf_residual(n, 1.0).unwrap();
        assert!(r <= 1e-6, "n={n}: {r:e}");
    }
    assert!(bgf_residual(1, 1.0).unwrap() <= 1e-8);
    assert!(bgf_residual(2, 1.0).unwrap() <= 1e-7);
}

#[test]
fn partial_fraction_identity() {
    let seeds = [
        NodeSeed::Squares { scale: 1.0 },
        NodeSeed::Squares { scale: 0.25 },
        NodeSeed::Interpolation(BoundParams::new(5, PI, 1.0).unwrap()),
    ];
    let pairs = [
        (Complex::new(-0.5, 0.0), Complex::new(1.0, 1.0)),
        (Complex::new(0.0, 0.0), Complex::new(-0.3, 2.0)),
        (Complex::new(-0.1, 0.1), Complex::new(3.0, -4.0)),
    ];
    for seed in &seeds {
        for &(u0, z) in &pairs {
            for m in [0, 1, 7, 30, 100] {
                let r = alg_identity_residual(u0, z, seed, m).unwrap();
                assert!(r <= 1e-12 / (z - u0).norm(), "{seed:?} M={m}: {r:e}");
            }
        }
    }
    let e = alg_identity_residual(
        Complex::new(-0.5, 0.0),
        Complex::new(-25.0, 0.0),
        &seeds[0],
        30,
    );
    assert!(matches!(e, Err(gcm_core::Error::DivisionByZero(_))));
}
