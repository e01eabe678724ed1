use std::f64::consts::PI;

use gcm_core::bounds::*;
use proptest::prelude::*;

const DIMS: [u32; 9] = [1, 2, 3, 5, 8, 16, 24, 32, 64];
const ALPHAS: [f64; 8] = [0.5, 1.0, 2.0, PI, 4.0, 6.0, 8.0, 12.0];
const RHOS: [f64; 3] = [0.5, 1.0, 2.0];

fn main_bound(n: u32, alpha: f64, rho: f64) -> BoundResult {
    main_lower_bound(&BoundParams::new(n, alpha, rho).unwrap(), DEFAULT_TOL).unwrap()
}

#[test]
fn lower_bound_sits_below_expectation_and_dual_cap() {
    for &n in &DIMS {
        for &alpha in &ALPHAS {
            for &rho in &RHOS {
                let p = BoundParams::new(n, alpha, rho).unwrap();
                let lo = main_lower_bound(&p, DEFAULT_TOL).unwrap();
                let slack = 1e-12 * lo.log_value.abs().max(1.0);
                assert!(
                    lo.log_value <= expectation_bound(&p).log_value + slack,
                    "expectation: n={n} alpha={alpha} rho={rho}"
                );
                assert!(
                    lo.log_value <= dual_cap(&p).unwrap().log_value + slack,
                    "dual cap: n={n} alpha={alpha} rho={rho}"
                );
                assert!(lo.tail_bound <= 1e-10 * lo.value);
            }
        }
    }
}

#[test]
fn lower_bound_increases_with_density() {
    for &n in &DIMS {
        for &alpha in &[1.0, PI, 8.0] {
            let mut prev = f64::NEG_INFINITY;
            for &rho in &[0.25, 0.5, 1.0, 2.0, 4.0] {
                let v = main_bound(n, alpha, rho).log_value;
                assert!(v > prev, "n={n} alpha={alpha} rho={rho}");
                prev = v;
            }
        }
    }
}

#[test]
fn table_rows_in_high_dimension() {
    // Printed values are truncated to 8 decimals.
    for (n, printed) in [
        (24, 0.76270306),
        (100, 0.99321117),
        (200, 0.99991895),
        (500, 0.99999999),
    ] {
        let v = main_bound(n, PI, 1.0).value;
        assert!(v >= printed && v < printed + 1e-8, "n={n}: {v}");
    }
}

#[test]
fn normalized_bound_climbs_toward_one() {
    let mut prev = 0.0;
    for n in [24, 100, 200, 500] {
        let v = normalized_main_bound(&BoundParams::new(n, PI, 1.0).unwrap(), DEFAULT_TOL)
            .unwrap()
            .value;
        assert!(v > prev && v <= 1.0);
        prev = v;
    }
    assert!(prev > 0.999999);
}

#[test]
fn conditional_bound_regression_at_24() {
    let p = BoundParams::new(24, 4.0 * PI, 1.0).unwrap();
    let ratio = (conditional_expectation_bound(&p).unwrap().log_value
        - expectation_bound(&p).log_value)
        .exp();
    assert!(ratio > 0.0 && ratio < 1.0, "{ratio}");
}

#[test]
fn conditional_bound_rate_at_two_pi_e() {
    // The per-dimension factor tends to exp((1 - β + ln β)/2) with β = 2.
    let alpha = 2.0 * PI * std::f64::consts::E;
    let mut prev_gap = f64::INFINITY;
    for n in [64, 256, 1024, 4096] {
        let p = BoundParams::new(n, alpha, 1.0).unwrap();
        let log_ratio =
            conditional_expectation_bound(&p).unwrap().log_value - expectation_bound(&p).log_value;
        let per_dim = (log_ratio / n as f64).exp();
        let gap = (per_dim - condexp_factor_rate(alpha)).abs();
        assert!(gap < prev_gap, "n={n}");
        prev_gap = gap;
    }
    assert!(prev_gap < 2e-3);
}

#[test]
fn inverse_power_ratio_at_64() {
    let lo = inverse_power_lower_bound(64, 2.0, 1.0, 1e-8).unwrap();
    let up = inverse_power_upper_bound(64, 2.0, 1.0).unwrap();
    let ratio = lo.value / up.value;
    assert!((ratio - 0.44774).abs() < 1e-4, "{ratio}");
    assert!(ratio >= 0.8 * (2.0 / std::f64::consts::E).powi(2));
}

#[test]
fn inverse_power_sandwich() {
    for &n in &[2u32, 4, 8, 16, 24] {
        for &s in &[0.5, 1.0, 2.0, 4.0] {
            let lo = inverse_power_lower_bound(n, s, 1.0, 1e-8).unwrap();
            let up = inverse_power_upper_bound(n, s, 1.0).unwrap();
            assert!(lo.value <= up.value, "n={n} s={s}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_holds_at_random_points(n in 1u32..40, alpha in 0.3f64..15.0, rho in 0.2f64..5.0) {
        let p = BoundParams::new(n, alpha, rho).unwrap();
        let lo = main_lower_bound(&p, DEFAULT_TOL).unwrap();
        let slack = 1e-12 * lo.log_value.abs().max(1.0);
        prop_assert!(lo.log_value <= expectation_bound(&p).log_value + slack);
        prop_assert!(lo.log_value <= dual_cap(&p).unwrap().log_value + slack);
    }

    #[test]
    fn rates_are_ordered(alpha in 0.05f64..50.0) {
        let r = asymptotic_rate(alpha).unwrap();
        prop_assert!(r.lower_rate <= r.upper_rate * (1.0 + 1e-15));
        prop_assert!(r.upper_rate <= (PI / alpha).sqrt() * (1.0 + 1e-15));
    }
}
