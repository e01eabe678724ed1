//! Grid scans of `p_M(-t^2) - e^{-αt^2}`.

use crate::error::{Error, Result};

use super::aux::AuxFunction;

/// Smallest grid accepted by [`verify_minorant`].
pub const MIN_GRID_POINTS: usize = 1000;

/// Largest excess of `p_M` over the Gaussian on a grid, and where it occurs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinorantScan {
    pub max_violation: f64,
    pub argmax: f64,
}

/// Scans `max_t (p_M(-t^2) - e^{-αt^2})` over `grid_points` equally spaced
/// radii in `[0, t_max]`. A nonpositive result means no violation was seen.
pub fn verify_minorant(h: &AuxFunction, t_max: f64, grid_points: usize) -> Result<MinorantScan> {
    if grid_points < MIN_GRID_POINTS {
        return Err(Error::domain(format!(
            "grid needs at least {MIN_GRID_POINTS} points, got {grid_points}"
        )));
    }
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::domain(format!(
            "t_max must be positive, got {t_max}"
        )));
    }
    let step = t_max / (grid_points - 1) as f64;
    let mut best = MinorantScan {
        max_violation: f64::NEG_INFINITY,
        argmax: 0.0,
    };
    for i in 0..grid_points {
        let t = step * i as f64;
        let v = h.eval_u(-t * t) - h.potential(t);
        if v > best.max_violation {
            best = MinorantScan {
                max_violation: v,
                argmax: t,
            };
        }
    }
    Ok(best)
}

/// `p_M(-t^2) - e^{-αt^2}` at the midpoints between consecutive node radii
/// (and between `0` and the first), for the first `count` intervals.
pub fn midpoint_gaps(h: &AuxFunction, count: usize) -> Vec<(f64, f64)> {
    let radii = h.node_radii();
    let mut lo = 0.0;
    let mut out = Vec::with_capacity(count);
    for &hi in radii.iter().take(count) {
        let t = 0.5 * (lo + hi);
        out.push((t, h.eval_u(-t * t) - h.potential(t)));
        lo = hi;
    }
    out
}
