//! Real-order special functions in `f64`.

pub mod airy;
pub mod ball;
pub mod bessel;
pub mod gamma;
pub mod zeros;

pub use airy::{airy_zero, AiryZeroApprox};
pub use ball::{log_ball_volume, log_unit_sphere_area, radius_for_log_volume};
pub use bessel::{bessel_j, bessel_j_pair, bessel_j_with_derivative};
pub use gamma::{log_gamma, log_gamma_dd, log_reg_gamma_upper, reg_gamma_upper, try_log_gamma};
pub use zeros::{bessel_zeros, BesselZeroTable};
