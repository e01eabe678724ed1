//! Lower and upper bounds on Gaussian energy at fixed density.

pub mod asymptotics;
pub mod closed;
pub mod params;
pub mod powerlaw;
pub mod result;
pub mod series;

pub use asymptotics::{
    asymptotic_rate, condexp_factor_rate, condexp_factor_rate_without_log_term, gaussian_profile,
    profile_agreement, AsymptoticProfile, ProfileAgreement, RatePair, CONDEXP_THRESHOLD,
    SHARP_THRESHOLD,
};
pub use closed::{
    conditional_expectation_bound, dual_cap, expectation_bound, general_truncated_expectation,
};
pub use params::BoundParams;
pub use powerlaw::{
    inverse_power_lower_bound, inverse_power_upper_asymptotic, inverse_power_upper_bound,
};
pub use result::{BoundKind, BoundResult};
pub use series::{
    main_lower_bound, main_lower_bound_with_table, normalized_main_bound, DEFAULT_TOL,
};
