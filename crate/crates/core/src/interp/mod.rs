//! The Hermite-interpolation auxiliary function and checks on it.

pub mod alg;
pub mod aux;
pub mod bgf;
pub mod lp;
pub mod minorant;
pub mod newton;
pub mod psd;

pub use alg::{alg_identity_residual, alg_identity_residual_with_nodes, NodeSeed};
pub use aux::{aux_eval, build_aux, AuxFunction, Precision, MAX_M, STANDARD_MAX_M};
pub use bgf::bgf_residual;
pub use lp::{faithful_radius, lp_bound_via_aux, FaithfulRadius};
pub use minorant::{midpoint_gaps, verify_minorant, MinorantScan};
pub use psd::{psd_sample_check, PeeledKernel, PsdSample};
