//! Energy bounds for the Gaussian core model.

pub mod bounds;
pub mod dd;
pub mod error;
pub mod interp;
pub mod lattices;
pub mod quad;
pub mod scalar;
pub mod specfun;
pub mod suites;
pub mod sum;

pub use error::{Error, Result};
pub use scalar::{DoubleDouble, Real};
