use thiserror::Error;

/// Errors produced by the numerical routines.
///
/// The CLI maps [`Error::Domain`] to exit code 2 and the convergence-type
/// variants to exit code 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no convergence: {0}")]
    Convergence(String),

    #[error("Bessel zero #{index} of order {order} did not converge")]
    ZeroNotConverged { order: f64, index: usize },

    #[error("precision loss: {0}")]
    Precision(String),

    #[error("quadrature routes disagree: series route {series}, radial route {radial} (allowed {allowed})")]
    Disagreement {
        series: f64,
        radial: f64,
        allowed: f64,
    },

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// True for the failure kinds that signal an iteration or table which
    /// could not reach its tolerance, as opposed to bad input.
    pub fn is_convergence_failure(&self) -> bool {
        matches!(
            self,
            Error::Convergence(_)
                | Error::ZeroNotConverged { .. }
                | Error::Precision(_)
                | Error::Disagreement { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
