use thiserror::Error;

/// Failures reported by the solvers and evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The truncated linear system is numerically rank deficient.
    #[error("singular system: condition estimate {cond:.3e} exceeds {limit:.1e}")]
    Singular { cond: f64, limit: f64 },

    /// The exponent equation has no sign change on (0,1).
    #[error("no root bracket for the exponent equation on (0,1)")]
    NoBracket,

    /// A material or configuration value is degenerate.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// The request needs something this library deliberately does not provide.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
