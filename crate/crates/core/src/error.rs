use thiserror::Error;

/// Failures raised by constructors and checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the legal domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operands of incompatible sizes.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    /// The eigen-solver hit its sweep cap.
    #[error("no convergence after {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
