use std::io;

use thiserror::Error;

/// Errors raised by the evaluators, the planners and the zeros loader.
#[derive(Debug, Error)]
pub enum RieszError {
    /// An argument lies outside the domain where the requested quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller-supplied truncation is too short for the error bound to apply.
    #[error("planner error: {0}")]
    Planner(String),

    /// The requested precision cannot be honoured (e.g. a difference step underflows).
    #[error("precision error: {0}")]
    Precision(String),

    /// A table that must be large enough to work with is not (absurd sieve limits etc).
    #[error("resource error: {0}")]
    Resource(String),

    /// ζ'(ρ) is too small for the residue formula, which assumes simple zeros.
    #[error("near-multiple zero at t = {t}: |zeta'(rho)| = {magnitude:e}")]
    NearMultipleZero { t: String, magnitude: f64 },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, RieszError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(RieszError::Domain(msg.into()))
}
