use thiserror::Error;

/// Failures reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input was outside the mathematical domain (non-finite, wrong shape, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A result would overflow or an index is outside the supported window.
    #[error("range error: {0}")]
    Range(String),
    /// An iterative method failed or a result violated an internal consistency check.
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(what: &str, values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite")))
    }
}
