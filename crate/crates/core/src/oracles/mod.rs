//! Brute-force reference implementations.
//!
//! Nothing in here depends on the closed-form modules, so comparing a
//! closed form against an oracle is a genuinely independent check. The
//! polynomial root finder is the one exception in the other direction: the
//! Vandermonde constructions consume it.

mod expm;
mod fd;
mod roots;
mod series;

pub use expm::expm_oracle;
pub use fd::fd_derivative;
pub use roots::{poly_roots, sort_roots};
pub use series::interleaved_exp_series;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Degree of the Taylor core in `expm_oracle`.
    pub taylor_order: usize,
    /// Scale the argument until its 1-norm is at most this.
    pub squaring_threshold: f64,
    /// Default finite-difference step.
    pub fd_step: f64,
    /// Relative size of the last series term at which summation stops.
    pub series_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            taylor_order: 20,
            squaring_threshold: 0.5,
            fd_step: 1e-5,
            series_tol: 1e-17,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.taylor_order < 8 {
            return Err(Error::Domain("taylor_order must be at least 8".into()));
        }
        let positive = [self.squaring_threshold, self.fd_step, self.series_tol];
        if positive.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::Domain(
                "oracle tolerances must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}
