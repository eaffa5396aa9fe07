use crate::error::{Error, Result};

/// Central-difference derivative of order 1 or 2, error `O(step²)`.
pub fn fd_derivative<F: Fn(f64) -> f64>(f: F, x: f64, order: u8, step: f64) -> Result<f64> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Domain(
            "finite-difference step must be positive".into(),
        ));
    }
    match order {
        1 => Ok((f(x + step) - f(x - step)) / (2.0 * step)),
        2 => Ok((f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step)),
        _ => Err(Error::Domain(format!(
            "unsupported derivative order {order}"
        ))),
    }
}
