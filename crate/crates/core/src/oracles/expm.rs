use super::OracleConfig;
use crate::error::{ensure_finite, Error, Result};
use crate::matrix::SquareMatrix;

const MAX_DIM: usize = 16;

/// `e^{θQ}` by scaling and squaring around a plain Taylor polynomial.
pub fn expm_oracle(q: &SquareMatrix, theta: f64, cfg: &OracleConfig) -> Result<SquareMatrix> {
    cfg.validate()?;
    ensure_finite("theta", &[theta])?;
    let n = q.dim();
    if n > MAX_DIM {
        return Err(Error::Dimension {
            expected: format!("n <= {MAX_DIM}"),
            got: format!("n = {n}"),
        });
    }

    let a = q.scale(theta);
    let norm = a.norm_1();
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > cfg.squaring_threshold {
        squarings += 1;
    }
    let a = a.scale(2f64.powi(-(squarings as i32)));

    // I + A/1 (I + A/2 (I + … (I + A/N)))
    let identity = SquareMatrix::identity(n);
    let mut r = identity.clone();
    for k in (1..=cfg.taylor_order).rev() {
        r = identity.add_scaled(1.0 / k as f64, &(&a * &r));
    }
    for _ in 0..squarings {
        r = &r * &r;
    }
    Ok(r)
}
