use crate::error::{ensure_finite, Result};

/// `Σ_{m≥0} θ^{pm+k} / (pm+k)!`, the `k`-th of `p` interleaved pieces of `e^θ`.
///
/// Summed term by term until the running term is below `tol` relative to the
/// partial sum (and past the peak of `|θ|^j/j!`).
pub fn interleaved_exp_series(period: usize, k: usize, theta: f64, tol: f64) -> Result<f64> {
    ensure_finite("theta", &[theta])?;
    assert!(period > 0 && k < period, "need 0 <= k < period");
    let mut term = 1.0; // θ^j / j!
    let mut sum = 0.0;
    let mut j = 0usize;
    loop {
        if j % period == k {
            sum += term;
        }
        j += 1;
        term *= theta / j as f64;
        if (j as f64) > theta.abs() && j > k && term.abs() <= tol * sum.abs().max(f64::MIN_POSITIVE)
        {
            break;
        }
        if term == 0.0 {
            break;
        }
    }
    Ok(sum)
}
