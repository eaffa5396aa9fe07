//! Two-index Bessel-like functions from `e^{xS(θ)} = Σ e^{(αm+βn)θ} B_{m,n}(x)`.
//!
//! With `S(θ) = (e^{αθ} − e^{βθ})/(α − β)` the generating function factors
//! into two exponential series, which forces
//! `B_{m,n}(x) = (−1)ⁿ (x/(α−β))^{m+n} / (m! n!)` for `m, n ≥ 0` and zero
//! otherwise, provided `αm + βn` never collides across distinct index pairs.

use statrs::function::factorial::ln_factorial;

use crate::error::{ensure_finite, Error, Result};

pub const MAX_INDEX: i64 = 170;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselParams {
    alpha: f64,
    beta: f64,
}

impl BesselParams {
    /// Requires `|α − β| > 1e-9·(1 + |α| + |β|)`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        ensure_finite("alpha and beta", &[alpha, beta])?;
        if (alpha - beta).abs() <= 1e-9 * (1.0 + alpha.abs() + beta.abs()) {
            return Err(Error::Domain(format!(
                "alpha and beta must be distinct, got {alpha} and {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Like `new`, and additionally rejects exponent collisions for indices in `0..=window`.
    pub fn new_generic(alpha: f64, beta: f64, window: i64) -> Result<Self> {
        let p = Self::new(alpha, beta)?;
        if let Some(((m, n), (m2, n2))) = p.exponent_collision(window) {
            return Err(Error::Domain(format!(
                "exponents collide: {alpha}*{m} + {beta}*{n} = {alpha}*{m2} + {beta}*{n2}; \
                 B_{{m,n}} is not identifiable for commensurate (alpha, beta)"
            )));
        }
        Ok(p)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// A pair of distinct index pairs in `[0, window]²` with equal `αm + βn`, if any.
    pub fn exponent_collision(&self, window: i64) -> Option<((i64, i64), (i64, i64))> {
        let tol = 1e-12 * (self.alpha.abs() + self.beta.abs()) * window.max(1) as f64;
        for dm in 0..=window {
            for dn in -window..=window {
                if (dm == 0 && dn <= 0)
                    || (self.alpha * dm as f64 + self.beta * dn as f64).abs() > tol
                {
                    continue;
                }
                // α·dm + β·dn = 0 with (dm, dn) ≠ 0: shift a base pair by it.
                let (m, n) = (0, (-dn).max(0));
                return Some(((m + dm, n + dn), (m, n)));
            }
        }
        None
    }
}

fn check_index(m: i64, n: i64) -> Result<()> {
    if m.abs() > MAX_INDEX || n.abs() > MAX_INDEX {
        return Err(Error::Range(format!(
            "index ({m}, {n}) outside |index| <= {MAX_INDEX}"
        )));
    }
    Ok(())
}

/// `sign · |t|^power / (m! n!)` through logarithms.
fn scaled_power(t: f64, power: i64, m: i64, n: i64, sign: f64) -> f64 {
    if power == 0 {
        return sign * (-(ln_factorial(m as u64) + ln_factorial(n as u64))).exp();
    }
    if t == 0.0 {
        return 0.0;
    }
    let log = power as f64 * t.abs().ln() - ln_factorial(m as u64) - ln_factorial(n as u64);
    let sign = if t < 0.0 && power % 2 == 1 {
        -sign
    } else {
        sign
    };
    sign * log.exp()
}

/// `B_{m,n}(x)`.
pub fn bessel2_eval(p: &BesselParams, m: i64, n: i64, x: f64) -> Result<f64> {
    ensure_finite("x", &[x])?;
    check_index(m, n)?;
    if m < 0 || n < 0 {
        return Ok(0.0);
    }
    let t = x / (p.alpha - p.beta);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(scaled_power(t, m + n, m, n, sign))
}

/// `d/dx B_{m,n}(x)` from the closed form.
pub fn bessel2_derivative(p: &BesselParams, m: i64, n: i64, x: f64) -> Result<f64> {
    ensure_finite("x", &[x])?;
    check_index(m, n)?;
    if m < 0 || n < 0 || m + n == 0 {
        return Ok(0.0);
    }
    let d = p.alpha - p.beta;
    let t = x / d;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok((m + n) as f64 / d * scaled_power(t, m + n - 1, m, n, sign))
}

/// `|(α−β) B′_{m,n}(x) − B_{m−1,n}(x) + B_{m,n−1}(x)|`.
pub fn bessel2_x_recurrence_residual(p: &BesselParams, m: i64, n: i64, x: f64) -> Result<f64> {
    let lhs = (p.alpha - p.beta) * bessel2_derivative(p, m, n, x)?;
    let rhs = bessel2_eval(p, m - 1, n, x)? - bessel2_eval(p, m, n - 1, x)?;
    Ok((lhs - rhs).abs())
}

/// `|(αm + βn) B_{m,n}(x) − x/(α−β) [α B_{m−1,n}(x) − β B_{m,n−1}(x)]|`.
pub fn bessel2_theta_recurrence_residual(p: &BesselParams, m: i64, n: i64, x: f64) -> Result<f64> {
    let lhs = (p.alpha * m as f64 + p.beta * n as f64) * bessel2_eval(p, m, n, x)?;
    let rhs = x / (p.alpha - p.beta)
        * (p.alpha * bessel2_eval(p, m - 1, n, x)? - p.beta * bessel2_eval(p, m, n - 1, x)?);
    Ok((lhs - rhs).abs())
}

/// `Σ_{m+n ≤ max_order} e^{(αm+βn)θ} B_{m,n}(x)`.
pub fn generating_partial_sum(p: &BesselParams, x: f64, theta: f64, max_order: i64) -> Result<f64> {
    ensure_finite("theta", &[theta])?;
    let mut sum = 0.0;
    for total in 0..=max_order {
        for m in 0..=total {
            let n = total - m;
            sum += ((p.alpha * m as f64 + p.beta * n as f64) * theta).exp()
                * bessel2_eval(p, m, n, x)?;
        }
    }
    Ok(sum)
}
