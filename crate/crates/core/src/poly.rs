//! Monic polynomials in the `λⁿ + p₁λⁿ⁻¹ + … + pₙ` convention.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};

/// Monic polynomial `P(λ) = Σ_k p_{n−k} λ^k` with `p₀ = 1`.
///
/// `coeffs()[k]` is `p_k`, the coefficient of `λ^{n−k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// Takes `[p₀, p₁, …, pₙ]`; `p₀` must be exactly one.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Domain(
                "polynomial must have degree at least 1".into(),
            ));
        }
        if coeffs[0] != 1.0 {
            return Err(Error::Domain(format!(
                "polynomial must be monic, got p0 = {}",
                coeffs[0]
            )));
        }
        ensure_finite("polynomial coefficients", &coeffs)?;
        Ok(Self { coeffs })
    }

    /// Builds `λⁿ + p₁λⁿ⁻¹ + … + pₙ` from the trailing coefficients `[p₁, …, pₙ]`.
    pub fn from_tail(tail: &[f64]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(1.0);
        coeffs.extend_from_slice(tail);
        Self::new(coeffs)
    }

    /// Expands `Π (λ − r)` over real roots.
    pub fn from_real_roots(roots: &[f64]) -> Result<Self> {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = c.clone();
            next.push(0.0);
            for (k, &ck) in c.iter().enumerate() {
                next[k + 1] -= r * ck;
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `max_k |p_k|` over `k ≥ 1`.
    pub fn max_abs_tail(&self) -> f64 {
        self.coeffs[1..].iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative by Horner's scheme.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in &self.coeffs {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `Σ |p_k| |z|^{n−k}`, the scale against which `|P(z)|` is judged.
    pub fn abs_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().fold(0.0, |acc, &c| acc * r + c.abs())
    }
}
