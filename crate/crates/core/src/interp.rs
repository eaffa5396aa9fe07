//! Interpolating `f(λ)` on the roots of a polynomial: the coefficients `r_k`
//! with `Σ_k r_k η_j^k = f(η_j)` are exactly the TLFs of the unit.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative error budget of the Vandermonde route; above it callers fall back.
pub(crate) const ERROR_BUDGET: f64 = 1e-11;

/// Monomial coefficients of the interpolant, plus a first-order bound on their
/// rounding error: `ε · Σ_j |f(η_j)| ‖ℓ_j‖₁` with `ℓ_j` the Lagrange basis.
pub(crate) struct Interpolant {
    pub coeffs: Vec<Complex64>,
    pub error_bound: f64,
}

impl Interpolant {
    /// Whether the bound stays within `ERROR_BUDGET` of the coefficient scale.
    pub fn is_accurate(&self) -> bool {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
        self.error_bound.is_finite()
            && self.error_bound <= ERROR_BUDGET * scale.max(f64::MIN_POSITIVE)
    }
}

/// Newton divided differences, then expansion to the monomial basis.
pub(crate) fn interpolate(nodes: &[Complex64], values: &[Complex64]) -> Interpolant {
    let n = nodes.len();
    debug_assert_eq!(n, values.len());
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
        }
    }
    // p(λ) = dd₀ + dd₁(λ − η₀) + … ; expand from the innermost factor outwards.
    let mut coeffs = vec![dd[n - 1]];
    for k in (0..n - 1).rev() {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * nodes[k];
        }
        next[0] += dd[k];
        coeffs = next;
    }
    Interpolant {
        coeffs,
        error_bound: lagrange_error_bound(nodes, values),
    }
}

pub(crate) fn lagrange_error_bound(nodes: &[Complex64], values: &[Complex64]) -> f64 {
    let mut bound = 0.0;
    for (j, (&eta, &y)) in nodes.iter().zip(values).enumerate() {
        let mut num = 1.0;
        let mut den = 1.0;
        for (k, &other) in nodes.iter().enumerate() {
            if k != j {
                num *= 1.0 + other.norm();
                den *= (eta - other).norm();
            }
        }
        bound += y.norm() * num / den;
    }
    8.0 * f64::EPSILON * bound
}

/// Drops imaginary parts that are rounding residue; larger ones mean a
/// conjugate pair was broken somewhere and are reported.
pub(crate) fn realize(values: &[Complex64], rel_tol: f64, floor: f64) -> Result<Vec<f64>> {
    values
        .iter()
        .map(|v| {
            if v.im.abs() <= (rel_tol * (1.0 + v.re.abs())).max(floor) {
                Ok(v.re)
            } else {
                Err(Error::Numeric(format!(
                    "imaginary residue {:.3e} in a real result",
                    v.im
                )))
            }
        })
        .collect()
}

/// Smallest pairwise distance between nodes.
pub(crate) fn min_separation(nodes: &[Complex64]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            m = m.min((nodes[i] - nodes[j]).norm());
        }
    }
    m
}
