//! Simultaneous (Aberth–Ehrlich) iteration for all roots of a real monic polynomial.

use std::cmp::Ordering;

use num_complex::Complex64;

use super::OracleConfig;
use crate::error::{Error, Result};
use crate::poly::CharPoly;

pub(crate) const MAX_ITERATIONS: usize = 200;
pub(crate) const RESIDUAL_TARGET: f64 = 1e-14;
const MAX_DEGREE: usize = 16;

/// All complex roots of `p`, conjugate pairs symmetrized, sorted by
/// (real part, imaginary part) descending.
pub fn poly_roots(p: &CharPoly, cfg: &OracleConfig) -> Result<Vec<Complex64>> {
    cfg.validate()?;
    let mut roots = aberth(p, MAX_ITERATIONS)?;
    pair_conjugates(&mut roots);
    sort_roots(&mut roots);
    Ok(roots)
}

/// Descending by real part, ties by imaginary part.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|x, y| match y.re.total_cmp(&x.re) {
        Ordering::Equal => y.im.total_cmp(&x.im),
        o => o,
    });
}

fn converged(p: &CharPoly, z: Complex64) -> bool {
    p.eval(z).norm() <= RESIDUAL_TARGET * p.abs_scale(z)
}

pub(crate) fn aberth(p: &CharPoly, max_iter: usize) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n > MAX_DEGREE {
        return Err(Error::Dimension {
            expected: format!("degree <= {MAX_DEGREE}"),
            got: format!("degree {n}"),
        });
    }
    if n == 1 {
        return Ok(vec![Complex64::new(-p.coeffs()[1], 0.0)]);
    }

    // Deterministic start: points on a circle of radius 1 + max|p_k|, rotated off the real axis.
    let radius = 1.0 + p.max_abs_tail();
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();

    let mut done = false;
    for _ in 0..max_iter {
        let mut small_steps = true;
        for i in 0..n {
            let (v, dv) = p.eval_with_derivative(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                if step.norm() > 4.0 * f64::EPSILON * (1.0 + z[i].norm()) {
                    small_steps = false;
                }
            }
        }
        if small_steps || z.iter().all(|&zi| converged(p, zi)) {
            done = true;
            break;
        }
    }
    if !done || z.iter().any(|zi| !zi.is_finite()) {
        return Err(Error::Numeric(format!(
            "root finder did not converge within {max_iter} iterations"
        )));
    }
    Ok(z)
}

/// Real coefficients force conjugate pairs; make the computed roots honour that exactly.
fn pair_conjugates(roots: &mut [Complex64]) {
    let n = roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || roots[i].im <= 0.0 {
            continue;
        }
        let target = roots[i].conj();
        let partner = (0..n)
            .filter(|&j| j != i && !used[j] && roots[j].im < 0.0)
            .min_by(|&a, &b| {
                (roots[a] - target)
                    .norm()
                    .total_cmp(&(roots[b] - target).norm())
            });
        if let Some(j) = partner {
            if (roots[j] - target).norm() <= 1e-6 * (1.0 + roots[i].norm()) {
                let re = 0.5 * (roots[i].re + roots[j].re);
                let im = 0.5 * (roots[i].im - roots[j].im);
                roots[i] = Complex64::new(re, im);
                roots[j] = Complex64::new(re, -im);
                used[i] = true;
                used[j] = true;
            }
        }
    }
    for i in 0..n {
        if !used[i] && roots[i].im.abs() <= 1e-6 * (1.0 + roots[i].norm()) {
            roots[i].im = 0.0;
        }
    }
}
