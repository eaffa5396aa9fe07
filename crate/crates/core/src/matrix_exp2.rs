//! Closed-form `e^{θm}` for real 2×2 matrices.
//!
//! Cayley–Hamilton gives `m² = (tr m)m − (det m)1`, so every 2×2 matrix is a
//! quadratic unit and `e^{θm} = C(θ)·1 + S(θ)·m`.

use crate::error::{ensure_finite, Error, Result};
use crate::gtrig::{eval_cs, QuadraticUnit, TlfPair};
use crate::matrix::SquareMatrix;

/// Largest `|θ|·(|tr m|/2 + √|Λ|/2)` accepted before reporting a range error.
pub const OVERFLOW_LIMIT: f64 = 700.0;
pub const LAMBDA_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2Exp {
    /// `Û(θ) = e^{θm}`.
    pub u: SquareMatrix,
    /// The pair with `Û = C·1 + S·m`.
    pub cs: TlfPair,
    /// `Λ = (tr m)² − 4 det m = (a − d)² + 4bc`.
    pub lambda: f64,
}

/// Scale-free pieces of the closed form: `e^{θm} = e^{θ tr/2}(even·1 + odd·(m − tr/2))`.
struct Reduced {
    even: f64,
    odd: f64,
    half_trace: f64,
    lambda: f64,
}

fn reduce(m: &SquareMatrix, theta: f64) -> Result<Reduced> {
    if m.dim() != 2 {
        return Err(Error::Dimension {
            expected: "2x2".into(),
            got: format!("{0}x{0}", m.dim()),
        });
    }
    ensure_finite("theta", &[theta])?;
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let half_trace = 0.5 * (a + d);
    let lambda = (a - d).powi(2) + 4.0 * b * c;
    let k = 0.5 * lambda.abs().sqrt();
    let growth = theta.abs() * (half_trace.abs() + if lambda > 0.0 { k } else { 0.0 });
    if growth.is_nan() || growth > OVERFLOW_LIMIT {
        return Err(Error::Range(format!(
            "|theta| * spectral growth = {growth:.3e} exceeds {OVERFLOW_LIMIT}"
        )));
    }
    let tol = LAMBDA_REL_TOL * (a + d).powi(2).max(1.0);
    let (even, odd) = if lambda > tol {
        ((k * theta).cosh(), (k * theta).sinh() / k)
    } else if lambda < -tol {
        ((k * theta).cos(), (k * theta).sin() / k)
    } else {
        (1.0, theta)
    };
    Ok(Reduced {
        even,
        odd,
        half_trace,
        lambda,
    })
}

/// `e^{θm}` from the hyperbolic, trigonometric or confluent closed form, chosen by the sign of `Λ`.
pub fn exp2(m: &SquareMatrix, theta: f64) -> Result<Matrix2Exp> {
    let r = reduce(m, theta)?;
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let g = (r.half_trace * theta).exp();
    let half_diff = 0.5 * (a - d);
    let u = SquareMatrix::new(
        2,
        vec![
            g * (r.even + half_diff * r.odd),
            g * b * r.odd,
            g * c * r.odd,
            g * (r.even - half_diff * r.odd),
        ],
    )?;
    // S and C straight from the closed form; no division by b, c or (a − d).
    let cs = TlfPair {
        c: g * (r.even - r.half_trace * r.odd),
        s: g * r.odd,
        theta,
    };
    Ok(Matrix2Exp {
        u,
        cs,
        lambda: r.lambda,
    })
}

/// `|C² + (tr m)CS + (det m)S² − e^{θ tr m}|`.
pub fn det_identity_residual(m: &SquareMatrix, theta: f64) -> Result<f64> {
    let e = exp2(m, theta)?;
    let (tr, det) = (m.trace(), m.det());
    let TlfPair { c, s, .. } = e.cs;
    Ok((c * c + tr * c * s + det * s * s - (theta * tr).exp()).abs())
}

/// `(x, y) = e^{−θ tr/2}(C, S)`, a point on `x² + (tr m)xy + (det m)y² = 1`.
pub fn conic_coordinates(m: &SquareMatrix, theta: f64) -> Result<(f64, f64)> {
    let r = reduce(m, theta)?;
    Ok((r.even - r.half_trace * r.odd, r.odd))
}

/// `e^{θĥ}` for `ĥ = ((0, a), (1, b))`, assembled as `((C, aS), (S, C + bS))`.
pub fn exp_unit_matrix(u: &QuadraticUnit, theta: f64) -> Result<SquareMatrix> {
    let TlfPair { c, s, .. } = eval_cs(u, theta)?;
    SquareMatrix::new(2, vec![c, u.a() * s, s, c + u.b() * s])
}
