//! Third-order trigonometry for a cubic unit `η³ = a₀ + a₁η + a₂η²`.
//!
//! `e^{ηθ} = A₀(θ) + ηA₁(θ) + η²A₂(θ)`, with the `A_k` obtained by inverting
//! the Vandermonde matrix of the three roots of `λ³ − a₂λ² − a₁λ − a₀`.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::interp::{lagrange_error_bound, min_separation, realize, ERROR_BUDGET};
use crate::matrix::SquareMatrix;
use crate::oracles::{self, expm_oracle, OracleConfig};
use crate::poly::CharPoly;

/// Imaginary parts below this (relative) are rounding residue.
pub const IMAG_RESIDUE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicUnit {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
}

impl CubicUnit {
    /// `η³ = 1`.
    pub const UNITY: Self = Self {
        a0: 1.0,
        a1: 0.0,
        a2: 0.0,
    };

    pub fn new(a0: f64, a1: f64, a2: f64) -> Result<Self> {
        ensure_finite("cubic coefficients", &[a0, a1, a2])?;
        Ok(Self { a0, a1, a2 })
    }

    /// `λ³ − a₂λ² − a₁λ − a₀`.
    pub fn poly(&self) -> CharPoly {
        CharPoly::from_tail(&[-self.a2, -self.a1, -self.a0]).expect("finite by construction")
    }

    /// The companion matrix `((0, 0, a₀), (1, 0, a₁), (0, 1, a₂))`.
    pub fn matrix(&self) -> SquareMatrix {
        SquareMatrix::new(
            3,
            vec![0.0, 0.0, self.a0, 1.0, 0.0, self.a1, 0.0, 1.0, self.a2],
        )
        .expect("finite by construction")
    }
}

/// Values of `(A₀, A₁, A₂)` at `(θ, φ)`; `φ = 0` in the one-variable case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TlfTriple {
    pub values: [f64; 3],
    pub theta: f64,
    pub phi: f64,
    /// Roots too close for the Vandermonde inverse; values came from the
    /// companion-matrix exponential instead and carry a 1e-6 contract.
    pub near_degenerate: bool,
}

/// The three roots, sorted by (real, imaginary) descending, conjugate pairs exact.
pub fn cubic_roots(u: &CubicUnit) -> Result<[Complex64; 3]> {
    let roots = match oracles::poly_roots(&u.poly(), &OracleConfig::default()) {
        Ok(r) => r,
        Err(Error::Numeric(_)) => {
            let mut r = cardano(-u.a2, -u.a1, -u.a0).to_vec();
            oracles::sort_roots(&mut r);
            r
        }
        Err(e) => return Err(e),
    };
    Ok([roots[0], roots[1], roots[2]])
}

/// Closed-form roots of `λ³ + pλ² + qλ + r`.
fn cardano(p: f64, q: f64, r: f64) -> [Complex64; 3] {
    let shift = p / 3.0;
    let qq = (p * p - 3.0 * q) / 9.0;
    let rr = (2.0 * p * p * p - 9.0 * p * q + 27.0 * r) / 54.0;
    if rr * rr < qq * qq * qq {
        let t = (rr / (qq * qq * qq).sqrt()).clamp(-1.0, 1.0).acos();
        let m = -2.0 * qq.sqrt();
        let tau = std::f64::consts::TAU;
        [0.0, tau, -tau].map(|o| Complex64::new(m * ((t + o) / 3.0).cos() - shift, 0.0))
    } else {
        let a = -rr.signum() * (rr.abs() + (rr * rr - qq * qq * qq).sqrt()).cbrt();
        let b = if a != 0.0 { qq / a } else { 0.0 };
        let re = -0.5 * (a + b) - shift;
        let im = 0.5 * 3f64.sqrt() * (a - b);
        [
            Complex64::new(a + b - shift, 0.0),
            Complex64::new(re, im),
            Complex64::new(re, -im),
        ]
    }
}

/// `(A₀, A₁, A₂)` at `θ`.
pub fn eval_a(u: &CubicUnit, theta: f64) -> Result<TlfTriple> {
    eval_a2(u, theta, 0.0)
}

/// Two-variable TLFs: `e^{θη + φη²} = A₀ + ηA₁ + η²A₂`.
pub fn eval_a2(u: &CubicUnit, theta: f64, phi: f64) -> Result<TlfTriple> {
    ensure_finite("theta and phi", &[theta, phi])?;
    if theta == 0.0 && phi == 0.0 {
        return Ok(TlfTriple {
            values: [1.0, 0.0, 0.0],
            theta,
            phi,
            near_degenerate: false,
        });
    }
    let eta = cubic_roots(u)?;
    let y = eta.map(|e| (e * theta + e * e * phi).exp());
    if let Some(values) = vandermonde_solve(&eta, &y)? {
        return Ok(TlfTriple {
            values,
            theta,
            phi,
            near_degenerate: false,
        });
    }
    // First column of e^{θη̂ + φη̂²}.
    let m = u.matrix();
    let gen = m.scale(theta).add_scaled(phi, &(&m * &m));
    let e = expm_oracle(&gen, 1.0, &OracleConfig::default())?;
    let col = e.column(0);
    Ok(TlfTriple {
        values: [col[0], col[1], col[2]],
        theta,
        phi,
        near_degenerate: true,
    })
}

/// Explicit inverse of the 3×3 Vandermonde matrix (Lagrange form):
/// `A₂ = Σ Y_j/d_j`, `A₁ = −Σ Y_j s_j/d_j`, `A₀ = Σ Y_j p_j/d_j` where `s_j`, `p_j`
/// are the sum and product of the other two roots and `d_j = Π_{k≠j}(η_j − η_k)`.
///
/// `None` when the roots are too close for the inverse to be trusted.
fn vandermonde_solve(eta: &[Complex64; 3], y: &[Complex64; 3]) -> Result<Option<[f64; 3]>> {
    let scale = 1.0 + eta.iter().fold(0.0f64, |m, e| m.max(e.norm()));
    if min_separation(eta) <= 1e-7 * scale {
        return Ok(None);
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut acc = [zero; 3];
    for j in 0..3 {
        let (k, l) = ((j + 1) % 3, (j + 2) % 3);
        let w = y[j] / ((eta[j] - eta[k]) * (eta[j] - eta[l]));
        acc[0] += w * eta[k] * eta[l];
        acc[1] -= w * (eta[k] + eta[l]);
        acc[2] += w;
    }
    let bound = lagrange_error_bound(eta, y);
    let size = acc.iter().fold(0.0f64, |m, c| m.max(c.norm()));
    if bound.is_nan() || bound > ERROR_BUDGET * size {
        return Ok(None);
    }
    let v = realize(&acc, IMAG_RESIDUE_TOL, 0.0)?;
    Ok(Some([v[0], v[1], v[2]]))
}

/// `A₀·1 + A₁η̂ + A₂η̂²`, written out entry by entry.
pub fn evolution_from_triple(u: &CubicUnit, t: &TlfTriple) -> SquareMatrix {
    let CubicUnit { a0, a1, a2 } = *u;
    let [x0, x1, x2] = t.values;
    let data = vec![
        x0,
        a0 * x2,
        a0 * x1 + a0 * a2 * x2,
        x1,
        x0 + a1 * x2,
        a1 * x1 + (a0 + a1 * a2) * x2,
        x2,
        x1 + a2 * x2,
        x0 + a2 * x1 + (a1 + a2 * a2) * x2,
    ];
    SquareMatrix::new(3, data).expect("3x3")
}

/// `Û(θ) = e^{θη̂}`.
pub fn evolution_matrix3(u: &CubicUnit, theta: f64) -> Result<SquareMatrix> {
    Ok(evolution_from_triple(u, &eval_a(u, theta)?))
}

/// `Û(θ, φ) = e^{θη̂ + φη̂²}`.
pub fn evolution_matrix3_2(u: &CubicUnit, theta: f64, phi: f64) -> Result<SquareMatrix> {
    Ok(evolution_from_triple(u, &eval_a2(u, theta, phi)?))
}

/// `det(A₀ + A₁η̂ + A₂η̂²)` expanded as a cubic form in the `A_k`.
///
/// The terms can exceed the value by many orders of magnitude when the roots
/// have spread-out real parts, so the identity residuals below evaluate the
/// same determinant by LU instead.
pub fn cubic_form(u: &CubicUnit, values: [f64; 3]) -> f64 {
    let CubicUnit { a0, a1, a2 } = *u;
    let [x0, x1, x2] = values;
    x0 * x0 * x0
        + a0 * x1 * x1 * x1
        + a0 * a0 * x2 * x2 * x2
        + a2 * x0 * x0 * x1
        + (2.0 * a1 + a2 * a2) * x0 * x0 * x2
        - a1 * x0 * x1 * x1
        - (3.0 * a0 + a1 * a2) * x0 * x1 * x2
        + (a1 * a1 - 2.0 * a0 * a2) * x0 * x2 * x2
        + a0 * a2 * x1 * x1 * x2
        - a0 * a1 * x1 * x2 * x2
}

/// `|det(A₀ + A₁η̂ + A₂η̂²) − e^{a₂θ}|` at `A(θ)`.
pub fn cubic_identity_residual(u: &CubicUnit, theta: f64) -> Result<f64> {
    cubic_identity_residual2(u, theta, 0.0)
}

/// `|det(A₀ + A₁η̂ + A₂η̂²) − e^{a₂θ + (a₂² + 2a₁)φ}|` at `A(θ, φ)`.
pub fn cubic_identity_residual2(u: &CubicUnit, theta: f64, phi: f64) -> Result<f64> {
    let t = eval_a2(u, theta, phi)?;
    let target = (u.a2 * theta + (u.a2 * u.a2 + 2.0 * u.a1) * phi).exp();
    Ok((evolution_from_triple(u, &t).det() - target).abs())
}

/// Pseudo-hyperbolic function `e_k(θ) = Σ_n θ^{3n+k}/(3n+k)!`.
///
/// Summed as a series except for large negative `θ`, where the series
/// alternates badly and `(e^θ + 2e^{−θ/2}cos(√3θ/2 − 2πk/3))/3` is used.
pub fn eisenstein_e(k: usize, theta: f64) -> Result<f64> {
    if k > 2 {
        return Err(Error::Domain(format!(
            "pseudo-hyperbolic index must be 0, 1 or 2, got {k}"
        )));
    }
    ensure_finite("theta", &[theta])?;
    if theta < -8.0 {
        let phase = 0.5 * 3f64.sqrt() * theta - std::f64::consts::TAU * k as f64 / 3.0;
        return Ok((theta.exp() + 2.0 * (-0.5 * theta).exp() * phase.cos()) / 3.0);
    }
    let mut term = 1.0;
    let mut sum = 0.0;
    let mut j = 0usize;
    loop {
        if j % 3 == k {
            sum += term;
        }
        j += 1;
        term *= theta / j as f64;
        if term == 0.0 || (j as f64 > theta.abs() && j > k && term.abs() < 1e-17 * sum.abs()) {
            return Ok(sum);
        }
    }
}

/// `e^{θη̂} = 1 + θ sinc(νθ) η̂ + ½θ² sinc²(νθ/2) η̂²` for the antisymmetric
/// generator `η̂ = ((0, −ν₃, ν₂), (ν₃, 0, −ν₁), (−ν₂, ν₁, 0))`.
pub fn exp_rotation_generator(nu: [f64; 3], theta: f64) -> Result<SquareMatrix> {
    ensure_finite("rotation generator", &[nu[0], nu[1], nu[2], theta])?;
    let [n1, n2, n3] = nu;
    let g = SquareMatrix::new(3, vec![0.0, -n3, n2, n3, 0.0, -n1, -n2, n1, 0.0])?;
    let norm = (n1 * n1 + n2 * n2 + n3 * n3).sqrt();
    let s1 = sinc(norm * theta);
    let s2 = sinc(0.5 * norm * theta);
    Ok(SquareMatrix::identity(3)
        .add_scaled(theta * s1, &g)
        .add_scaled(0.5 * theta * theta * s2 * s2, &(&g * &g)))
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}
