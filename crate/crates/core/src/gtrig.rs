//! Trigonometric-like functions of a quadratic unit `h² = a + bh`.
//!
//! Every such unit yields a pair `(C, S)` with `e^{hθ} = C(θ) + h·S(θ)`.
//! The circular unit (`a = −1, b = 0`) gives `(cos, sin)` and the hyperbolic
//! unit (`a = 1, b = 0`) gives `(cosh, sinh)`.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::matrix::SquareMatrix;

/// `|Δ| ≤ CONFLUENCE_REL · max(1, b²)` selects the double-root limit.
pub const CONFLUENCE_REL: f64 = 1e-9;
pub const DEFAULT_CONIC_TOL: f64 = 1e-12;

/// Generalized imaginary unit defined by `h² = a + bh`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticUnit {
    a: f64,
    b: f64,
}

impl QuadraticUnit {
    pub const CIRCULAR: Self = Self { a: -1.0, b: 0.0 };
    pub const HYPERBOLIC: Self = Self { a: 1.0, b: 0.0 };
    /// `ω² + ω = −1`.
    pub const EISENSTEIN: Self = Self { a: -1.0, b: -1.0 };

    pub fn new(a: f64, b: f64) -> Result<Self> {
        ensure_finite("unit coefficients", &[a, b])?;
        let unit = Self { a, b };
        if !unit.discriminant().is_finite() {
            return Err(Error::Range("unit discriminant overflows".into()));
        }
        Ok(unit)
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    /// `Δ = b² + 4a`.
    #[inline]
    pub fn discriminant(&self) -> f64 {
        self.b * self.b + 4.0 * self.a
    }

    pub fn is_confluent(&self) -> bool {
        self.discriminant().abs() <= CONFLUENCE_REL * self.b.powi(2).max(1.0)
    }

    /// The matrix `((0, a), (1, b))`, which satisfies the same quadratic identity.
    pub fn matrix(&self) -> SquareMatrix {
        SquareMatrix::new(2, vec![0.0, self.a, 1.0, self.b]).expect("finite by construction")
    }
}

/// A value of `(C(θ), S(θ))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TlfPair {
    pub c: f64,
    pub s: f64,
    pub theta: f64,
}

impl TlfPair {
    /// The pair at `θ = 0` for every unit.
    pub const ZERO_ANGLE: Self = Self {
        c: 1.0,
        s: 0.0,
        theta: 0.0,
    };
}

/// Roots `h± = (b ± √Δ)/2` of `λ² − bλ − a`, and `Δ`.
///
/// `h₊` has the larger real part, then the larger imaginary part. Real roots
/// use the cancellation-free pairing `h₋ = −a / h₊` (or its mirror).
pub fn unit_roots(u: &QuadraticUnit) -> (Complex64, Complex64, f64) {
    let (a, b) = (u.a, u.b);
    let delta = u.discriminant();
    if delta < 0.0 {
        let re = 0.5 * b;
        let im = 0.5 * (-delta).sqrt();
        return (Complex64::new(re, im), Complex64::new(re, -im), delta);
    }
    let sq = delta.sqrt();
    let (big, other) = if b >= 0.0 {
        let r1 = 0.5 * (b + sq);
        (r1, if r1 != 0.0 { -a / r1 } else { 0.5 * (b - sq) })
    } else {
        let r2 = 0.5 * (b - sq);
        (r2, if r2 != 0.0 { -a / r2 } else { 0.5 * (b + sq) })
    };
    let (hp, hm) = if big >= other {
        (big, other)
    } else {
        (other, big)
    };
    (Complex64::new(hp, 0.0), Complex64::new(hm, 0.0), delta)
}

/// `(C(θ), S(θ))` for the unit `u`.
///
/// Evaluated through real circular or hyperbolic functions of `√|Δ|/2`, scaled
/// by `e^{bθ/2}`; near `Δ = 0` the double-root limit
/// `C = (1 − bθ/2)e^{bθ/2}`, `S = θe^{bθ/2}` is used.
pub fn eval_cs(u: &QuadraticUnit, theta: f64) -> Result<TlfPair> {
    ensure_finite("theta", &[theta])?;
    let delta = u.discriminant();
    let half_b = 0.5 * u.b;
    let (even, odd) = if u.is_confluent() {
        (1.0, theta)
    } else if delta < 0.0 {
        let w = 0.5 * (-delta).sqrt();
        ((w * theta).cos(), (w * theta).sin() / w)
    } else {
        let k = 0.5 * delta.sqrt();
        ((k * theta).cosh(), (k * theta).sinh() / k)
    };
    let g = (half_b * theta).exp();
    Ok(TlfPair {
        c: g * (even - half_b * odd),
        s: g * odd,
        theta,
    })
}

/// `C = (αe^{βθ} − βe^{αθ})/(α − β)`, `S = (e^{αθ} − e^{βθ})/(α − β)` for real roots `α, β`.
///
/// Rewritten around `expm1` so that it stays accurate as `α → β`; at
/// confluence it returns `C = (1 − αθ)e^{αθ}`, `S = θe^{αθ}`.
pub fn eval_cs_from_roots(alpha: f64, beta: f64, theta: f64) -> Result<TlfPair> {
    ensure_finite("roots and theta", &[alpha, beta, theta])?;
    let gap = alpha - beta;
    if gap.abs() <= CONFLUENCE_REL * alpha.abs().max(beta.abs()).max(1.0) {
        let r = 0.5 * (alpha + beta);
        let g = (r * theta).exp();
        return Ok(TlfPair {
            c: (1.0 - r * theta) * g,
            s: theta * g,
            theta,
        });
    }
    let z = gap * theta;
    // (e^z − 1)/z
    let phi = if z == 0.0 { 1.0 } else { z.exp_m1() / z };
    let g = (beta * theta).exp();
    Ok(TlfPair {
        c: g * (1.0 - beta * theta * phi),
        s: g * theta * phi,
        theta,
    })
}

/// `C₁₂ = C₁C₂ + aS₁S₂`, `S₁₂ = S₁C₂ + (C₁ + bS₁)S₂`.
pub fn add_angles(u: &QuadraticUnit, p1: &TlfPair, p2: &TlfPair) -> TlfPair {
    TlfPair {
        c: p1.c * p2.c + u.a * p1.s * p2.s,
        s: p1.s * p2.c + (p1.c + u.b * p1.s) * p2.s,
        theta: p1.theta + p2.theta,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    Hyperbola,
    Ellipse,
    Degenerate,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Ellipse => "ellipse",
            ConicKind::Degenerate => "degenerate",
        }
    }
}

/// Geometry of `x² + (tr m)xy + (det m)y² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicClass {
    /// `(tr m)²/4 − det m`.
    pub delta: f64,
    pub kind: ConicKind,
    /// Axis rotation in radians, in `(−π/4, π/4]`.
    pub chi: f64,
    /// False when `chi` was forced to zero (degenerate conic or `0/0`).
    pub chi_defined: bool,
}

/// Classifies the conic traced by the normalized TLFs of a 2×2 matrix.
pub fn classify_conic(m: &SquareMatrix, tol: f64) -> Result<ConicClass> {
    if m.dim() != 2 {
        return Err(Error::Dimension {
            expected: "2x2".into(),
            got: format!("{0}x{0}", m.dim()),
        });
    }
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::Domain("tolerance must be non-negative".into()));
    }
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let delta = 0.25 * (a - d).powi(2) + b * c;
    let kind = if delta > tol {
        ConicKind::Hyperbola
    } else if delta < -tol {
        ConicKind::Ellipse
    } else {
        ConicKind::Degenerate
    };

    let num = a + d;
    let den = a * d - b * c - 1.0;
    if kind == ConicKind::Degenerate || (num.abs() <= tol && den.abs() <= tol) {
        return Ok(ConicClass {
            delta,
            kind,
            chi: 0.0,
            chi_defined: false,
        });
    }
    // Two-argument arctangent folded back onto the principal branch of arctan,
    // so that ½·arctan(num/den) is reproduced whenever den ≠ 0.
    let mut t = num.atan2(den);
    if t > std::f64::consts::FRAC_PI_2 {
        t -= std::f64::consts::PI;
    } else if t <= -std::f64::consts::FRAC_PI_2 {
        t += std::f64::consts::PI;
    }
    Ok(ConicClass {
        delta,
        kind,
        chi: 0.5 * t,
        chi_defined: true,
    })
}
