//! Numbers `x + hy` over a quadratic unit and analytic functions on them.
//!
//! For `f(x + hy) = u(x, y) + h·v(x, y)` the pair `w = (u, v)` obeys
//! `∂_y w = ĥ ∂_x w` and hence `(∂_y² − a∂_x² − b∂_x∂_y) w = 0`.

use crate::error::{ensure_finite, Error, Result};
use crate::gtrig::{eval_cs, QuadraticUnit};
use crate::matrix::SquareMatrix;
use crate::matrix_exp2::OVERFLOW_LIMIT;
use crate::oracles::fd_derivative;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypercomplexNumber {
    pub x: f64,
    pub y: f64,
    pub unit: QuadraticUnit,
}

impl HypercomplexNumber {
    pub fn new(x: f64, y: f64, unit: QuadraticUnit) -> Result<Self> {
        ensure_finite("hypercomplex components", &[x, y])?;
        Ok(Self { x, y, unit })
    }

    /// `x·1 + y·ĥ`.
    pub fn to_matrix(&self) -> SquareMatrix {
        SquareMatrix::identity(2)
            .scale(self.x)
            .add_scaled(self.y, &self.unit.matrix())
    }

    /// Row-sum norm of the matrix representation; bounds `|zᵏ|` submultiplicatively.
    pub fn norm_bound(&self) -> f64 {
        let (a, b) = (self.unit.a(), self.unit.b());
        (self.x.abs() + (a * self.y).abs()).max((self.y).abs() + (self.x + b * self.y).abs())
    }
}

fn same_unit(z1: &HypercomplexNumber, z2: &HypercomplexNumber) -> Result<()> {
    if z1.unit != z2.unit {
        return Err(Error::Domain(format!(
            "unit mismatch: {:?} vs {:?}",
            z1.unit, z2.unit
        )));
    }
    Ok(())
}

/// `(x₁x₂ + a·y₁y₂) + h·(x₁y₂ + x₂y₁ + b·y₁y₂)`.
pub fn hc_mul(z1: &HypercomplexNumber, z2: &HypercomplexNumber) -> Result<HypercomplexNumber> {
    same_unit(z1, z2)?;
    let (a, b) = (z1.unit.a(), z1.unit.b());
    let yy = z1.y * z2.y;
    Ok(HypercomplexNumber {
        x: z1.x * z2.x + a * yy,
        y: z1.x * z2.y + z2.x * z1.y + b * yy,
        unit: z1.unit,
    })
}

pub fn hc_add(z1: &HypercomplexNumber, z2: &HypercomplexNumber) -> Result<HypercomplexNumber> {
    same_unit(z1, z2)?;
    Ok(HypercomplexNumber {
        x: z1.x + z2.x,
        y: z1.y + z2.y,
        unit: z1.unit,
    })
}

/// `e^{x + hy} = e^x (C(y) + h S(y))`.
pub fn hc_exp(z: &HypercomplexNumber) -> Result<HypercomplexNumber> {
    if z.x.abs() > OVERFLOW_LIMIT {
        return Err(Error::Range(format!(
            "scalar part {} exceeds {OVERFLOW_LIMIT}",
            z.x
        )));
    }
    let cs = eval_cs(&z.unit, z.y)?;
    let g = z.x.exp();
    let (x, y) = (g * cs.c, g * cs.s);
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::Range("hypercomplex exponential overflows".into()));
    }
    Ok(HypercomplexNumber { x, y, unit: z.unit })
}

/// Truncated Maclaurin series `Σ_{k≤K} c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    pub coeffs: Vec<f64>,
    /// Inputs with `norm_bound` beyond this are flagged.
    pub radius_hint: f64,
    /// Exact polynomial: no truncation tail to check.
    pub is_polynomial: bool,
}

pub const PRESET_ORDER: usize = 64;
pub const PRESET_NAMES: [&str; 6] = ["exp", "sin", "cos", "geometric", "identity", "square"];

impl PowerSeries {
    pub fn new(coeffs: Vec<f64>, radius_hint: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "power series needs at least one coefficient".into(),
            ));
        }
        ensure_finite("series coefficients", &coeffs)?;
        Ok(Self {
            coeffs,
            radius_hint,
            is_polynomial: false,
        })
    }

    pub fn polynomial(coeffs: Vec<f64>) -> Result<Self> {
        let mut s = Self::new(coeffs, f64::INFINITY)?;
        s.is_polynomial = true;
        Ok(s)
    }

    fn entire(f: impl Fn(usize, f64) -> f64) -> Self {
        let mut fact = 1.0;
        let coeffs = (0..=PRESET_ORDER)
            .map(|k| {
                if k > 0 {
                    fact *= k as f64;
                }
                f(k, 1.0 / fact)
            })
            .collect();
        // 64 terms resolve |z| up to ~10 to 1e-13.
        Self {
            coeffs,
            radius_hint: 10.0,
            is_polynomial: false,
        }
    }

    pub fn exp() -> Self {
        Self::entire(|_, inv_fact| inv_fact)
    }

    pub fn sin() -> Self {
        Self::entire(|k, inv_fact| match k % 4 {
            1 => inv_fact,
            3 => -inv_fact,
            _ => 0.0,
        })
    }

    pub fn cos() -> Self {
        Self::entire(|k, inv_fact| match k % 4 {
            0 => inv_fact,
            2 => -inv_fact,
            _ => 0.0,
        })
    }

    /// `1/(1 − z)`.
    pub fn geometric() -> Self {
        Self {
            coeffs: vec![1.0; PRESET_ORDER + 1],
            radius_hint: 0.6,
            is_polynomial: false,
        }
    }

    pub fn identity() -> Self {
        Self {
            coeffs: vec![0.0, 1.0],
            radius_hint: f64::INFINITY,
            is_polynomial: true,
        }
    }

    pub fn square() -> Self {
        Self {
            coeffs: vec![0.0, 0.0, 1.0],
            radius_hint: f64::INFINITY,
            is_polynomial: true,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(match name {
            "exp" => Self::exp(),
            "sin" => Self::sin(),
            "cos" => Self::cos(),
            "geometric" => Self::geometric(),
            "identity" => Self::identity(),
            "square" => Self::square(),
            other => {
                return Err(Error::Domain(format!(
                    "unknown function '{other}', expected one of {}",
                    PRESET_NAMES.join(", ")
                )))
            }
        })
    }
}

/// Units `(a, b)` used for residual checks: circular, hyperbolic, a real
/// pair, Eisenstein, parabolic (`Δ = 0`) and the golden unit.
pub const STANDARD_UNITS: [(f64, f64); 6] = [
    (-1.0, 0.0),
    (1.0, 0.0),
    (2.0, 1.0),
    (-1.0, -1.0),
    (0.0, 0.0),
    (1.0, 1.0),
];

/// Points `(x, y)` small enough that every preset, including `1/(1 − z)`,
/// converges for every standard unit.
pub const STANDARD_POINTS: [(f64, f64); 3] = [(0.15, 0.1), (-0.1, 0.2), (0.2, -0.1)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticValue {
    pub u: f64,
    pub v: f64,
    /// The input lies outside `radius_hint` or the last term is not negligible.
    pub truncation_warning: bool,
}

/// `f(x + hy) = u + h·v` by Horner's scheme in hypercomplex arithmetic.
pub fn analytic_eval(f: &PowerSeries, z: &HypercomplexNumber) -> Result<AnalyticValue> {
    let k = f.coeffs.len() - 1;
    let mut acc = HypercomplexNumber {
        x: f.coeffs[k],
        y: 0.0,
        unit: z.unit,
    };
    for &c in f.coeffs[..k].iter().rev() {
        acc = hc_mul(&acc, z)?;
        acc.x += c;
    }
    let rho = z.norm_bound();
    let mut warn = rho > f.radius_hint;
    if !f.is_polynomial {
        let tail = f.coeffs[k].abs() * rho.powi(k as i32);
        let partial = acc.x.abs().max(acc.y.abs()).max(f64::MIN_POSITIVE);
        warn |= tail.is_nan() || tail >= 1e-13 * partial;
    }
    Ok(AnalyticValue {
        u: acc.x,
        v: acc.y,
        truncation_warning: warn,
    })
}

fn component(f: &PowerSeries, unit: QuadraticUnit, x: f64, y: f64, which: usize) -> f64 {
    let z = HypercomplexNumber { x, y, unit };
    // analytic_eval only fails on unit mismatch, impossible here
    let w = analytic_eval(f, &z).expect("single unit");
    if which == 0 {
        w.u
    } else {
        w.v
    }
}

/// Max-norm of `∂_y w − ĥ ∂_x w`, by central differences.
pub fn cauchy_riemann_residual(
    f: &PowerSeries,
    unit: &QuadraticUnit,
    x: f64,
    y: f64,
    step: f64,
) -> Result<f64> {
    ensure_finite("point", &[x, y])?;
    let unit = *unit;
    let dx = |which| fd_derivative(|s| component(f, unit, s, y, which), x, 1, step);
    let dy = |which| fd_derivative(|s| component(f, unit, x, s, which), y, 1, step);
    let (ux, vx, uy, vy) = (dx(0)?, dx(1)?, dy(0)?, dy(1)?);
    let r0 = uy - unit.a() * vx;
    let r1 = vy - ux - unit.b() * vx;
    Ok(r0.abs().max(r1.abs()))
}

/// Max over components of `|(∂_y² − a∂_x² − b∂_x∂_y) w|`, by central differences.
pub fn wave_pde_residual(
    f: &PowerSeries,
    unit: &QuadraticUnit,
    x: f64,
    y: f64,
    step: f64,
) -> Result<f64> {
    ensure_finite("point", &[x, y])?;
    let unit = *unit;
    let mut worst = 0.0f64;
    for which in 0..2 {
        let w = |px: f64, py: f64| component(f, unit, px, py, which);
        let dyy = fd_derivative(|s| w(x, s), y, 2, step)?;
        let dxx = fd_derivative(|s| w(s, y), x, 2, step)?;
        let dxy = fd_derivative(
            |t| fd_derivative(|s| w(s, t), x, 1, step).unwrap_or(f64::NAN),
            y,
            1,
            step,
        )?;
        worst = worst.max((dyy - unit.a() * dxx - unit.b() * dxy).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{expm_oracle, OracleConfig};

    fn hc(x: f64, y: f64, a: f64, b: f64) -> HypercomplexNumber {
        HypercomplexNumber::new(x, y, QuadraticUnit::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn unit_squares() {
        let i = hc(0.0, 1.0, -1.0, 0.0);
        let p = hc_mul(&i, &i).unwrap();
        assert_eq!((p.x, p.y), (-1.0, 0.0));
        let j = hc(0.0, 1.0, 1.0, 0.0);
        let p = hc_mul(&j, &j).unwrap();
        assert_eq!((p.x, p.y), (1.0, 0.0));
    }

    #[test]
    fn product_matches_matrix_representation() {
        let z1 = hc(1.0, 1.0, 2.0, 1.0);
        let z2 = hc(2.0, -1.0, 2.0, 1.0);
        let p = hc_mul(&z1, &z2).unwrap();
        assert_eq!((p.x, p.y), (0.0, 0.0)); // a zero divisor pair
        assert!(
            p.to_matrix()
                .max_abs_diff(&(&z1.to_matrix() * &z2.to_matrix()))
                < 1e-15
        );
    }

    #[test]
    fn unit_mismatch_is_rejected() {
        assert!(hc_mul(&hc(1.0, 0.0, -1.0, 0.0), &hc(1.0, 0.0, 1.0, 0.0)).is_err());
    }

    #[test]
    fn exponential_cases() {
        let t = 0.8;
        let e = hc_exp(&hc(0.0, t, -1.0, 0.0)).unwrap();
        assert_eq!((e.x, e.y), (t.cos(), t.sin()));
        let e = hc_exp(&hc(0.5, 0.0, 3.0, -2.0)).unwrap();
        assert_eq!((e.x, e.y), (0.5f64.exp(), 0.0));
        let z = hc(0.2, 0.5, 1.0, 1.0);
        let e = hc_exp(&z).unwrap();
        let o = expm_oracle(&z.to_matrix(), 1.0, &OracleConfig::default()).unwrap();
        assert!(e.to_matrix().max_abs_diff(&o) < 1e-13);
        assert!(hc_exp(&hc(800.0, 0.0, -1.0, 0.0)).is_err());
    }

    #[test]
    fn polynomial_series() {
        let z = hc(0.3, -0.7, 2.0, 1.0);
        let w = analytic_eval(&PowerSeries::identity(), &z).unwrap();
        assert_eq!((w.u, w.v, w.truncation_warning), (0.3, -0.7, false));
        let w = analytic_eval(&PowerSeries::square(), &z).unwrap();
        assert!((w.u - (0.09 + 2.0 * 0.49)).abs() < 1e-15);
        assert!((w.v - (2.0 * 0.3 * -0.7 + 0.49)).abs() < 1e-15);
    }

    #[test]
    fn exp_series_on_circular_unit() {
        let z = hc(0.4, 1.1, -1.0, 0.0);
        let w = analytic_eval(&PowerSeries::exp(), &z).unwrap();
        assert!((w.u - 0.4f64.exp() * 1.1f64.cos()).abs() < 1e-14);
        assert!((w.v - 0.4f64.exp() * 1.1f64.sin()).abs() < 1e-14);
        assert!(!w.truncation_warning);
    }

    #[test]
    fn geometric_series_outside_radius_warns() {
        let w = analytic_eval(&PowerSeries::geometric(), &hc(0.9, 0.0, -1.0, 0.0)).unwrap();
        assert!(w.truncation_warning);
        let w = analytic_eval(&PowerSeries::geometric(), &hc(0.1, 0.2, -1.0, 0.0)).unwrap();
        assert!(!w.truncation_warning);
    }

    #[test]
    fn residual_examples() {
        let circ = QuadraticUnit::CIRCULAR;
        let u21 = QuadraticUnit::new(2.0, 1.0).unwrap();
        assert!(
            cauchy_riemann_residual(&PowerSeries::identity(), &u21, 0.3, 0.4, 1e-4).unwrap()
                < 1e-10
        );
        assert!(
            cauchy_riemann_residual(&PowerSeries::square(), &u21, 0.3, 0.4, 1e-4).unwrap() < 1e-8
        );
        assert!(
            cauchy_riemann_residual(&PowerSeries::exp(), &circ, 0.3, 0.4, 1e-4).unwrap() < 1e-7
        );

        assert!(wave_pde_residual(&PowerSeries::identity(), &u21, 0.3, 0.4, 1e-3).unwrap() < 1e-9);
        assert!(wave_pde_residual(&PowerSeries::square(), &u21, 0.3, 0.4, 1e-3).unwrap() < 1e-6);
        let hyp = QuadraticUnit::HYPERBOLIC;
        assert!(wave_pde_residual(&PowerSeries::exp(), &hyp, 0.3, 0.4, 1e-3).unwrap() < 1e-4);
    }

    #[test]
    fn standard_set_converges() {
        for (a, b) in STANDARD_UNITS {
            for (x, y) in STANDARD_POINTS {
                for name in PRESET_NAMES {
                    let w = analytic_eval(&PowerSeries::preset(name).unwrap(), &hc(x, y, a, b))
                        .unwrap();
                    assert!(!w.truncation_warning, "{name} at ({x}, {y}) for ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn unknown_preset() {
        assert!(PowerSeries::preset("tan").is_err());
        for name in PRESET_NAMES {
            assert!(PowerSeries::preset(name).is_ok());
        }
    }
}
