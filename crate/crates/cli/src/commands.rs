//! One function per subcommand, each returning a [`Report`].

use gentrig::batch::{linspace, tabulate_cs, Exec};
use gentrig::bessel2::{
    bessel2_derivative, bessel2_eval, bessel2_theta_recurrence_residual,
    bessel2_x_recurrence_residual,
};
use gentrig::cubic::{cubic_identity_residual2, eval_a2};
use gentrig::hypercomplex::{cauchy_riemann_residual, wave_pde_residual};
use gentrig::matrix_exp2::det_identity_residual;
use gentrig::{
    analytic_eval, classify_conic, exp2, exp_n, BesselParams, CubicUnit, HypercomplexNumber,
    PowerSeries, QuadraticUnit, SquareMatrix,
};

use crate::error::{CliError, CliResult};
use crate::output::{Field, Report};

/// Steps beyond this are almost certainly a typo.
pub const MAX_STEPS: usize = 10_000_000;

pub fn tlf(a: f64, b: f64, theta_min: f64, theta_max: f64, steps: usize) -> CliResult<Report> {
    if steps > MAX_STEPS {
        return Err(CliError::Input(format!(
            "--steps must be at most {MAX_STEPS}"
        )));
    }
    if !(theta_min.is_finite() && theta_max.is_finite()) || theta_min > theta_max {
        return Err(CliError::Input(
            "need finite --theta-min <= --theta-max".into(),
        ));
    }
    let unit = QuadraticUnit::new(a, b)?;
    let thetas = linspace(theta_min, theta_max, steps);
    let rows = tabulate_cs(&unit, &thetas, Exec::Sequential)
        .into_iter()
        .map(|r| {
            r.map(|p| {
                vec![
                    ("theta", Field::Num(p.theta)),
                    ("c", Field::Num(p.c)),
                    ("s", Field::Num(p.s)),
                ]
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        fields: vec![("a", Field::Num(a)), ("b", Field::Num(b))],
        rows: Some(rows),
    })
}

pub fn expm(m: &SquareMatrix, theta: f64) -> CliResult<Report> {
    let n = m.dim();
    let mut fields = vec![("n", Field::Int(n as i64)), ("theta", Field::Num(theta))];
    if n == 2 {
        let e = exp2(m, theta)?;
        fields.push(("matrix", Field::Matrix(e.u.rows())));
        fields.push(("c", Field::Num(e.cs.c)));
        fields.push(("s", Field::Num(e.cs.s)));
        fields.push(("lambda", Field::Num(e.lambda)));
        fields.push((
            "det_identity_residual",
            Field::Num(det_identity_residual(m, theta)?),
        ));
    } else {
        let e = exp_n(m, theta)?;
        let residual = (e.u.det() - (theta * m.trace()).exp()).abs();
        fields.push(("matrix", Field::Matrix(e.u.rows())));
        fields.push(("tlf_vector", Field::List(e.tlf.values.clone())));
        fields.push(("degraded", Field::Bool(e.degraded || e.tlf.near_degenerate)));
        fields.push(("det_identity_residual", Field::Num(residual)));
    }
    Ok(Report { fields, rows: None })
}

pub fn conic(m: &SquareMatrix) -> CliResult<Report> {
    let c = classify_conic(m, gentrig::gtrig::DEFAULT_CONIC_TOL)?;
    Ok(Report {
        fields: vec![
            ("delta", Field::Num(c.delta)),
            ("kind", Field::Text(c.kind.as_str().into())),
            ("chi", Field::Num(c.chi)),
            ("chi_defined", Field::Bool(c.chi_defined)),
        ],
        rows: None,
    })
}

pub fn cubic(a0: f64, a1: f64, a2: f64, theta: f64, phi: f64) -> CliResult<Report> {
    let u = CubicUnit::new(a0, a1, a2)?;
    let t = eval_a2(&u, theta, phi)?;
    let residual = cubic_identity_residual2(&u, theta, phi)?;
    Ok(Report {
        fields: vec![
            ("a0", Field::Num(a0)),
            ("a1", Field::Num(a1)),
            ("a2", Field::Num(a2)),
            ("theta", Field::Num(theta)),
            ("phi", Field::Num(phi)),
            ("tlf", Field::List(t.values.to_vec())),
            ("identity_residual", Field::Num(residual)),
            ("near_degenerate", Field::Bool(t.near_degenerate)),
        ],
        rows: None,
    })
}

pub fn bessel(alpha: f64, beta: f64, m: i64, n: i64, x: f64) -> CliResult<Report> {
    let p = BesselParams::new(alpha, beta)?;
    Ok(Report {
        fields: vec![
            ("alpha", Field::Num(alpha)),
            ("beta", Field::Num(beta)),
            ("m", Field::Int(m)),
            ("n", Field::Int(n)),
            ("x", Field::Num(x)),
            ("value", Field::Num(bessel2_eval(&p, m, n, x)?)),
            ("derivative", Field::Num(bessel2_derivative(&p, m, n, x)?)),
            (
                "x_recurrence_residual",
                Field::Num(bessel2_x_recurrence_residual(&p, m, n, x)?),
            ),
            (
                "theta_recurrence_residual",
                Field::Num(bessel2_theta_recurrence_residual(&p, m, n, x)?),
            ),
        ],
        rows: None,
    })
}

pub struct HyperArgs<'a> {
    pub unit_a: f64,
    pub unit_b: f64,
    pub function: &'a str,
    pub x: f64,
    pub y: f64,
    pub cr_step: f64,
    pub pde_step: f64,
}

pub fn hyper(args: &HyperArgs) -> CliResult<Report> {
    if !(args.cr_step > 0.0 && args.pde_step > 0.0) {
        return Err(CliError::Input(
            "finite-difference steps must be positive".into(),
        ));
    }
    let unit = QuadraticUnit::new(args.unit_a, args.unit_b)?;
    let f = PowerSeries::preset(args.function)?;
    let z = HypercomplexNumber::new(args.x, args.y, unit)?;
    let w = analytic_eval(&f, &z)?;
    Ok(Report {
        fields: vec![
            ("unit_a", Field::Num(args.unit_a)),
            ("unit_b", Field::Num(args.unit_b)),
            ("fn", Field::Text(args.function.into())),
            ("x", Field::Num(args.x)),
            ("y", Field::Num(args.y)),
            ("u", Field::Num(w.u)),
            ("v", Field::Num(w.v)),
            ("truncation_warning", Field::Bool(w.truncation_warning)),
            (
                "cr_residual",
                Field::Num(cauchy_riemann_residual(
                    &f,
                    &unit,
                    args.x,
                    args.y,
                    args.cr_step,
                )?),
            ),
            (
                "pde_residual",
                Field::Num(wave_pde_residual(&f, &unit, args.x, args.y, args.pde_step)?),
            ),
        ],
        rows: None,
    })
}
