use gentrig::bessel2::{
    bessel2_eval, bessel2_theta_recurrence_residual, bessel2_x_recurrence_residual,
};
use gentrig::cubic::{cubic_roots, eval_a, exp_rotation_generator};
use gentrig::gtrig::{add_angles, unit_roots};
use gentrig::hypercomplex::{hc_add, hc_mul};
use gentrig::matrix_exp2::conic_coordinates;
use gentrig::oracles::{expm_oracle, fd_derivative, poly_roots, OracleConfig};
use gentrig::{
    char_poly, companion_matrix, eval_cs, exp2, exp_n, BesselParams, CharPoly, CubicUnit,
    HypercomplexNumber, QuadraticUnit, SquareMatrix,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = QuadraticUnit> {
    (-4.0..4.0f64, -4.0..4.0f64).prop_map(|(a, b)| QuadraticUnit::new(a, b).unwrap())
}

fn cubic_unit() -> impl Strategy<Value = CubicUnit> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64)
        .prop_map(|(a0, a1, a2)| CubicUnit::new(a0, a1, a2).unwrap())
}

fn matrix(n: usize, bound: f64) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(-bound..bound, n * n).prop_map(move |d| SquareMatrix::new(n, d).unwrap())
}

fn scale_of(c: f64, s: f64) -> f64 {
    1.0 + c.abs() + s.abs()
}

proptest! {
    #[test]
    fn unit_roots_solve_the_defining_equation(u in unit()) {
        let (r1, r2, _) = unit_roots(&u);
        for h in [r1, r2] {
            let res = h * h - u.a() - h * u.b();
            prop_assert!(res.norm() < 1e-12 * (1.0 + h.norm_sqr() + u.a().abs()));
        }
    }

    #[test]
    fn tlfs_solve_the_ode(u in unit(), t in -3.0..3.0f64) {
        let p = eval_cs(&u, t).unwrap();
        let dc = fd_derivative(|s| eval_cs(&u, s).unwrap().c, t, 1, 1e-5).unwrap();
        let ds = fd_derivative(|s| eval_cs(&u, s).unwrap().s, t, 1, 1e-5).unwrap();
        let scale = 1.0f64.max(p.c.abs()).max(p.s.abs());
        prop_assert!((dc - u.a() * p.s).abs() < 1e-7 * scale);
        prop_assert!((ds - p.c - u.b() * p.s).abs() < 1e-7 * scale);
    }

    #[test]
    fn addition_formula(u in unit(), t1 in -3.0..3.0f64, t2 in -3.0..3.0f64) {
        let p1 = eval_cs(&u, t1).unwrap();
        let p2 = eval_cs(&u, t2).unwrap();
        let sum = add_angles(&u, &p1, &p2);
        let want = eval_cs(&u, t1 + t2).unwrap();
        // the products in the formula can exceed the result by a lot
        let scale = scale_of(p1.c, p1.s) * scale_of(p2.c, p2.s) * (1.0 + u.a().abs() + u.b().abs());
        prop_assert!((sum.c - want.c).abs() < 1e-10 * scale);
        prop_assert!((sum.s - want.s).abs() < 1e-10 * scale);
    }

    #[test]
    fn evolution_lies_on_the_conic(m in matrix(2, 3.0), t in -2.0..2.0f64) {
        let (x, y) = conic_coordinates(&m, t).unwrap();
        let (tr, det) = (m.trace(), m.det());
        let terms = x * x + (tr * x * y).abs() + (det * y * y).abs();
        prop_assert!((x * x + tr * x * y + det * y * y - 1.0).abs() < 1e-10 * terms);
    }

    #[test]
    fn confluence_is_continuous(b in -3.0..3.0f64, eps in 1e-8..1e-4f64, t in -2.0..2.0f64) {
        let a = -b * b / 4.0;
        let exact = eval_cs(&QuadraticUnit::new(a, b).unwrap(), t).unwrap();
        for near in [a + eps, a - eps] {
            let p = eval_cs(&QuadraticUnit::new(near, b).unwrap(), t).unwrap();
            let tol = 10.0 * eps.sqrt() * scale_of(exact.c, exact.s);
            prop_assert!((p.c - exact.c).abs() < tol && (p.s - exact.s).abs() < tol);
        }
    }

    #[test]
    fn exp2_matches_oracle(m in matrix(2, 3.0), t in -2.0..2.0f64) {
        let e = exp2(&m, t).unwrap();
        let o = expm_oracle(&m, t, &OracleConfig::default()).unwrap();
        prop_assert!(e.u.max_abs_diff(&o) < 1e-9 * o.max_abs());
    }

    #[test]
    fn exp2_semigroup(m in matrix(2, 2.0), t1 in -1.0..1.0f64, t2 in -1.0..1.0f64) {
        let u1 = exp2(&m, t1).unwrap().u;
        let u2 = exp2(&m, t2).unwrap().u;
        let u12 = exp2(&m, t1 + t2).unwrap().u;
        let scale = u1.max_abs() * u2.max_abs();
        prop_assert!((&u1 * &u2).max_abs_diff(&u12) < 1e-12 * scale);
    }

    #[test]
    fn companion_shares_the_polynomial(tail in prop::collection::vec(-2.0..2.0f64, 1..7)) {
        let p = CharPoly::from_tail(&tail).unwrap();
        let q = char_poly(&companion_matrix(&p)).unwrap();
        for (x, y) in p.coeffs().iter().zip(q.coeffs()) {
            prop_assert!((x - y).abs() < 1e-10 * (1.0 + x.abs()));
        }
    }

    #[test]
    fn char_poly_constant_term_is_the_determinant(m in matrix(4, 2.0)) {
        let p = char_poly(&m).unwrap();
        let det = m.det();
        prop_assert!((p.coeffs()[4] - det).abs() < 1e-10 * (1.0 + det.abs()));
    }

    #[test]
    fn exp_n_determinant_law(m in matrix(4, 1.5), t in -1.0..1.0f64) {
        let e = exp_n(&m, t).unwrap();
        let want = (t * m.trace()).exp();
        prop_assert!((e.u.det() - want).abs() < 1e-7 * want);
    }

    #[test]
    fn exp_n_semigroup(m in matrix(3, 1.5), t1 in -0.8..0.8f64, t2 in -0.8..0.8f64) {
        let u1 = exp_n(&m, t1).unwrap();
        let u2 = exp_n(&m, t2).unwrap();
        let u12 = exp_n(&m, t1 + t2).unwrap();
        prop_assume!(!(u1.degraded || u2.degraded || u12.degraded));
        let scale = u1.u.max_abs() * u2.u.max_abs();
        prop_assert!((&u1.u * &u2.u).max_abs_diff(&u12.u) < 1e-8 * scale);
    }

    #[test]
    fn cubic_roots_satisfy_vieta(u in cubic_unit()) {
        let [e1, e2, e3] = cubic_roots(&u).unwrap();
        let scale = 1.0 + e1.norm() + e2.norm() + e3.norm();
        prop_assert!(((e1 + e2 + e3).re - u.a2).abs() < 1e-9 * scale);
        prop_assert!(((e1 * e2 + e1 * e3 + e2 * e3).re + u.a1).abs() < 1e-9 * scale * scale);
        prop_assert!(((e1 * e2 * e3).re - u.a0).abs() < 1e-9 * scale.powi(3));
    }

    #[test]
    fn cubic_tlfs_reconstruct_the_exponential(u in cubic_unit(), t in -3.0..3.0f64) {
        let a = eval_a(&u, t).unwrap();
        prop_assume!(!a.near_degenerate);
        for eta in cubic_roots(&u).unwrap() {
            let rebuilt = a.values[0] + eta * a.values[1] + eta * eta * a.values[2];
            let want = (eta * t).exp();
            let scale = 1.0 + a.values.iter().map(|v| v.abs()).sum::<f64>() * (1.0 + eta.norm_sqr());
            prop_assert!((rebuilt - want).norm() < 1e-10 * scale);
        }
    }

    #[test]
    fn cubic_evolution_matches_oracle(u in cubic_unit(), t in -3.0..3.0f64) {
        let a = eval_a(&u, t).unwrap();
        let o = expm_oracle(&u.matrix(), t, &OracleConfig::default()).unwrap();
        let col = o.column(0);
        let tol = if a.near_degenerate { 1e-6 } else { 1e-9 };
        let scale = col.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (v, c) in a.values.iter().zip(&col) {
            prop_assert!((v - c).abs() < tol * scale);
        }
    }

    #[test]
    fn rotations_are_orthogonal(nu in prop::array::uniform3(-3.0..3.0f64), t in -4.0..4.0f64) {
        let r = exp_rotation_generator(nu, t).unwrap();
        prop_assert!((&r * &r.transpose()).max_abs_diff(&SquareMatrix::identity(3)) < 1e-12);
        prop_assert!((r.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bessel_recurrences_and_signs(
        alpha in -2.0..2.0f64,
        gap in 0.1..3.0f64,
        x in -2.0..2.0f64,
        m in 0i64..9,
        n in 0i64..9,
    ) {
        let beta = alpha - gap;
        let p = BesselParams::new(alpha, beta).unwrap();
        let b = bessel2_eval(&p, m, n, x).unwrap();
        let left = bessel2_eval(&p, m - 1, n, x).unwrap();
        let down = bessel2_eval(&p, m, n - 1, x).unwrap();
        prop_assert!(bessel2_x_recurrence_residual(&p, m, n, x).unwrap() < 1e-12 * (1.0 + left.abs() + down.abs()));
        let lhs = (alpha * m as f64 + beta * n as f64) * b;
        prop_assert!(bessel2_theta_recurrence_residual(&p, m, n, x).unwrap() < 1e-12 * (1.0 + lhs.abs()));
        if x != 0.0 && b != 0.0 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 } * x.powi((m + n) as i32).signum();
            prop_assert_eq!(b.signum(), sign);
        }
        prop_assert_eq!(bessel2_eval(&p, -1 - m, n, x).unwrap(), 0.0);
        prop_assert_eq!(bessel2_eval(&p, m, -1 - n, x).unwrap(), 0.0);
    }

    #[test]
    fn hypercomplex_ring_laws(
        (a, b) in (-2.0..2.0f64, -2.0..2.0f64),
        v in prop::array::uniform6(-1.0..1.0f64),
    ) {
        let u = QuadraticUnit::new(a, b).unwrap();
        let z = |x, y| HypercomplexNumber::new(x, y, u).unwrap();
        let (z1, z2, z3) = (z(v[0], v[1]), z(v[2], v[3]), z(v[4], v[5]));
        prop_assert_eq!(hc_mul(&z1, &z2).unwrap(), hc_mul(&z2, &z1).unwrap());
        let l = hc_mul(&hc_mul(&z1, &z2).unwrap(), &z3).unwrap();
        let r = hc_mul(&z1, &hc_mul(&z2, &z3).unwrap()).unwrap();
        prop_assert!((l.x - r.x).abs() < 1e-13 && (l.y - r.y).abs() < 1e-13);
        let l = hc_mul(&z1, &hc_add(&z2, &z3).unwrap()).unwrap();
        let r = hc_add(&hc_mul(&z1, &z2).unwrap(), &hc_mul(&z1, &z3).unwrap()).unwrap();
        prop_assert!((l.x - r.x).abs() < 1e-13 && (l.y - r.y).abs() < 1e-13);
        let m = hc_mul(&z1, &z2).unwrap().to_matrix();
        prop_assert!(m.max_abs_diff(&(&z1.to_matrix() * &z2.to_matrix())) < 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_semigroup(m in matrix(4, 1.0), t1 in -1.0..1.0f64, t2 in -1.0..1.0f64) {
        let cfg = OracleConfig::default();
        let e1 = expm_oracle(&m, t1, &cfg).unwrap();
        let e2 = expm_oracle(&m, t2, &cfg).unwrap();
        let e12 = expm_oracle(&m, t1 + t2, &cfg).unwrap();
        prop_assert!((&e1 * &e2).max_abs_diff(&e12) < 1e-12 * e1.max_abs() * e2.max_abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn root_finder_residuals(tail in prop::collection::vec(-1.0..1.0f64, 1..9)) {
        let p = CharPoly::from_tail(&tail).unwrap();
        let roots = poly_roots(&p, &OracleConfig::default()).unwrap();
        prop_assert_eq!(roots.len(), tail.len());
        let bound = 1e-12 * (1.0 + p.max_abs_tail());
        for r in &roots {
            prop_assert!(p.eval(*r).norm() < bound, "|P({})| = {:e}", r, p.eval(*r).norm());
        }
        let sum: Complex64 = roots.iter().sum();
        prop_assert!((sum.re + tail[0]).abs() < 1e-9 && sum.im.abs() < 1e-9);
    }
}
