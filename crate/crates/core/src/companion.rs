//! `e^{θQ}` for an `n×n` matrix through its companion matrix.
//!
//! With `L` the companion of the characteristic polynomial of `Q` and
//! `e = (1, 0, …, 0)ᵀ`, `e^{θQ} = Σ_k Q^k (e^{θL}e)_k`. The vector `e^{θL}e`
//! holds the `n` TLFs of `Q`: the coefficients of the polynomial that
//! interpolates `e^{θλ}` on the eigenvalues.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::interp::{interpolate, min_separation, realize};
use crate::matrix::SquareMatrix;
use crate::oracles::{expm_oracle, poly_roots, OracleConfig};
pub use crate::poly::CharPoly;

pub const MAX_DIM: usize = 12;
/// Eigenvalue separation below which `exp_n` reports degraded accuracy.
pub const SEPARATION_WARNING: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct TlfVector {
    /// `e^{θL}e`.
    pub values: Vec<f64>,
    pub theta: f64,
    /// Computed from `e^{θL}` directly because the Vandermonde system was too ill-conditioned.
    pub near_degenerate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpN {
    pub u: SquareMatrix,
    pub tlf: TlfVector,
    /// Minimum eigenvalue separation is below `SEPARATION_WARNING`.
    pub degraded: bool,
}

fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::Dimension {
            expected: format!("n <= {MAX_DIM}"),
            got: format!("n = {n}"),
        });
    }
    Ok(())
}

/// Monic characteristic polynomial by the Faddeev–LeVerrier trace recursion.
pub fn char_poly(q: &SquareMatrix) -> Result<CharPoly> {
    let n = q.dim();
    check_dim(n)?;
    let identity = SquareMatrix::identity(n);
    let mut coeffs = vec![1.0];
    let mut m = identity.clone();
    for k in 1..=n {
        let qm = q * &m;
        let pk = -qm.trace() / k as f64;
        coeffs.push(pk);
        m = qm.add_scaled(pk, &identity);
    }
    CharPoly::new(coeffs)
}

/// Unit subdiagonal, last column `(−p_n, …, −p₁)ᵀ`.
pub fn companion_matrix(p: &CharPoly) -> SquareMatrix {
    let n = p.degree();
    let c = p.coeffs();
    let mut l = SquareMatrix::zeros(n);
    for i in 1..n {
        l[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        l[(i, n - 1)] = -c[n - i];
    }
    l
}

/// `e^{θL}e`, by interpolation on the roots of `p` when that is well conditioned,
/// otherwise from the Taylor exponential of `L`.
pub fn tlf_vector(p: &CharPoly, theta: f64) -> Result<TlfVector> {
    Ok(tlf_vector_with_roots(p, theta)?.0)
}

fn tlf_vector_with_roots(p: &CharPoly, theta: f64) -> Result<(TlfVector, Vec<Complex64>)> {
    ensure_finite("theta", &[theta])?;
    let n = p.degree();
    check_dim(n)?;
    let roots = poly_roots(p, &OracleConfig::default())?;
    if theta == 0.0 {
        let mut values = vec![0.0; n];
        values[0] = 1.0;
        return Ok((
            TlfVector {
                values,
                theta,
                near_degenerate: false,
            },
            roots,
        ));
    }

    let scale = 1.0 + roots.iter().fold(0.0f64, |m, r| m.max(r.norm()));
    if min_separation(&roots) > 1e-7 * scale {
        let y: Vec<Complex64> = roots.iter().map(|r| (r * theta).exp()).collect();
        let interp = interpolate(&roots, &y);
        if interp.is_accurate() {
            let values = realize(&interp.coeffs, 1e-10, 10.0 * interp.error_bound)?;
            return Ok((
                TlfVector {
                    values,
                    theta,
                    near_degenerate: false,
                },
                roots,
            ));
        }
    }
    let e = expm_oracle(&companion_matrix(p), theta, &OracleConfig::default())?;
    Ok((
        TlfVector {
            values: e.column(0),
            theta,
            near_degenerate: true,
        },
        roots,
    ))
}

/// `Σ_{k<n} Q^k (e^{θL}e)_k`.
pub fn exp_n(q: &SquareMatrix, theta: f64) -> Result<ExpN> {
    let p = char_poly(q)?;
    let (tlf, roots) = tlf_vector_with_roots(&p, theta)?;
    let n = q.dim();
    let scale = 1.0 + roots.iter().fold(0.0f64, |m, r| m.max(r.norm()));
    let degraded = n > 1 && min_separation(&roots) < SEPARATION_WARNING * scale;

    let mut u = SquareMatrix::zeros(n);
    let mut power = SquareMatrix::identity(n);
    for (k, &r) in tlf.values.iter().enumerate() {
        if k > 0 {
            power = &power * q;
        }
        u = u.add_scaled(r, &power);
    }
    if u.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(Error::Range("matrix exponential overflows".into()));
    }
    Ok(ExpN { u, tlf, degraded })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::interleaved_exp_series;

    #[test]
    fn char_poly_examples() {
        let (a, b) = (0.7, -1.3);
        let h = SquareMatrix::new(2, vec![0.0, a, 1.0, b]).unwrap();
        let p = char_poly(&h).unwrap();
        assert_eq!(p.coeffs(), &[1.0, -b, -a]);

        let p = char_poly(&SquareMatrix::identity(4)).unwrap();
        assert_eq!(p.coeffs(), &[1.0, -4.0, 6.0, -4.0, 1.0]);

        let p = char_poly(&SquareMatrix::diag(&[1.0, 2.0, 3.0])).unwrap();
        assert_eq!(p.coeffs(), &[1.0, -6.0, 11.0, -6.0]);
    }

    #[test]
    fn last_coefficient_is_signed_determinant() {
        let q = SquareMatrix::from_rows(&[[1.0, 2.0, 0.5], [-1.0, 0.3, 2.0], [0.2, 0.1, -0.7]])
            .unwrap();
        let p = char_poly(&q).unwrap();
        assert!((p.coeffs()[3] + q.det()).abs() < 1e-12);
        assert!(char_poly(&SquareMatrix::zeros(13)).is_err());
    }

    #[test]
    fn companion_structure() {
        let (a, b) = (2.0, -0.5);
        let l = companion_matrix(&CharPoly::from_tail(&[-b, -a]).unwrap());
        assert_eq!(l, SquareMatrix::from_rows(&[[0.0, a], [1.0, b]]).unwrap());

        let (a0, a1, a2) = (0.3, -1.0, 2.0);
        let l = companion_matrix(&CharPoly::from_tail(&[-a2, -a1, -a0]).unwrap());
        assert_eq!(
            l,
            SquareMatrix::from_rows(&[[0.0, 0.0, a0], [1.0, 0.0, a1], [0.0, 1.0, a2]]).unwrap()
        );

        let l = companion_matrix(&CharPoly::from_tail(&[-4.5]).unwrap());
        assert_eq!(l, SquareMatrix::from_rows(&[[4.5]]).unwrap());

        // characteristic polynomial round trip
        let p = CharPoly::from_tail(&[0.5, -2.0, 1.0, 3.0]).unwrap();
        let back = char_poly(&companion_matrix(&p)).unwrap();
        for (x, y) in back.coeffs().iter().zip(p.coeffs()) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn circular_companion_tlfs() {
        let t = 1.2;
        let v = tlf_vector(&CharPoly::from_tail(&[0.0, 1.0]).unwrap(), t).unwrap();
        assert!((v.values[0] - t.cos()).abs() < 1e-15 && (v.values[1] - t.sin()).abs() < 1e-15);
    }

    #[test]
    fn interleaved_series_tlfs() {
        for n in [3usize, 4] {
            let mut tail = vec![0.0; n];
            tail[n - 1] = -1.0; // λⁿ − 1
            let p = CharPoly::from_tail(&tail).unwrap();
            for t in [0.5, 1.7] {
                let v = tlf_vector(&p, t).unwrap();
                for k in 0..n {
                    let want = interleaved_exp_series(n, k, t, 1e-17).unwrap();
                    assert!((v.values[k] - want).abs() < 1e-13, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn diagonal_and_rotation() {
        let t = 0.6;
        let e = exp_n(&SquareMatrix::diag(&[1.0, 2.0]), t).unwrap();
        assert!(e.u.max_abs_diff(&SquareMatrix::diag(&[t.exp(), (2.0 * t).exp()])) < 1e-14);

        let j = SquareMatrix::from_rows(&[[0.0, -1.0], [1.0, 0.0]]).unwrap();
        let e = exp_n(&j, t).unwrap();
        let want = SquareMatrix::from_rows(&[[t.cos(), -t.sin()], [t.sin(), t.cos()]]).unwrap();
        assert!(e.u.max_abs_diff(&want) < 1e-15);
        assert!(!e.degraded);
    }

    #[test]
    fn zero_angle_and_scalar() {
        let q =
            SquareMatrix::from_rows(&[[1.0, 2.0, 0.0], [0.0, -1.0, 1.0], [3.0, 0.0, 0.5]]).unwrap();
        let e = exp_n(&q, 0.0).unwrap();
        assert_eq!(e.tlf.values, vec![1.0, 0.0, 0.0]);
        assert_eq!(e.u, SquareMatrix::identity(3));
        let e = exp_n(&SquareMatrix::from_rows(&[[-0.4]]).unwrap(), 2.0).unwrap();
        assert!((e.u[(0, 0)] - (-0.8f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn repeated_eigenvalues_fall_back() {
        let q = SquareMatrix::diag(&[0.5, 0.5, -1.0]);
        let e = exp_n(&q, 1.3).unwrap();
        assert!(e.degraded && e.tlf.near_degenerate);
        let o = expm_oracle(&q, 1.3, &OracleConfig::default()).unwrap();
        assert!(e.u.max_abs_diff(&o) < 1e-8 * o.max_abs());
    }
}
