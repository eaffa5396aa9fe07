//! Generalized Euler identities.
//!
//! For a unit `h` with `h² = a + bh` the exponential splits as
//! `e^{hθ} = C(θ) + h S(θ)`; the same idea carries over to cubic units and,
//! through companion matrices, to any diagonalizable real matrix. The
//! [`oracles`] module holds brute-force reference implementations that the
//! closed forms are tested against and falls back to in degenerate cases.

pub mod batch;
pub mod bessel2;
pub mod companion;
pub mod cubic;
pub mod error;
pub mod gtrig;
pub mod hypercomplex;
mod interp;
pub mod matrix;
pub mod matrix_exp2;
pub mod oracles;
pub mod poly;

pub use batch::Exec;
pub use bessel2::BesselParams;
pub use companion::{char_poly, companion_matrix, exp_n, tlf_vector, ExpN, TlfVector};
pub use cubic::{CubicUnit, TlfTriple};
pub use error::{Error, Result};
pub use gtrig::{classify_conic, eval_cs, ConicClass, ConicKind, QuadraticUnit, TlfPair};
pub use hypercomplex::{analytic_eval, hc_exp, hc_mul, HypercomplexNumber, PowerSeries};
pub use matrix::SquareMatrix;
pub use matrix_exp2::{exp2, Matrix2Exp};
pub use poly::CharPoly;
