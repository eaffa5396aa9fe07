//! Batch evaluation over many inputs.
//!
//! With the `parallel` feature the work is spread over the rayon pool;
//! without it every [`Exec`] falls back to a plain sequential loop. Results
//! are identical either way since each item is evaluated independently.

use crate::companion::{exp_n, ExpN};
use crate::error::Result;
use crate::gtrig::{eval_cs, QuadraticUnit, TlfPair};
use crate::matrix::SquareMatrix;
use crate::matrix_exp2::{exp2, Matrix2Exp};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether `Parallel` actually runs on multiple threads in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Applies `f` to every item, preserving order. Errors are reported per item.
pub fn map_batch<T, R, F>(items: &[T], exec: Exec, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

pub fn tabulate_cs(unit: &QuadraticUnit, thetas: &[f64], exec: Exec) -> Vec<Result<TlfPair>> {
    map_batch(thetas, exec, |&t| eval_cs(unit, t))
}

/// `thetas` evenly spaced over `[min, max]`, `steps` intervals.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps == 0 {
        return vec![min];
    }
    let h = (max - min) / steps as f64;
    (0..=steps)
        .map(|i| if i == steps { max } else { min + h * i as f64 })
        .collect()
}

pub fn exp2_batch(mats: &[SquareMatrix], theta: f64, exec: Exec) -> Vec<Result<Matrix2Exp>> {
    map_batch(mats, exec, |m| exp2(m, theta))
}

pub fn exp_n_batch(mats: &[SquareMatrix], theta: f64, exec: Exec) -> Vec<Result<ExpN>> {
    map_batch(mats, exec, |m| exp_n(m, theta))
}
