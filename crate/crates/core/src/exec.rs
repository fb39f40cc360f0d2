//! Row-level scheduling for the pixel kernels.
//!
//! Every kernel writes one output row at a time from read-only inputs, so
//! rows can be computed in any order. With the `parallel` feature the rows
//! are distributed over the rayon pool; without it, or with
//! [`Exec::Sequential`], they are computed in order on the calling thread.
//! Both schedules produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a kernel distributes its output rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, falls
    /// back to [`Exec::Sequential`] otherwise.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

pub(crate) fn for_each_row<F>(out: &mut [f64], width: usize, exec: Exec, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => out
            .par_chunks_mut(width)
            .enumerate()
            .for_each(|(y, row)| f(y, row)),
        _ => out
            .chunks_mut(width)
            .enumerate()
            .for_each(|(y, row)| f(y, row)),
    }
}

pub(crate) fn map<F>(src: &[f64], exec: Exec, f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => src.par_iter().map(|&v| f(v)).collect(),
        _ => src.iter().map(|&v| f(v)).collect(),
    }
}

pub(crate) fn zip_map<F>(a: &[f64], b: &[f64], exec: Exec, f: F) -> Vec<f64>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => a
            .par_iter()
            .zip(b.par_iter())
            .map(|(&x, &y)| f(x, y))
            .collect(),
        _ => a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect(),
    }
}

pub(crate) fn try_zip_map<F, E>(a: &[f64], b: &[f64], exec: Exec, f: F) -> Result<Vec<f64>, E>
where
    F: Fn(f64, f64) -> Result<f64, E> + Sync + Send,
    E: Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => a
            .par_iter()
            .zip(b.par_iter())
            .map(|(&x, &y)| f(x, y))
            .collect(),
        _ => a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect(),
    }
}
