//! Power iteration for positive semidefinite operators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct PowerOutcome {
    pub value: f64,
    /// Unit eigenvector estimate.
    pub vector: Vec<f64>,
    /// `||A v - value v||_2`.
    pub residual: f64,
    pub iterations: usize,
    /// Rayleigh quotient after each iteration.
    pub trace: Vec<f64>,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Dominant eigenpair of a symmetric PSD operator given by `apply(x, out)`.
///
/// The start vector is drawn uniformly from `[-1, 1]^n` with a seeded
/// ChaCha8 stream, so runs are reproducible.
pub fn power_iteration<F>(apply: F, n: usize, tol: f64, max_iter: usize, seed: u64) -> Result<PowerOutcome>
where
    F: Fn(&[f64], &mut [f64]),
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let nx = norm(&x);
    if nx == 0.0 {
        return Err(Error::ZeroFunction);
    }
    x.iter_mut().for_each(|v| *v /= nx);

    let mut y = vec![0.0; n];
    let mut trace = Vec::new();
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iter {
        apply(&x, &mut y);
        let value: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - value * a).powi(2))
            .sum::<f64>()
            .sqrt();
        trace.push(value);
        if residual <= tol {
            return Ok(PowerOutcome { value, vector: x, residual, iterations: iteration, trace });
        }
        let ny = norm(&y);
        if ny == 0.0 {
            // x sits in the kernel; zero is then the whole spectrum it sees.
            return Ok(PowerOutcome { value: 0.0, vector: x, residual: 0.0, iterations: iteration, trace });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    Err(Error::NoConvergence { iterations: max_iter, residual })
}
