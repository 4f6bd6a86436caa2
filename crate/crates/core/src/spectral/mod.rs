//! Degree-weighted inner products, Dirichlet forms and the top of the
//! spectrum of the graphon Laplacian `Δ = I - (1/d_W) T_W`.
//!
//! On step functions `Δ` acts through the `m x m` matrix
//! `I - D^{-1} K / m`; its symmetrization `I - D^{-1/2} K D^{-1/2} / m` has
//! the same spectrum. Functions with zero mean on every cell are killed by
//! `T_W`, so `Δ` is the identity there and the top of the spectrum is the
//! larger of 1 and the largest matrix eigenvalue.

mod jacobi;
mod power;

pub use jacobi::{jacobi_eigen, jacobi_symmetric_eigs, SymmetricEigen, DENSE_LIMIT};
pub use power::{power_iteration, PowerOutcome};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphon::{graph_is_connected, is_connected, Graphon, WeightedGraph};
use crate::grid::GridFunction;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// A matrix eigenvalue this close below 1 still counts as attaining the top
/// of the spectrum with a step-function eigenfunction.
const ATTAIN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Jacobi,
    Power,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub lambda_max: f64,
    /// ν-normalized eigenfunction; absent when the top of the spectrum
    /// comes from the complement of step functions.
    pub eigenfunction: Option<GridFunction>,
    /// ν-norm of `Δf - λf` (0 when no eigenfunction is reported).
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
    /// Grid resolution (number of vertices for graphs).
    pub grid: usize,
}

fn check_len(w: &Graphon, f: &GridFunction) -> Result<()> {
    if f.len() != w.m() {
        return Err(Error::LengthMismatch { expected: w.m(), got: f.len() });
    }
    Ok(())
}

/// `<f, g>_v = (1/m) sum_i f[i] g[i] d[i]`.
pub fn inner_v(w: &Graphon, f: &GridFunction, g: &GridFunction) -> Result<f64> {
    check_len(w, f)?;
    check_len(w, g)?;
    let s: f64 = f
        .values()
        .iter()
        .zip(g.values())
        .zip(w.degrees())
        .map(|((a, b), d)| a * b * d)
        .sum();
    Ok(s / w.m() as f64)
}

/// `||df||_e^2 = (1/(2 m^2)) sum_{i,j} (f[i] - f[j])^2 kernel[i][j]`.
pub fn dirichlet(w: &Graphon, f: &GridFunction) -> Result<f64> {
    check_len(w, f)?;
    let (m, v) = (w.m(), f.values());
    let mut s = 0.0;
    for i in 0..m {
        for j in 0..m {
            let diff = v[i] - v[j];
            s += diff * diff * w.value(i, j);
        }
    }
    Ok(s / (2 * m * m) as f64)
}

/// `(1/m^2) sum_{i,j} (f[i] + f[j])^2 kernel[i][j]`.
pub fn antidirichlet(w: &Graphon, f: &GridFunction) -> Result<f64> {
    check_len(w, f)?;
    let (m, v) = (w.m(), f.values());
    let mut s = 0.0;
    for i in 0..m {
        for j in 0..m {
            let sum = v[i] + v[j];
            s += sum * sum * w.value(i, j);
        }
    }
    Ok(s / (m * m) as f64)
}

pub fn rayleigh(w: &Graphon, f: &GridFunction) -> Result<f64> {
    let norm = inner_v(w, f, f)?;
    if !(norm > 0.0) {
        return Err(Error::ZeroFunction);
    }
    Ok(dirichlet(w, f)? / norm)
}

/// `Δf = f - (1/d) T_W f` on step functions.
pub fn apply_laplacian(w: &Graphon, f: &GridFunction) -> Result<GridFunction> {
    check_len(w, f)?;
    let (m, v) = (w.m(), f.values());
    let mf = m as f64;
    let out = (0..m)
        .map(|i| {
            let tf: f64 = (0..m).map(|j| w.value(i, j) * v[j]).sum::<f64>() / mf;
            v[i] - tf / w.degrees()[i]
        })
        .collect();
    Ok(GridFunction::new(out))
}

/// Flips the sign so the entry of largest magnitude (first on ties) is positive.
fn fix_sign(v: &mut [f64]) {
    let mut best = 0;
    for i in 1..v.len() {
        if v[i].abs() > v[best].abs() {
            best = i;
        }
    }
    if v.get(best).is_some_and(|&x| x < 0.0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Maps `g` back through `f = g / sqrt(d)` and ν-normalizes.
fn to_eigenfunction(w: &Graphon, mut g: Vec<f64>) -> Result<GridFunction> {
    fix_sign(&mut g);
    let raw: Vec<f64> = g.iter().zip(w.degrees()).map(|(x, d)| x / d.sqrt()).collect();
    let f = GridFunction::new(raw);
    let norm = inner_v(w, &f, &f)?.sqrt();
    if !(norm > 0.0) {
        return Err(Error::ZeroFunction);
    }
    Ok(GridFunction::new(f.values().iter().map(|x| x / norm).collect()))
}

fn nu_residual(w: &Graphon, f: &GridFunction, lambda: f64) -> Result<f64> {
    let lf = apply_laplacian(w, f)?;
    let r = GridFunction::new(
        lf.values().iter().zip(f.values()).map(|(a, b)| a - lambda * b).collect(),
    );
    Ok(inner_v(w, &r, &r)?.max(0.0).sqrt())
}

/// Top of the spectrum of `Δ_W` for a connected step graphon.
///
/// Dense Jacobi up to [`DENSE_LIMIT`] cells, power iteration on the
/// symmetrized Laplacian beyond.
pub fn lambda_max(w: &Graphon, tol: f64, max_iter: usize, seed: u64) -> Result<SpectralResult> {
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    let m = w.m();
    let mf = m as f64;
    let scale: Vec<f64> = w.degrees().iter().map(|d| 1.0 / d.sqrt()).collect();

    let (top, vector, iterations, method) = if m <= DENSE_LIMIT {
        let mut lap = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                let k = w.value(i, j) * scale[i] * scale[j] / mf;
                lap[i * m + j] = if i == j { 1.0 - k } else { -k };
            }
        }
        let eig = jacobi_eigen(&lap, m)?;
        (eig.values[m - 1], eig.vector(m - 1), eig.sweeps, Method::Jacobi)
    } else {
        let apply = |x: &[f64], out: &mut [f64]| {
            let sx: Vec<f64> = x.iter().zip(&scale).map(|(a, s)| a * s).collect();
            for i in 0..m {
                let row = &w.kernel()[i * m..(i + 1) * m];
                let k: f64 = row.iter().zip(&sx).map(|(a, b)| a * b).sum();
                out[i] = x[i] - scale[i] * k / mf;
            }
        };
        let out = power_iteration(apply, m, tol, max_iter, seed)?;
        (out.value, out.vector, out.iterations, Method::Power)
    };

    if top < 1.0 - ATTAIN_TOL {
        return Ok(SpectralResult {
            lambda_max: 1.0,
            eigenfunction: None,
            residual: 0.0,
            iterations,
            method,
            grid: m,
        });
    }
    let lambda = top.max(1.0);
    let f = to_eigenfunction(w, vector)?;
    let residual = nu_residual(w, &f, lambda)?;
    Ok(SpectralResult { lambda_max: lambda, eigenfunction: Some(f), residual, iterations, method, grid: m })
}

/// Largest eigenvalue of the normalized graph Laplacian
/// `I - D^{-1/2} w D^{-1/2}`; the eigenvector is returned as
/// `g / sqrt(vol)`, normalized so that `sum g(i)^2 vol(i) = 1`.
pub fn lambda_max_graph(g: &WeightedGraph) -> Result<SpectralResult> {
    lambda_max_graph_with(g, DEFAULT_TOL, DEFAULT_MAX_ITER, 42)
}

pub fn lambda_max_graph_with(g: &WeightedGraph, tol: f64, max_iter: usize, seed: u64) -> Result<SpectralResult> {
    if !graph_is_connected(g) {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let vol: Vec<f64> = (0..n).map(|i| g.vol(i)).collect();
    let scale: Vec<f64> = vol.iter().map(|v| 1.0 / v.sqrt()).collect();

    let (top, mut vector, iterations, method) = if n <= DENSE_LIMIT {
        let mut lap = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let k = g.weight(i, j) * scale[i] * scale[j];
                lap[i * n + j] = if i == j { 1.0 - k } else { -k };
            }
        }
        let eig = jacobi_eigen(&lap, n)?;
        (eig.values[n - 1], eig.vector(n - 1), eig.sweeps, Method::Jacobi)
    } else {
        let apply = |x: &[f64], out: &mut [f64]| {
            for i in 0..n {
                let k: f64 = (0..n).map(|j| g.weight(i, j) * scale[j] * x[j]).sum();
                out[i] = x[i] - scale[i] * k;
            }
        };
        let out = power_iteration(apply, n, tol, max_iter, seed)?;
        (out.value, out.vector, out.iterations, Method::Power)
    };

    fix_sign(&mut vector);
    let mut h: Vec<f64> = vector.iter().zip(&scale).map(|(x, s)| x * s).collect();
    let norm = h.iter().zip(&vol).map(|(x, v)| x * x * v).sum::<f64>().sqrt();
    h.iter_mut().for_each(|x| *x /= norm);

    let residual = (0..n)
        .map(|i| {
            let avg: f64 = (0..n).map(|j| g.weight(i, j) * h[j]).sum::<f64>() / vol[i];
            let r = h[i] - avg - top * h[i];
            r * r * vol[i]
        })
        .sum::<f64>()
        .sqrt();
    Ok(SpectralResult {
        lambda_max: top,
        eigenfunction: Some(GridFunction::new(h)),
        residual,
        iterations,
        method,
        grid: n,
    })
}
