//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};

/// Largest matrix the dense solver accepts.
pub const DENSE_LIMIT: usize = 512;

/// Off-diagonal Frobenius mass, relative to the full norm, at which sweeps stop.
const REL_OFF_TOL: f64 = 1e-13;

const MAX_SWEEPS: usize = 100;

/// Eigenpairs sorted by ascending eigenvalue. `vectors` is row-major and
/// column `k` holds the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub n: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.vectors[i * self.n + k]).collect()
    }
}

fn off_diagonal_sq(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s
}

/// Full eigendecomposition of a symmetric row-major `n x n` matrix.
pub fn jacobi_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    if n > DENSE_LIMIT {
        return Err(Error::SizeTooLarge { size: n, limit: DENSE_LIMIT });
    }
    if matrix.len() != n * n {
        return Err(Error::LengthMismatch { expected: n * n, got: matrix.len() });
    }
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let norm_sq: f64 = a.iter().map(|x| x * x).sum();
    let target = (REL_OFF_TOL * REL_OFF_TOL) * norm_sq;
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_diagonal_sq(&a, n) > target {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].total_cmp(&a[y * n + y]));
    let values = order.iter().map(|&k| a[k * n + k]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + col] = v[i * n + k];
        }
    }
    Ok(SymmetricEigen { n, values, vectors, sweeps })
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn jacobi_symmetric_eigs(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = rows.len();
    if n > DENSE_LIMIT {
        return Err(Error::SizeTooLarge { size: n, limit: DENSE_LIMIT });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare { rows: n, row, len: r.len() });
        }
        flat.extend_from_slice(r);
    }
    Ok(jacobi_eigen(&flat, n)?.values)
}
