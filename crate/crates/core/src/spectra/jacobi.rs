//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a symmetric matrix, unsorted. `vectors` is row-major `n × n`
/// with eigenvector `i` stored in column `i`.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub n: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl Eigen {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        (0..self.n).map(|r| self.vectors[r * self.n + i]).collect()
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// Diagonalizes the symmetric row-major matrix `m` by cyclic sweeps of plane
/// rotations until the off-diagonal Frobenius norm drops below
/// `tol * max(1, ‖m‖_F)`.
pub fn symmetric_eigen(m: &[f64], n: usize, tol: f64) -> Result<Eigen> {
    assert_eq!(m.len(), n * n, "matrix must be n × n");
    let mut a = m.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol * frob.max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
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

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a[r * n + p] = np;
                    a[p * n + r] = np;
                    a[r * n + q] = nq;
                    a[q * n + r] = nq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    Ok(Eigen {
        n,
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        sweeps,
    })
}

/// Largest `‖m x − λ x‖∞` over the computed pairs.
pub fn max_residual(m: &[f64], e: &Eigen) -> f64 {
    let n = e.n;
    let mut worst = 0.0f64;
    for i in 0..n {
        let lambda = e.values[i];
        for r in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += m[r * n + k] * e.vectors[k * n + i];
            }
            worst = worst.max((s - lambda * e.vectors[r * n + i]).abs());
        }
    }
    worst
}
