//! Laplacian spectra and biharmonic distances.
//!
//! The Laplacian of a graph on `n` vertices is `L = D - A` with `D` the
//! diagonal degree matrix and `A` the adjacency matrix. Its eigenvalues are
//! real and non-negative, the smallest is always `0`, and the multiplicity
//! of `0` equals the number of connected components.
//!
//! For a connected graph the biharmonic squared distance between vertices
//! `u` and `v` is
//!
//! ```text
//! d_B^2(u, v) = M[u][u] + M[v][v] - 2 M[u][v],
//! M = pseudoinverse of L^2 = sum over nonzero eigenvalues of (1/l^2) v v^T.
//! ```
//!
//! Eigenpairs come from a cyclic Jacobi iteration on the dense symmetric
//! matrix: every strict upper-triangle entry is annihilated in turn by a
//! plane rotation, sweeps repeat until the off-diagonal Frobenius norm
//! drops below `JACOBI_OFF_TOL_PER_N * n`, and the accumulated rotations
//! give an orthonormal eigenbasis.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Off-diagonal Frobenius-norm convergence threshold, per vertex: the
/// Jacobi iteration stops once `off(A) < JACOBI_OFF_TOL_PER_N * n`.
pub const JACOBI_OFF_TOL_PER_N: f64 = 1e-12;

/// Upper bound on Jacobi sweeps before giving up. Convergence is
/// quadratic once rotations are small; well-conditioned symmetric
/// matrices finish in well under twenty sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Computed eigenvalues with `|value| < EIGENVALUE_ZERO_CLAMP` are treated
/// as exact zeros of the Laplacian.
pub const EIGENVALUE_ZERO_CLAMP: f64 = 1e-9;

/// Dense row-major Laplacian `L = D - A` of a graph.
pub fn laplacian(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut l = vec![0.0; n * n];
    for u in 0..n {
        l[u * n + u] = g.degree(u) as f64;
        for v in g.neighbors(u) {
            l[u * n + v] = -1.0;
        }
    }
    l
}

/// Eigenvalues (ascending, zeros clamped) and an orthonormal eigenbasis of
/// a graph Laplacian.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues in ascending order; entries within
    /// [`EIGENVALUE_ZERO_CLAMP`] of zero are clamped to exactly `0.0`.
    pub values: Vec<f64>,
    /// Number of clamped (zero) eigenvalues; equals the number of
    /// connected components.
    pub zero_count: usize,
    /// Zero-clamp tolerance that produced `zero_count`.
    pub tolerance: f64,
    /// Row-major `n x n` matrix whose column `k` is the unit eigenvector
    /// for `values[k]`.
    pub vectors: Vec<f64>,
}

impl Spectrum {
    /// The strictly positive eigenvalues, ascending.
    pub fn nonzero(&self) -> &[f64] {
        &self.values[self.zero_count..]
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Algebraic connectivity: the second-smallest eigenvalue.
    /// Positive exactly when the graph is connected (for `n >= 2`).
    pub fn lambda_2(&self) -> f64 {
        self.values[1]
    }

    /// The largest eigenvalue.
    pub fn lambda_max(&self) -> f64 {
        *self.values.last().expect("spectrum is never empty")
    }

    /// Sum of `f` over the strictly positive eigenvalues.
    pub fn sum_nonzero(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nonzero().iter().map(|&x| f(x)).sum()
    }
}

/// Laplacian spectrum of `g`, via cyclic Jacobi iteration.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    let (mut values, vectors) = jacobi_eigh(laplacian(g), n)?;
    let mut zero_count = 0;
    for v in values.iter_mut() {
        if v.abs() < EIGENVALUE_ZERO_CLAMP {
            *v = 0.0;
            zero_count += 1;
        }
    }
    Ok(Spectrum { values, zero_count, tolerance: EIGENVALUE_ZERO_CLAMP, vectors })
}

/// Full eigendecomposition of a dense symmetric matrix (row-major, size
/// `n x n`) by cyclic Jacobi rotations. Returns eigenvalues in ascending
/// order and the matching orthonormal eigenvectors as columns of a
/// row-major matrix.
pub fn jacobi_eigh(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = JACOBI_OFF_TOL_PER_N * n as f64;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut off = off_norm(&a);
    let mut sweeps = 0;
    while off >= threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Choose the rotation angle that annihilates a[p][q]:
                // t = tan(theta) is the smaller root of t^2 + 2*tau*t - 1.
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- J^T A J with J the plane rotation in coordinates (p, q).
                for r in 0..n {
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[r * n + q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p * n + r];
                    let aqr = a[q * n + r];
                    a[p * n + r] = c * apr - s * aqr;
                    a[q * n + r] = s * apr + c * aqr;
                }
                // V <- V J accumulates the eigenbasis.
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
        sweeps += 1;
        off = off_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i].partial_cmp(&a[j * n + j]).expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vecs = vec![0.0; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vecs[r * n + new_col] = v[r * n + old_col];
        }
    }
    Ok((values, vecs))
}

/// Pseudoinverse of `L^2` for a connected graph, the kernel of biharmonic
/// squared distances.
#[derive(Debug, Clone)]
pub struct BiharmonicMatrix {
    n: usize,
    /// Row-major `n x n` pseudoinverse of the squared Laplacian.
    m: Vec<f64>,
}

impl BiharmonicMatrix {
    /// Builds the matrix from an already-computed spectrum of a connected
    /// graph (exactly one zero eigenvalue).
    pub fn from_spectrum(sp: &Spectrum) -> Result<Self> {
        if sp.zero_count != 1 {
            return Err(Error::Disconnected("biharmonic distances need a connected graph"));
        }
        let n = sp.n();
        let mut m = vec![0.0; n * n];
        for k in sp.zero_count..n {
            let w = 1.0 / (sp.values[k] * sp.values[k]);
            for u in 0..n {
                let vu = sp.vectors[u * n + k] * w;
                if vu == 0.0 {
                    continue;
                }
                for t in 0..n {
                    m[u * n + t] += vu * sp.vectors[t * n + k];
                }
            }
        }
        Ok(BiharmonicMatrix { n, m })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `M[u][v]` of the pseudoinverse of `L^2`.
    pub fn entry(&self, u: usize, v: usize) -> f64 {
        self.m[u * self.n + v]
    }

    /// Biharmonic squared distance
    /// `d_B^2(u, v) = M[u][u] + M[v][v] - 2 M[u][v]`.
    pub fn squared_distance(&self, u: usize, v: usize) -> f64 {
        self.m[u * self.n + u] + self.m[v * self.n + v] - 2.0 * self.m[u * self.n + v]
    }

    /// Sum of `d_B^2(u, v)` over unordered pairs `u < v`.
    pub fn total_squared_distance(&self) -> f64 {
        let mut total = 0.0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                total += self.squared_distance(u, v);
            }
        }
        total
    }
}

/// Biharmonic distance matrix of a connected graph.
pub fn biharmonic_matrix(g: &Graph) -> Result<BiharmonicMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected("biharmonic distances need a connected graph"));
    }
    BiharmonicMatrix::from_spectrum(&spectrum(g)?)
}
