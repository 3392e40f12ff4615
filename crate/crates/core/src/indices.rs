//! Graph indices built on the Laplacian spectrum and on biharmonic
//! distances.
//!
//! The central quantity is the biharmonic index
//!
//! ```text
//! BH(G) = (1/2) sum over ordered pairs of d_B^2(u, v)
//!       = n * sum over nonzero Laplacian eigenvalues of 1 / l^2,
//! ```
//!
//! computed here by both routes independently so they can be checked
//! against each other. Alongside it:
//!
//! * Kirchhoff index `Kf(G) = n * sum of 1/l` over nonzero eigenvalues
//!   (equals the Wiener index on trees);
//! * Wiener index `W(G)`: sum of shortest-path distances over pairs;
//! * first Zagreb index `M1 = sum of deg^2` and forgotten index
//!   `F = sum of deg^3`;
//! * exact spanning-tree count;
//! * spectral ratio `r = l_max / l_2 >= 1`;
//! * degree- and eccentricity-weighted biharmonic sums (`sbi`, `gbi`,
//!   `xi_b`, `xi_b_star`), where the biharmonic eccentricity of `u` is
//!   `max over v of d_B^2(u, v)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{spectrum, BiharmonicMatrix, Spectrum};

pub use crate::charpoly::spanning_tree_count;

/// Every index of a connected graph that this crate computes, in one pass.
#[derive(Debug, Clone)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    /// Biharmonic index by the spectral route `n * sum 1/l^2`.
    pub bh_spectral: f64,
    /// Biharmonic index by the distance route `(1/2) sum d_B^2`.
    pub bh_distance: f64,
    /// Kirchhoff index `n * sum 1/l`.
    pub kirchhoff: f64,
    /// Wiener index (integer: sum of shortest-path distances over pairs).
    pub wiener: u64,
    /// First Zagreb index `sum deg^2`.
    pub zagreb_m1: u64,
    /// Forgotten index `sum deg^3`.
    pub forgotten_f: u64,
    /// Triangle count.
    pub triangles: u64,
    /// Exact spanning-tree count.
    pub tau: BigInt,
    /// `l_max / l_2`; defined as 1 for the one-vertex graph.
    pub spectral_ratio: f64,
    /// Degree-sum weighted biharmonic index
    /// `(1/2) sum (deg u + deg v) d_B^2(u, v)`.
    pub sbi: f64,
    /// Degree-product weighted biharmonic index
    /// `(1/2) sum (deg u)(deg v) d_B^2(u, v)`.
    pub gbi: f64,
    /// Eccentricity-sum weighted biharmonic index
    /// `(1/2) sum (ecc_B(u) + ecc_B(v)) d_B^2(u, v)`.
    pub xi_b: f64,
    /// Eccentricity-product weighted biharmonic index
    /// `(1/2) sum ecc_B(u) ecc_B(v) d_B^2(u, v)`.
    pub xi_b_star: f64,
}

/// Biharmonic index via the spectral route. Connected graphs only.
pub fn biharmonic_index(g: &Graph) -> Result<f64> {
    let sp = connected_spectrum(g)?;
    Ok(bh_from_spectrum(&sp))
}

/// Biharmonic index via pairwise biharmonic distances. Connected only.
pub fn biharmonic_index_distance(g: &Graph) -> Result<f64> {
    let bm = crate::spectra::biharmonic_matrix(g)?;
    Ok(bm.total_squared_distance())
}

/// Kirchhoff index `n * sum 1/l`. Connected graphs only.
pub fn kirchhoff_index(g: &Graph) -> Result<f64> {
    let sp = connected_spectrum(g)?;
    Ok(g.n() as f64 * sp.sum_nonzero(|l| 1.0 / l))
}

/// Wiener index: sum of shortest-path distances over unordered pairs.
/// Connected graphs only.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("Wiener index needs a connected graph"));
    }
    let mut total = 0u64;
    for u in 0..g.n() {
        let dist = g.bfs_distances(u);
        for &d in dist.iter().skip(u + 1) {
            total += d as u64;
        }
    }
    Ok(total)
}

/// First Zagreb index `sum deg^2`. Defined for any graph.
pub fn zagreb_m1(g: &Graph) -> u64 {
    (0..g.n()).map(|u| (g.degree(u) as u64).pow(2)).sum()
}

/// Forgotten index `sum deg^3`. Defined for any graph.
pub fn forgotten_f(g: &Graph) -> u64 {
    (0..g.n()).map(|u| (g.degree(u) as u64).pow(3)).sum()
}

/// `n * sum 1/l^2` from an existing spectrum.
pub fn bh_from_spectrum(sp: &Spectrum) -> f64 {
    sp.n() as f64 * sp.sum_nonzero(|l| 1.0 / (l * l))
}

fn connected_spectrum(g: &Graph) -> Result<Spectrum> {
    if !g.is_connected() {
        return Err(Error::Disconnected("spectral index needs a connected graph"));
    }
    spectrum(g)
}

/// Computes the full [`IndexReport`] of a connected graph.
pub fn index_report(g: &Graph) -> Result<IndexReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("index report needs a connected graph"));
    }
    let n = g.n();
    let sp = spectrum(g)?;
    let bm = BiharmonicMatrix::from_spectrum(&sp)?;

    let bh_spectral = bh_from_spectrum(&sp);
    let kirchhoff = n as f64 * sp.sum_nonzero(|l| 1.0 / l);
    let spectral_ratio = if n == 1 { 1.0 } else { sp.lambda_max() / sp.lambda_2() };

    let degrees: Vec<f64> = (0..n).map(|u| g.degree(u) as f64).collect();
    // One triangular pass accumulates the distance-route index and the
    // degree-weighted sums; a second uses the finished eccentricities.
    let mut d2 = vec![0.0; n * n];
    let mut ecc = vec![0.0_f64; n];
    let mut bh_distance = 0.0;
    let mut sbi = 0.0;
    let mut gbi = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            let d = bm.squared_distance(u, v);
            d2[u * n + v] = d;
            bh_distance += d;
            sbi += (degrees[u] + degrees[v]) * d;
            gbi += degrees[u] * degrees[v] * d;
            if d > ecc[u] {
                ecc[u] = d;
            }
            if d > ecc[v] {
                ecc[v] = d;
            }
        }
    }
    let mut xi_b = 0.0;
    let mut xi_b_star = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            let d = d2[u * n + v];
            xi_b += (ecc[u] + ecc[v]) * d;
            xi_b_star += ecc[u] * ecc[v] * d;
        }
    }

    Ok(IndexReport {
        n,
        m: g.m(),
        bh_spectral,
        bh_distance,
        kirchhoff,
        wiener: wiener_index(g)?,
        zagreb_m1: zagreb_m1(g),
        forgotten_f: forgotten_f(g),
        triangles: g.triangle_count(),
        tau: spanning_tree_count(g),
        spectral_ratio,
        sbi,
        gbi,
        xi_b,
        xi_b_star,
    })
}
