//! Exact characteristic polynomials of graph Laplacians and exact
//! spanning-tree counts, over arbitrary-precision integers.
//!
//! The characteristic polynomial used throughout is
//! `phi(L; x) = det(xI - L)`, monic of degree `n`. It is computed by the
//! Faddeev–LeVerrier recurrence, which needs only integer matrix products
//! and exact divisions, so no floating point is involved. Coefficients
//! satisfy three structural identities that make strong test oracles:
//!
//! * the constant coefficient is `0` (0 is always a Laplacian eigenvalue);
//! * the `x^(n-1)` coefficient is `-2m` (trace);
//! * `(-1)^(n-1)` times the `x^1` coefficient is `n` times the number of
//!   spanning trees (matrix-tree theorem).
//!
//! A bridge in a graph lets the polynomial be assembled from the two sides:
//! if removing the edge `{u, v}` splits `G` into `G1` (containing `u`) and
//! `G2` (containing `v`), then
//!
//! ```text
//! phi(G) = phi(G1) phi(G2) - phi(G1) phi_v(G2) - phi_u(G1) phi(G2)
//! ```
//!
//! where `phi_w(H)` is the characteristic polynomial of `H`'s Laplacian
//! with the row and column of `w` deleted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPoly;

/// Exact characteristic polynomials are limited to this order: the
/// recurrence is cubic-to-quartic in `n` with big-integer entries, and the
/// sizes this crate studies exactly are all far below the cap.
pub const CHARPOLY_MAX_N: usize = 64;

/// Characteristic polynomial `det(xI - L)` of the Laplacian of `g`.
pub fn char_poly(g: &Graph) -> Result<IntPoly> {
    if g.n() > CHARPOLY_MAX_N {
        return Err(Error::TooLarge { n: g.n(), max: CHARPOLY_MAX_N, what: "exact char poly" });
    }
    faddeev_leverrier(&sparse_laplacian(g, None))
}

/// Characteristic polynomial of the Laplacian of `g` with the row and
/// column of `delete` removed (a principal submatrix, not the Laplacian of
/// a vertex-deleted subgraph).
pub fn char_poly_vertex_deleted(g: &Graph, delete: usize) -> Result<IntPoly> {
    if delete >= g.n() {
        return Err(Error::OutOfRangeVertex { vertex: delete, n: g.n() });
    }
    if g.n() > CHARPOLY_MAX_N {
        return Err(Error::TooLarge { n: g.n(), max: CHARPOLY_MAX_N, what: "exact char poly" });
    }
    faddeev_leverrier(&sparse_laplacian(g, Some(delete)))
}

/// Sparse rows of the Laplacian, optionally with one vertex's row and
/// column deleted (indices compacted).
fn sparse_laplacian(g: &Graph, delete: Option<usize>) -> Vec<Vec<(usize, i64)>> {
    let n = g.n();
    let remap: Vec<Option<usize>> = {
        let mut next = 0;
        (0..n)
            .map(|v| {
                if Some(v) == delete {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(n - usize::from(delete.is_some()));
    for u in 0..n {
        let Some(ru) = remap[u] else { continue };
        debug_assert_eq!(ru, rows.len());
        let mut row = vec![(ru, g.degree(u) as i64)];
        for v in g.neighbors(u) {
            if let Some(rv) = remap[v] {
                row.push((rv, -1));
            }
        }
        rows.push(row);
    }
    rows
}

/// Faddeev–LeVerrier recurrence on a sparse integer matrix `A` (rows of
/// `(column, value)` pairs): iterate `M <- A M + c I`, where each new `c`
/// is `-trace(A M) / k` (an exact integer division). Returns the monic
/// characteristic polynomial `det(xI - A)`.
fn faddeev_leverrier(a: &[Vec<(usize, i64)>]) -> Result<IntPoly> {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return Ok(IntPoly::new(coeffs));
    }
    // M starts as the identity.
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    let mut am = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // am = A * m, exploiting A's sparsity.
        for (i, row) in a.iter().enumerate() {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for &(col, val) in row {
                    if val == 1 {
                        acc += &m[col * n + j];
                    } else if val == -1 {
                        acc -= &m[col * n + j];
                    } else if val != 0 {
                        acc += val * &m[col * n + j];
                    }
                }
                am[i * n + j] = acc;
            }
        }
        let mut trace = BigInt::zero();
        for i in 0..n {
            trace += &am[i * n + i];
        }
        let (c, rem) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        // m = am + c * I for the next round.
        std::mem::swap(&mut m, &mut am);
        for i in 0..n {
            m[i * n + i] += &c;
        }
        coeffs[n - k] = c;
    }
    Ok(IntPoly::new(coeffs))
}

/// Exact number of spanning trees: the determinant of the Laplacian with
/// row and column 0 deleted, by fraction-free (Bareiss) elimination.
/// Disconnected graphs give 0; the one-vertex graph gives 1.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 1 {
        return BigInt::one();
    }
    let size = n - 1;
    // Minor of L deleting row/column 0.
    let mut a = vec![BigInt::zero(); size * size];
    for u in 1..n {
        a[(u - 1) * size + (u - 1)] = BigInt::from(g.degree(u));
        for v in g.neighbors(u) {
            if v >= 1 {
                a[(u - 1) * size + (v - 1)] = BigInt::from(-1);
            }
        }
    }
    bareiss_determinant(a, size)
}

/// Fraction-free determinant of a dense integer matrix. Every division in
/// the Bareiss recurrence is exact, so the result is the exact integer
/// determinant.
pub fn bareiss_determinant(mut a: Vec<BigInt>, size: usize) -> BigInt {
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if a[k * size + k].is_zero() {
            match (k + 1..size).find(|&r| !a[r * size + k].is_zero()) {
                Some(r) => {
                    for j in 0..size {
                        a.swap(k * size + j, r * size + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &a[i * size + j] * &a[k * size + k] - &a[i * size + k] * &a[k * size + j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i * size + j] = q;
            }
            a[i * size + k] = BigInt::zero();
        }
        prev = a[k * size + k].clone();
    }
    let det = a[(size - 1) * size + (size - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Assembles `phi(L(G); x)` across a bridge `{u, v}` from the two sides'
/// polynomials; see the module docs for the identity. Errors if `{u, v}`
/// is not an edge or not a bridge.
pub fn cut_edge_char_poly(g: &Graph, u: usize, v: usize) -> Result<IntPoly> {
    if !g.has_edge(u, v) {
        return Err(Error::InvalidInput(format!("{{{u}, {v}}} is not an edge")));
    }
    // Split: drop the edge and find the component containing u.
    let mut cut = g.clone();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
        .collect();
    cut = Graph::from_edge_list(cut.n(), &edges)?;
    let dist_u = cut.bfs_distances(u);
    if dist_u[v] != u32::MAX {
        return Err(Error::InvalidInput(format!("{{{u}, {v}}} is not a cut edge")));
    }
    let side1: Vec<usize> = (0..g.n()).filter(|&w| dist_u[w] != u32::MAX).collect();
    let dist_v = cut.bfs_distances(v);
    let side2: Vec<usize> = (0..g.n()).filter(|&w| dist_v[w] != u32::MAX).collect();
    if side1.len() + side2.len() != g.n() {
        // Vertices in neither side were already disconnected from the edge.
        return Err(Error::Disconnected("cut-edge assembly needs a connected graph"));
    }

    let induced = |verts: &[usize]| -> Result<(Graph, Vec<usize>)> {
        let pos: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (i, &w) in verts.iter().enumerate() {
            for x in cut.neighbors(w) {
                if let Some(&j) = pos.get(&x) {
                    if j > i {
                        edges.push((i, j));
                    }
                }
            }
        }
        Ok((Graph::from_edge_list(verts.len(), &edges)?, verts.to_vec()))
    };

    let (g1, verts1) = induced(&side1)?;
    let (g2, verts2) = induced(&side2)?;
    let u1 = verts1.iter().position(|&w| w == u).expect("u lies on side 1");
    let v2 = verts2.iter().position(|&w| w == v).expect("v lies on side 2");

    let p1 = char_poly(&g1)?;
    let p2 = char_poly(&g2)?;
    let p1_del = char_poly_vertex_deleted(&g1, u1)?;
    let p2_del = char_poly_vertex_deleted(&g2, v2)?;
    Ok(p1.mul(&p2).sub(&p1.mul(&p2_del)).sub(&p1_del.mul(&p2)))
}

/// Structural coefficient identities of `phi(L; x)`; `Ok` when all hold.
/// Useful as a cheap exactness oracle in tests and scans.
pub fn check_char_poly_invariants(g: &Graph, phi: &IntPoly) -> Result<()> {
    let n = g.n();
    if phi.degree() != Some(n) || !phi.coeff(n).is_one() {
        return Err(Error::InvalidInput("char poly must be monic of degree n".into()));
    }
    if !phi.coeff(0).is_zero() {
        return Err(Error::InvalidInput("constant coefficient must be 0".into()));
    }
    if n >= 1 && phi.coeff(n - 1) != BigInt::from(-2 * g.m() as i64) {
        return Err(Error::InvalidInput("x^(n-1) coefficient must be -2m".into()));
    }
    let c1 = phi.coeff(1);
    let signed = if (n - 1).is_multiple_of(2) { c1.clone() } else { -c1 };
    if signed != BigInt::from(n) * spanning_tree_count(g) {
        return Err(Error::InvalidInput(
            "x^1 coefficient must encode n * (spanning tree count)".into(),
        ));
    }
    Ok(())
}
