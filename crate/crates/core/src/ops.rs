//! Graph constructions whose Laplacian spectra follow from their factors:
//! complement, join, Cartesian product, and lexicographic product. Each
//! operation comes in two halves that can be cross-checked: an explicit
//! construction of the result graph, and a predicted spectrum (hence a
//! predicted biharmonic index) assembled purely from the factors' spectra.
//!
//! With factors on `n1` and `n2` vertices and eigenvalues listed
//! ascending (`l_1 = 0`):
//!
//! * complement of `G` on `n` vertices: `0` together with
//!   `n - l_i(G)` for `i = 2..n` (connected exactly when `l_max(G) < n`);
//! * join `G1 + G2`: `0`, `n1 + n2`, `l_i(G1) + n2` for `i >= 2`, and
//!   `l_j(G2) + n1` for `j >= 2`;
//! * Cartesian product: all pairwise sums `l_i(G1) + l_j(G2)`;
//! * lexicographic product `G1[G2]`: `n2 * l_i(G1)` for every `i`, and
//!   `l_j(G2) + n2 * deg(u_i)` for every vertex `u_i` of `G1` and every
//!   `j >= 2`.
//!
//! Product vertices `(i, j)` are numbered row-major as `i * n2 + j`; join
//! keeps `G1`'s vertices first.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::spectrum;

/// The four spectra-predictable constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Complement,
    Join,
    Cartesian,
    Lexicographic,
}

impl OpKind {
    /// Wire name used by serialized reports.
    pub fn as_str(self) -> &'static str {
        match self {
            OpKind::Complement => "complement",
            OpKind::Join => "join",
            OpKind::Cartesian => "cartesian",
            OpKind::Lexicographic => "lexicographic",
        }
    }

    /// Parses a wire name.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "complement" => Ok(OpKind::Complement),
            "join" => Ok(OpKind::Join),
            "cartesian" => Ok(OpKind::Cartesian),
            "lexicographic" | "lex" => Ok(OpKind::Lexicographic),
            other => Err(Error::InvalidInput(format!("unknown operation {other:?}"))),
        }
    }

    /// Whether the operation takes two input graphs.
    pub fn is_binary(self) -> bool {
        !matches!(self, OpKind::Complement)
    }
}

/// Complement graph: same vertices, exactly the missing edges.
pub fn complement(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Join: disjoint union plus every cross edge. `G1`'s vertices come first.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let mut out = Graph::empty(n1.checked_add(n2).ok_or(Error::TooLarge {
        n: usize::MAX,
        max: crate::graph::MAX_N,
        what: "join",
    })?)?;
    for (u, v) in g1.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        out.add_edge(n1 + u, n1 + v)?;
    }
    for u in 0..n1 {
        for v in 0..n2 {
            out.add_edge(u, n1 + v)?;
        }
    }
    Ok(out)
}

/// Cartesian product: `(i, j) ~ (i', j)` when `i ~ i'`, and
/// `(i, j) ~ (i, j')` when `j ~ j'`. Vertex `(i, j)` is `i * n2 + j`.
pub fn cartesian(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let mut out = Graph::empty(checked_product(n1, n2)?)?;
    for i in 0..n1 {
        for (j, jj) in g2.edges() {
            out.add_edge(i * n2 + j, i * n2 + jj)?;
        }
    }
    for (i, ii) in g1.edges() {
        for j in 0..n2 {
            out.add_edge(i * n2 + j, ii * n2 + j)?;
        }
    }
    Ok(out)
}

/// Lexicographic product `G1[G2]`: `(i, j) ~ (i', j')` when `i ~ i'`, or
/// `i = i'` and `j ~ j'`. Vertex `(i, j)` is `i * n2 + j`.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let mut out = Graph::empty(checked_product(n1, n2)?)?;
    for i in 0..n1 {
        for (j, jj) in g2.edges() {
            out.add_edge(i * n2 + j, i * n2 + jj)?;
        }
    }
    for (i, ii) in g1.edges() {
        for j in 0..n2 {
            for jj in 0..n2 {
                out.add_edge(i * n2 + j, ii * n2 + jj)?;
            }
        }
    }
    Ok(out)
}

fn checked_product(n1: usize, n2: usize) -> Result<usize> {
    n1.checked_mul(n2).ok_or(Error::TooLarge {
        n: usize::MAX,
        max: crate::graph::MAX_N,
        what: "graph product",
    })
}

/// Applies `op` to the inputs; `g2` must be present exactly for the
/// binary operations.
pub fn construct(op: OpKind, g1: &Graph, g2: Option<&Graph>) -> Result<Graph> {
    match (op, g2) {
        (OpKind::Complement, None) => complement(g1),
        (OpKind::Join, Some(h)) => join(g1, h),
        (OpKind::Cartesian, Some(h)) => cartesian(g1, h),
        (OpKind::Lexicographic, Some(h)) => lexicographic(g1, h),
        (op, Some(_)) => {
            Err(Error::InvalidInput(format!("{} takes exactly one input graph", op.as_str())))
        }
        (op, None) => {
            Err(Error::InvalidInput(format!("{} needs a second input graph", op.as_str())))
        }
    }
}

/// The multiset of Laplacian eigenvalues the construction must produce,
/// assembled from the factors' spectra only, sorted ascending. Defined for
/// arbitrary (even disconnected) inputs.
pub fn predicted_spectrum(op: OpKind, g1: &Graph, g2: Option<&Graph>) -> Result<Vec<f64>> {
    let mut out = match (op, g2) {
        (OpKind::Complement, None) => {
            let n = g1.n() as f64;
            let sp = spectrum(g1)?;
            let mut v = vec![0.0];
            v.extend(sp.values.iter().skip(1).map(|&l| n - l));
            v
        }
        (OpKind::Join, Some(h)) => {
            let (n1, n2) = (g1.n() as f64, h.n() as f64);
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let mut v = vec![0.0, n1 + n2];
            v.extend(sp1.values.iter().skip(1).map(|&l| l + n2));
            v.extend(sp2.values.iter().skip(1).map(|&l| l + n1));
            v
        }
        (OpKind::Cartesian, Some(h)) => {
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let mut v = Vec::with_capacity(g1.n() * h.n());
            for &a in &sp1.values {
                for &b in &sp2.values {
                    v.push(a + b);
                }
            }
            v
        }
        (OpKind::Lexicographic, Some(h)) => {
            let n2 = h.n() as f64;
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let mut v: Vec<f64> = sp1.values.iter().map(|&l| n2 * l).collect();
            for i in 0..g1.n() {
                let shift = g1.degree(i) as f64 * n2;
                v.extend(sp2.values.iter().skip(1).map(|&l| l + shift));
            }
            v
        }
        (op, _) => {
            return Err(Error::InvalidInput(format!(
                "{} takes {} input graph(s)",
                op.as_str(),
                if op.is_binary() { 2 } else { 1 }
            )))
        }
    };
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(out)
}

/// Biharmonic index of the construction, from the factors' spectra alone.
/// Errors with [`Error::DisconnectedResult`] when the construction would
/// be disconnected (so its biharmonic index is undefined).
pub fn predicted_bh(op: OpKind, g1: &Graph, g2: Option<&Graph>) -> Result<f64> {
    const EDGE: f64 = 1e-9;
    match (op, g2) {
        (OpKind::Complement, None) => {
            let n = g1.n() as f64;
            let sp = spectrum(g1)?;
            if g1.n() > 1 && sp.lambda_max() >= n - EDGE {
                return Err(Error::DisconnectedResult(
                    "the complement is disconnected (largest Laplacian eigenvalue equals n)"
                        .into(),
                ));
            }
            Ok(n * sp.values.iter().skip(1).map(|&l| (n - l).powi(-2)).sum::<f64>())
        }
        (OpKind::Join, Some(h)) => {
            let (n1, n2) = (g1.n() as f64, h.n() as f64);
            let nn = n1 + n2;
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let mut s = 1.0 / (nn * nn);
            s += sp1.values.iter().skip(1).map(|&l| (l + n2).powi(-2)).sum::<f64>();
            s += sp2.values.iter().skip(1).map(|&l| (l + n1).powi(-2)).sum::<f64>();
            Ok(nn * s)
        }
        (OpKind::Cartesian, Some(h)) => {
            if !g1.is_connected() || !h.is_connected() {
                return Err(Error::DisconnectedResult(
                    "a Cartesian product is connected only when both factors are".into(),
                ));
            }
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let nn = (g1.n() * h.n()) as f64;
            let mut s = 0.0;
            for (i, &a) in sp1.values.iter().enumerate() {
                for (j, &b) in sp2.values.iter().enumerate() {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    s += (a + b).powi(-2);
                }
            }
            Ok(nn * s)
        }
        (OpKind::Lexicographic, Some(h)) => {
            let connected = if g1.n() == 1 { h.is_connected() } else { g1.is_connected() };
            if !connected {
                return Err(Error::DisconnectedResult(
                    "a lexicographic product is connected only when its first factor is \
                     (or, for a one-vertex first factor, when the second is)"
                        .into(),
                ));
            }
            let n2 = h.n() as f64;
            let sp1 = spectrum(g1)?;
            let sp2 = spectrum(h)?;
            let nn = (g1.n() * h.n()) as f64;
            let mut s = sp1.values.iter().skip(1).map(|&l| (n2 * l).powi(-2)).sum::<f64>();
            for i in 0..g1.n() {
                let shift = g1.degree(i) as f64 * n2;
                s += sp2.values.iter().skip(1).map(|&l| (l + shift).powi(-2)).sum::<f64>();
            }
            Ok(nn * s)
        }
        (op, _) => Err(Error::InvalidInput(format!(
            "{} takes {} input graph(s)",
            op.as_str(),
            if op.is_binary() { 2 } else { 1 }
        ))),
    }
}

/// Builds the construction, computes its spectrum directly, and returns
/// the largest absolute deviation from the predicted multiset (after
/// sorting both ascending).
pub fn spectrum_prediction_error(op: OpKind, g1: &Graph, g2: Option<&Graph>) -> Result<f64> {
    let predicted = predicted_spectrum(op, g1, g2)?;
    let built = construct(op, g1, g2)?;
    let actual = spectrum(&built)?;
    debug_assert_eq!(predicted.len(), actual.values.len());
    Ok(predicted
        .iter()
        .zip(&actual.values)
        .map(|(p, a)| (p - a).abs())
        .fold(0.0, f64::max))
}
