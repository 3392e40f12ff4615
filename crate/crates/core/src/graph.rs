//! Simple undirected graphs on a dense bitset adjacency structure, the
//! graph6 text codec, parametric family generators, and basic structural
//! summaries (connectivity, distances, triangles, degrees).
//!
//! Vertices are `0..n`. Graphs are simple: no loops, no multi-edges. The
//! adjacency matrix is stored as `n` rows of 64-bit words, which keeps
//! breadth-first searches, triangle counts, and neighbourhood scans cheap
//! for the sizes this crate targets.

use crate::error::{Error, Result};

/// Hard cap on vertex count. Everything in this crate is meant for
/// desk-scale experimentation; the cap keeps accidental huge allocations
/// from getting off the ground.
pub const MAX_N: usize = 4096;

const WORD_BITS: usize = 64;

/// An undirected simple graph with a dense bitset adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

impl Graph {
    /// Creates an edgeless graph on `n` vertices (`1 <= n <= MAX_N`).
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("vertex count must be positive".into()));
        }
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N, what: "graph construction" });
        }
        let words_per_row = n.div_ceil(WORD_BITS);
        Ok(Graph { n, words_per_row, bits: vec![0; n * words_per_row], m: 0 })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges (in either
    /// orientation) are collapsed; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`, ignoring it if already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            self.set_bit(u, v);
            self.set_bit(v, u);
            self.m += 1;
        }
        Ok(())
    }

    fn set_bit(&mut self, row: usize, col: usize) {
        self.bits[row * self.words_per_row + col / WORD_BITS] |= 1u64 << (col % WORD_BITS);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether the edge `{u, v}` is present. Out-of-range queries are false.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.bits[u * self.words_per_row + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The words of vertex `u`'s adjacency row.
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
    }

    /// Degree of vertex `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterates over the neighbours of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Breadth-first distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::with_capacity(self.n);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for v in self.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Number of triangles, counted combinatorially: each edge contributes
    /// the size of its endpoints' common neighbourhood, and every triangle
    /// is seen once per edge.
    pub fn triangle_count(&self) -> u64 {
        let mut total: u64 = 0;
        for u in 0..self.n {
            let ru = self.row(u);
            for v in self.neighbors(u) {
                if v > u {
                    let rv = self.row(v);
                    let common: u64 =
                        ru.iter().zip(rv).map(|(a, b)| (a & b).count_ones() as u64).sum();
                    total += common;
                }
            }
        }
        total / 3
    }

    /// Structural summary: order, size, connectivity, diameter, triangle
    /// count, and the degree profile.
    pub fn structure_report(&self) -> StructureReport {
        let degree_sequence = self.degree_sequence();
        let max_degree = degree_sequence.first().copied().unwrap_or(0);
        let second_max_degree = degree_sequence.get(1).copied().unwrap_or(0);
        let mut connected = true;
        let mut ecc_max = 0u32;
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for &d in &dist {
                if d == u32::MAX {
                    connected = false;
                } else if d > ecc_max {
                    ecc_max = d;
                }
            }
            if !connected {
                break;
            }
        }
        StructureReport {
            n: self.n,
            m: self.m,
            connected,
            diameter: if connected { Some(ecc_max as usize) } else { None },
            triangles: self.triangle_count(),
            degree_sequence,
            max_degree,
            second_max_degree,
        }
    }

    /// Whether the graph is a tree (connected with `n - 1` edges).
    pub fn is_tree(&self) -> bool {
        self.m == self.n - 1 && self.is_connected()
    }

    // ------------------------------------------------------------------
    // graph6 codec (short form, n < 63)
    // ------------------------------------------------------------------

    /// Decodes a short-form graph6 string. Surrounding ASCII whitespace is
    /// ignored; the long multi-byte header form (`~...`) is rejected.
    ///
    /// Error mapping: a missing, out-of-range, or long-form header is
    /// [`Error::MalformedHeader`]; too few body bytes is
    /// [`Error::TruncatedBits`]; extra body bytes, a non-graph6 body byte,
    /// or a set padding bit is [`Error::TrailingGarbage`].
    pub fn from_graph6(text: &str) -> Result<Self> {
        let bytes = text.trim_matches(|c: char| c.is_ascii_whitespace()).as_bytes();
        let (&header, body) = bytes
            .split_first()
            .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
        if header == b'~' {
            return Err(Error::MalformedHeader(
                "long vertex-count form (leading '~') is not supported".into(),
            ));
        }
        if !(63..=125).contains(&header) {
            return Err(Error::MalformedHeader(format!(
                "header byte {header} outside the short-form range 63..=125"
            )));
        }
        let n = (header - 63) as usize;
        if n == 0 {
            return Err(Error::MalformedHeader("graph on 0 vertices not supported".into()));
        }
        let need_bits = n * (n - 1) / 2;
        let need_bytes = need_bits.div_ceil(6);
        if body.len() < need_bytes {
            return Err(Error::TruncatedBits { expected: need_bytes, found: body.len() });
        }
        if body.len() > need_bytes {
            return Err(Error::TrailingGarbage(format!(
                "{} extra byte(s) after {} data byte(s)",
                body.len() - need_bytes,
                need_bytes
            )));
        }
        for (i, &b) in body.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Error::TrailingGarbage(format!(
                    "body byte {i} (value {b}) is not a graph6 data byte"
                )));
            }
        }
        let mut g = Graph::empty(n)?;
        let mut bit_index = 0usize;
        // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
        'outer: for j in 1..n {
            for i in 0..j {
                let byte = body[bit_index / 6] - 63;
                let bit = (byte >> (5 - bit_index % 6)) & 1;
                if bit == 1 {
                    g.add_edge(i, j)?;
                }
                bit_index += 1;
                if bit_index == need_bits {
                    break 'outer;
                }
            }
        }
        // Padding bits beyond the triangle must be zero.
        if need_bits > 0 {
            let last = body[need_bytes - 1] - 63;
            let used_in_last = need_bits - (need_bytes - 1) * 6;
            let pad_mask = (1u8 << (6 - used_in_last)) - 1;
            if last & pad_mask != 0 {
                return Err(Error::TrailingGarbage("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    /// Encodes the graph as a short-form graph6 string (requires `n < 63`).
    pub fn to_graph6(&self) -> Result<String> {
        if self.n >= 63 {
            return Err(Error::TooLarge { n: self.n, max: 62, what: "graph6 short form" });
        }
        let mut out = vec![63 + self.n as u8];
        let mut acc = 0u8;
        let mut filled = 0u8;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    // ------------------------------------------------------------------
    // Plain-text edge-list format
    // ------------------------------------------------------------------

    /// Parses a plain-text edge list. The first significant line is
    /// `n` or `n m`; each following line is an edge `u v`. Blank lines and
    /// lines starting with `#` are skipped. If `m` is given it must match
    /// the number of distinct edges read.
    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("edge list has no header line".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("bad vertex count in header {header:?}")))?;
        let declared_m: Option<usize> = match parts.next() {
            None => None,
            Some(t) => Some(t.parse().map_err(|_| {
                Error::InvalidInput(format!("bad edge count in header {header:?}"))
            })?),
        };
        if parts.next().is_some() {
            return Err(Error::InvalidInput(format!("header {header:?} has extra fields")));
        }
        let mut g = Graph::empty(n)?;
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => {
                    let u: usize = a.parse().map_err(|_| {
                        Error::InvalidInput(format!("bad endpoint in edge line {line:?}"))
                    })?;
                    let v: usize = b.parse().map_err(|_| {
                        Error::InvalidInput(format!("bad endpoint in edge line {line:?}"))
                    })?;
                    (u, v)
                }
                _ => return Err(Error::InvalidInput(format!("edge line {line:?} is not `u v`"))),
            };
            g.add_edge(u, v)?;
        }
        if let Some(dm) = declared_m {
            if dm != g.m() {
                return Err(Error::InvalidInput(format!(
                    "header declares {dm} edges but {} distinct edges were read",
                    g.m()
                )));
            }
        }
        Ok(g)
    }

    /// Emits the plain-text edge-list form accepted by
    /// [`Graph::from_edge_list_text`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    // ------------------------------------------------------------------
    // Dense-mask construction for exhaustive sweeps
    // ------------------------------------------------------------------

    /// Exhaustive isomorphism test for graphs on at most 10 vertices, by
    /// trying every degree-compatible vertex bijection. Meant for
    /// verifying that small constructions coincide with named graphs.
    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool> {
        if self.n() > 10 || other.n() > 10 {
            let n = self.n().max(other.n());
            return Err(Error::TooLarge { n, max: 10, what: "exhaustive isomorphism test" });
        }
        if self.n() != other.n() || self.m() != other.m() {
            return Ok(false);
        }
        if self.degree_sequence() != other.degree_sequence() {
            return Ok(false);
        }
        let n = self.n();
        // perm[u] = image of u in `other`; extend one vertex at a time,
        // checking edges back into the assigned prefix.
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(a: &Graph, b: &Graph, perm: &mut [usize], used: &mut [bool], u: usize) -> bool {
            let n = a.n();
            if u == n {
                return true;
            }
            for img in 0..n {
                if used[img] || a.degree(u) != b.degree(img) {
                    continue;
                }
                if (0..u).all(|w| a.has_edge(u, w) == b.has_edge(img, perm[w])) {
                    perm[u] = img;
                    used[img] = true;
                    if extend(a, b, perm, used, u + 1) {
                        return true;
                    }
                    perm[u] = usize::MAX;
                    used[img] = false;
                }
            }
            false
        }
        Ok(extend(self, other, &mut perm, &mut used, 0))
    }

    /// Builds a graph on `n <= 11` vertices from a bitmask over the upper
    /// triangle in the same column order as graph6: bit `j*(j-1)/2 + i`
    /// encodes the pair `(i, j)` with `i < j`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 11 {
            return Err(Error::TooLarge { n, max: 11, what: "pair-mask construction" });
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

/// Structural summary produced by [`Graph::structure_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    /// Greatest breadth-first distance over all pairs; `None` when the
    /// graph is disconnected (infinite diameter).
    pub diameter: Option<usize>,
    pub triangles: u64,
    /// Non-increasing degree sequence.
    pub degree_sequence: Vec<usize>,
    pub max_degree: usize,
    pub second_max_degree: usize,
}

/// Parametric graph families with closed-form spectra or indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Star on `n` vertices: one hub adjacent to `n - 1` leaves.
    Star { n: usize },
    /// Path on `n` vertices.
    Path { n: usize },
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Two adjacent hubs carrying `a >= 1` and `b >= 1` leaves
    /// (`n = a + b + 2`).
    DoubleStar { a: usize, b: usize },
    /// One hub carrying `s` triangles, `t` pendant paths of length two,
    /// and `q` pendant edges (`n = 2s + 2t + q + 1`).
    Firefly { s: usize, t: usize, q: usize },
}

impl FamilySpec {
    /// Vertex count of the family member, after parameter validation.
    pub fn order(&self) -> Result<usize> {
        match *self {
            FamilySpec::Star { n } | FamilySpec::Path { n } | FamilySpec::Complete { n } => {
                if n == 0 {
                    Err(Error::InvalidParams("family order must be positive".into()))
                } else {
                    Ok(n)
                }
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")))
                } else {
                    Ok(n)
                }
            }
            FamilySpec::DoubleStar { a, b } => {
                if a == 0 || b == 0 {
                    Err(Error::InvalidParams(format!(
                        "double star needs a >= 1 and b >= 1, got a={a}, b={b}"
                    )))
                } else {
                    Ok(a + b + 2)
                }
            }
            FamilySpec::Firefly { s, t, q } => Ok(2 * s + 2 * t + q + 1),
        }
    }

    /// Builds the family member on its canonical vertex labelling.
    pub fn generate(&self) -> Result<Graph> {
        let n = self.order()?;
        let mut g = Graph::empty(n)?;
        match *self {
            FamilySpec::Star { .. } => {
                for v in 1..n {
                    g.add_edge(0, v)?;
                }
            }
            FamilySpec::Path { .. } => {
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
            }
            FamilySpec::Complete { .. } => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
            }
            FamilySpec::Cycle { .. } => {
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
                g.add_edge(n - 1, 0)?;
            }
            FamilySpec::DoubleStar { a, b } => {
                g.add_edge(0, 1)?;
                for k in 0..a {
                    g.add_edge(0, 2 + k)?;
                }
                for k in 0..b {
                    g.add_edge(1, 2 + a + k)?;
                }
            }
            FamilySpec::Firefly { s, t, q } => {
                for i in 0..s {
                    let (x, y) = (1 + 2 * i, 2 + 2 * i);
                    g.add_edge(0, x)?;
                    g.add_edge(0, y)?;
                    g.add_edge(x, y)?;
                }
                for j in 0..t {
                    let mid = 2 * s + 1 + 2 * j;
                    let tip = mid + 1;
                    g.add_edge(0, mid)?;
                    g.add_edge(mid, tip)?;
                }
                for k in 0..q {
                    g.add_edge(0, 2 * s + 2 * t + 1 + k)?;
                }
            }
        }
        Ok(g)
    }
}
