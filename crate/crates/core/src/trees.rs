//! Enumeration of free (unlabelled) trees by canonical level sequences.
//!
//! A rooted tree on `n` vertices is written as its preorder depth list
//! `seq` with `seq[0] = 0`; the parent of vertex `i` is the most recent
//! earlier vertex one level up. The canonical rooted form lists children
//! in non-increasing subtree order, and rooted forms step to their
//! lexicographic successor in constant amortized time. Free trees are the
//! rooted forms that survive a balance test between the root's first
//! (deepest) subtree and the rest of the tree — height first, then size,
//! then lexicographic order — which picks exactly one root position per
//! isomorphism class; failing forms jump straight to the next survivor,
//! so each isomorphism class is produced exactly once.
//!
//! The iterator starts from the path rooted at its middle, the
//! lexicographically largest survivor, and descends to the star, the
//! smallest.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for tree enumeration; the class counts grow roughly as
/// `2.96^n` and desk-scale scans stay well below this.
pub const TREE_ENUM_MAX_N: usize = 18;

/// Number of isomorphism classes of free trees for each order `1..=18`.
/// These are long-published reference counts used as an enumeration
/// oracle.
pub const TREE_CLASS_COUNTS: [u64; 18] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
];

/// Published free-tree class count for order `n`, when tabulated.
pub fn tree_count_fixture(n: usize) -> Option<u64> {
    (1..=TREE_CLASS_COUNTS.len()).contains(&n).then(|| TREE_CLASS_COUNTS[n - 1])
}

/// Iterator over the canonical level sequences of all free trees on `n`
/// vertices, lexicographically descending.
pub struct FreeTreeIter {
    n: usize,
    /// The next rooted candidate to validate, or `None` when exhausted.
    candidate: Option<Vec<u32>>,
}

/// Enumerates all free trees on `n` vertices (`1 <= n <= 18`).
pub fn enumerate_trees(n: usize) -> Result<FreeTreeIter> {
    if n == 0 {
        return Err(Error::InvalidParams("tree enumeration needs n >= 1".into()));
    }
    if n > TREE_ENUM_MAX_N {
        return Err(Error::TooLarge { n, max: TREE_ENUM_MAX_N, what: "free tree enumeration" });
    }
    let candidate = if n <= 2 {
        // Single class each: the one- and two-vertex trees.
        Some((0..n as u32).collect())
    } else {
        // Path rooted at its middle vertex.
        let mut v: Vec<u32> = (0..=(n / 2) as u32).collect();
        v.extend(1..n.div_ceil(2) as u32);
        Some(v)
    };
    Ok(FreeTreeIter { n, candidate })
}

impl Iterator for FreeTreeIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let candidate = self.candidate.take()?;
        if self.n <= 2 {
            return Some(candidate);
        }
        let out = fix_to_free_canonical(candidate);
        self.candidate = next_rooted(&out, None);
        Some(out)
    }
}

/// Index of the second depth-1 vertex (start of the root's second
/// subtree), or the sequence length when the root has one subtree.
fn split_point(seq: &[u32]) -> usize {
    let mut seen = false;
    for (i, &d) in seq.iter().enumerate() {
        if d == 1 {
            if seen {
                return i;
            }
            seen = true;
        }
    }
    seq.len()
}

/// The balance test selecting one rooted representative per free tree:
/// compares the root's first subtree (rebased to depth 0) against the
/// tree with that subtree removed, by height, then size, then
/// lexicographic order.
fn is_free_canonical(seq: &[u32]) -> bool {
    let m = split_point(seq);
    let left: Vec<u32> = seq[1..m].iter().map(|&d| d - 1).collect();
    let rest: Vec<u32> =
        std::iter::once(0).chain(seq[m..].iter().copied()).collect();
    let left_h = *left.iter().max().expect("first subtree is nonempty");
    let rest_h = *rest.iter().max().expect("rest contains the root");
    if rest_h != left_h {
        return rest_h > left_h;
    }
    match left.len().cmp(&rest.len()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => left <= rest,
    }
}

/// Lexicographic successor among canonical rooted sequences: find the
/// last vertex deeper than 1 (or take `p` as given), and repeat the block
/// between its one-level-up predecessor and itself to the end.
fn next_rooted(seq: &[u32], p_override: Option<usize>) -> Option<Vec<u32>> {
    let p = match p_override {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while seq[q] != seq[p] - 1 {
        q -= 1;
    }
    let period = p - q;
    let mut out = seq.to_vec();
    for i in p..out.len() {
        out[i] = out[i - period];
    }
    Some(out)
}

/// Returns `candidate` when it already passes the balance test, otherwise
/// jumps directly to the next passing sequence: step the rooted successor
/// at the end of the first subtree, and when the first subtree reached
/// deeper than level 2, reset the tail to a fresh path one level taller
/// than the new first subtree.
fn fix_to_free_canonical(candidate: Vec<u32>) -> Vec<u32> {
    if is_free_canonical(&candidate) {
        return candidate;
    }
    let p = split_point(&candidate) - 1;
    let mut next =
        next_rooted(&candidate, Some(p)).expect("first subtree has positive length");
    if candidate[p] > 2 {
        let m = split_point(&next);
        let left_h = next[1..m].iter().map(|&d| d - 1).max().expect("nonempty");
        let suffix: Vec<u32> = (1..=left_h + 1).collect();
        let start = next.len() - suffix.len();
        next[start..].copy_from_slice(&suffix);
    }
    next
}

/// Rebuilds the tree a level sequence describes: vertex `i` hangs off the
/// most recent earlier vertex one level up.
pub fn level_sequence_to_graph(seq: &[u32]) -> Result<Graph> {
    if seq.is_empty() {
        return Err(Error::InvalidInput("empty level sequence".into()));
    }
    if seq[0] != 0 {
        return Err(Error::InvalidInput("level sequence must start at depth 0".into()));
    }
    let mut g = Graph::empty(seq.len())?;
    let mut last_at_depth: Vec<usize> = vec![0];
    for (i, &d) in seq.iter().enumerate().skip(1) {
        let d = d as usize;
        if d == 0 || d > last_at_depth.len() {
            return Err(Error::InvalidInput(format!(
                "level sequence jumps to depth {d} at position {i}"
            )));
        }
        g.add_edge(last_at_depth[d - 1], i)?;
        if d == last_at_depth.len() {
            last_at_depth.push(i);
        } else {
            last_at_depth[d] = i;
            last_at_depth.truncate(d + 1);
        }
    }
    Ok(g)
}

/// Canonical level sequence of an arbitrary tree: root at each centroid,
/// list children in non-increasing subtree order, and keep the
/// lexicographically largest result. Two trees are isomorphic exactly
/// when their canonical sequences are equal.
pub fn canonical_form(g: &Graph) -> Result<Vec<u32>> {
    if !g.is_tree() {
        return Err(Error::InvalidInput("canonical tree form needs a tree".into()));
    }
    centroids(g)
        .into_iter()
        .map(|c| rooted_sequence(g, c))
        .max()
        .ok_or_else(|| Error::InvalidInput("tree has no centroid".into()))
}

/// The one or two vertices minimizing the largest component left by their
/// removal (equivalently, with every hanging subtree of size at most n/2).
fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    // Orient the tree from vertex 0 (BFS order), then accumulate subtree
    // sizes bottom-up.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut best = n;
    let mut out = Vec::new();
    for u in 0..n {
        let mut largest = n - size[u];
        for v in g.neighbors(u) {
            if parent[v] == u && size[v] > largest {
                largest = size[v];
            }
        }
        match largest.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = largest;
                out = vec![u];
            }
            std::cmp::Ordering::Equal => out.push(u),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

/// Canonical level sequence of the tree rooted at `root`: children sorted
/// by non-increasing subtree sequence.
fn rooted_sequence(g: &Graph, root: usize) -> Vec<u32> {
    fn sub(g: &Graph, v: usize, parent: usize, depth: u32) -> Vec<u32> {
        let mut kids: Vec<Vec<u32>> = g
            .neighbors(v)
            .filter(|&u| u != parent)
            .map(|u| sub(g, u, v, depth + 1))
            .collect();
        kids.sort_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for k in kids {
            out.extend(k);
        }
        out
    }
    sub(g, root, usize::MAX, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use std::collections::HashSet;

    #[test]
    fn counts_match_published_values() {
        for n in 1..=14 {
            let count = enumerate_trees(n).unwrap().count() as u64;
            assert_eq!(Some(count), tree_count_fixture(n), "tree count at n = {n}");
        }
    }

    #[test]
    fn enumeration_yields_distinct_valid_trees() {
        for n in [6, 9, 11] {
            let mut canon = HashSet::new();
            for seq in enumerate_trees(n).unwrap() {
                let g = level_sequence_to_graph(&seq).unwrap();
                assert!(g.is_tree(), "sequence {seq:?} is not a tree");
                assert_eq!(g.n(), n);
                assert!(canon.insert(canonical_form(&g).unwrap()), "duplicate class {seq:?}");
            }
            assert_eq!(canon.len() as u64, tree_count_fixture(n).unwrap());
        }
    }

    #[test]
    fn five_vertex_classes_are_path_spider_star() {
        let classes: HashSet<Vec<u32>> = enumerate_trees(5)
            .unwrap()
            .map(|seq| canonical_form(&level_sequence_to_graph(&seq).unwrap()).unwrap())
            .collect();
        let expected: HashSet<Vec<u32>> = [
            FamilySpec::Path { n: 5 }.generate().unwrap(),
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap(),
            FamilySpec::Star { n: 5 }.generate().unwrap(),
        ]
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
        assert_eq!(classes, expected);
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let a = FamilySpec::DoubleStar { a: 2, b: 3 }.generate().unwrap();
        // The same double star with hubs labelled last.
        let b = Graph::from_edge_list(
            7,
            &[(5, 6), (5, 0), (5, 1), (6, 2), (6, 3), (6, 4)],
        )
        .unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let p7 = FamilySpec::Path { n: 7 }.generate().unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&p7).unwrap());
    }

    #[test]
    fn level_sequences_round_trip_through_canonical_form() {
        for seq in enumerate_trees(8).unwrap() {
            let g = level_sequence_to_graph(&seq).unwrap();
            let canon = canonical_form(&g).unwrap();
            let g2 = level_sequence_to_graph(&canon).unwrap();
            assert_eq!(canonical_form(&g2).unwrap(), canon);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(TREE_ENUM_MAX_N + 1).is_err());
        assert!(level_sequence_to_graph(&[]).is_err());
        assert!(level_sequence_to_graph(&[1]).is_err());
        assert!(level_sequence_to_graph(&[0, 1, 3]).is_err());
        let c4 = FamilySpec::Cycle { n: 4 }.generate().unwrap();
        assert!(canonical_form(&c4).is_err());
    }

    #[test]
    fn tiny_orders() {
        let one: Vec<Vec<u32>> = enumerate_trees(1).unwrap().collect();
        assert_eq!(one, vec![vec![0]]);
        let two: Vec<Vec<u32>> = enumerate_trees(2).unwrap().collect();
        assert_eq!(two, vec![vec![0, 1]]);
        let three: Vec<Vec<u32>> = enumerate_trees(3).unwrap().collect();
        assert_eq!(three.len(), 1);
    }
}
