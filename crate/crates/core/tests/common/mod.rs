//! Shared helpers for integration tests: seeded random graphs and a
//! Prüfer-sequence tree decoder used as an independent oracle.

use bhix_core::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence of length `n - 2` into the labelled tree on
/// `0..n` it encodes: repeatedly join the smallest remaining leaf to the
/// next sequence entry, then join the last two leaves.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2, "a Prüfer sequence needs n >= 2");
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    let mut degree = vec![1u32; n];
    for &s in seq {
        assert!(s < n, "sequence entry out of range");
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edge_list(n, &edges).expect("Prüfer decode yields a simple graph")
}

/// Uniformly random labelled tree on `n` vertices (random Prüfer
/// sequence; the degenerate orders 1 and 2 are handled directly).
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    match n {
        0 => panic!("empty tree"),
        1 => Graph::empty(1).unwrap(),
        2 => Graph::from_edge_list(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// Random connected graph: a random spanning tree plus `extra` randomly
/// chosen additional edges (duplicates silently skipped).
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut g = random_tree(rng, n);
    if n < 2 {
        return g;
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Erdős–Rényi-style random graph with edge probability `p`; may be
/// disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
