//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use levelable::Graph;
use rand::Rng;

/// Maximal independent sets by filtering all `2^n` subsets.
pub fn brute_force_mis(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let independent = |s: u32| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
    let mut out: Vec<Vec<usize>> = (0..1u32 << n)
        .filter(|&s| independent(s))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Whether every weight-sum over the brute-force maximal sets agrees.
pub fn brute_force_valid(g: &Graph, w: &[u64]) -> bool {
    if w.len() != g.n() || w.contains(&0) {
        return false;
    }
    let sums: Vec<u64> = brute_force_mis(g)
        .iter()
        .map(|s| s.iter().map(|&v| w[v]).sum())
        .collect();
    sums.windows(2).all(|p| p[0] == p[1])
}

/// Chordal iff no vertex subset of size ≥ 4 induces a cycle.
pub fn brute_force_chordal(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    for s in 0u32..1 << n {
        if s.count_ones() < 4 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vs);
        if h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2) {
            return false;
        }
    }
    true
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Uniform labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_tree(n, &seq)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Canonical form under relabelling: the lexicographically smallest
/// adjacency bitmask over all permutations.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(perm[i], perm[j]) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            return (n, best);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
