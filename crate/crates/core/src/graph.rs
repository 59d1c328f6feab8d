//! Finite simple graphs on the vertex set `0..n`.
//!
//! Adjacency is stored as sorted, duplicate-free neighbour lists. Every
//! constructor enforces symmetry and the absence of self-loops, and a
//! [`Graph`] is immutable once built.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("generator produced an invalid edge")
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Self::from_edges_unchecked(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Neighbourhoods as bitsets over `0..n`.
    pub fn neighbor_sets(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        self.adj
            .iter()
            .map(|list| {
                let mut set = FixedBitSet::with_capacity(n);
                for &v in list {
                    set.insert(v);
                }
                set
            })
            .collect()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Independent and not extendable: every outside vertex has a neighbour
    /// inside.
    pub fn is_maximal_independent(&self, set: &[usize]) -> bool {
        if !self.is_independent(set) {
            return false;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        (0..self.n()).all(|v| inside[v] || self.adj[v].iter().any(|&u| inside[u]))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph {
            labels: self.labels.clone(),
            ..Self::from_edges_unchecked(n, edges)
        }
    }

    /// Places `other` after `self`, shifting its vertices by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edges_unchecked(shift + other.n(), edges)
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced on `vertices`; vertex `vertices[k]` becomes `k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges = vertices.iter().enumerate().flat_map(|(k, &u)| {
            let index = &index;
            self.adj[u].iter().filter_map(move |&v| {
                (index[v] != usize::MAX && index[v] > k).then_some((k, index[v]))
            })
        });
        Self::from_edges_unchecked(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Serialises to the edge-list format read by [`parse_graph`]; edges are
    /// written in lexicographic order so output is byte-deterministic.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list format: a header `n m` on the first non-comment
/// line, then `m` lines `u v`. Lines starting with `#` and blank lines are
/// ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header).ok_or_else(|| Error::Parse {
        line: header_line,
        message: format!("malformed header {header:?}, expected \"n m\""),
    })?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(Error::Parse {
                line: line_no,
                message: format!("more than the {m} declared edges"),
            });
        }
        let (u, v) = parse_pair(line).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("malformed edge {line:?}, expected \"u v\""),
        })?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex {w} out of range 0..{n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((a, b))
}
