//! Graph constructions that carry a valid weight function along.
//!
//! Original vertices keep their indices; new vertices are appended in
//! construction order. Every returned weight function is re-validated.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::path;
use crate::graph::Graph;
use crate::level::{validate_weights, WeightFunction};

fn check_vertex(g: &Graph, x: usize) -> Result<()> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: g.n(),
        });
    }
    Ok(())
}

/// Adds `y` with `N(y) = N(x)`. Weights double except at `x`, and `y`
/// copies the weight of `x`.
pub fn duplicate_vertex(
    g: &Graph,
    x: usize,
    w: &WeightFunction,
) -> Result<(Graph, WeightFunction)> {
    check_vertex(g, x)?;
    validate_weights(g, &w.weights)?;
    let y = g.n();
    let edges = g.edges().chain(g.neighbors(x).iter().map(|&u| (u, y)));
    let h = Graph::from_edges(y + 1, edges.collect::<Vec<_>>())?;
    let mut weights = w
        .weights
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if i == x {
                Ok(c)
            } else {
                c.checked_mul(2).ok_or(Error::WeightOverflow)
            }
        })
        .collect::<Result<Vec<u64>>>()?;
    weights.push(w.weights[x]);
    let wf = validate_weights(&h, &weights)?;
    Ok((h, wf))
}

/// Adds `y` with `N[y] = N[x]`; all weights are kept and `y` copies `x`.
pub fn expand_vertex(g: &Graph, x: usize, w: &WeightFunction) -> Result<(Graph, WeightFunction)> {
    check_vertex(g, x)?;
    validate_weights(g, &w.weights)?;
    let y = g.n();
    let edges = g
        .edges()
        .chain(std::iter::once((x, y)))
        .chain(g.neighbors(x).iter().map(|&u| (u, y)));
    let h = Graph::from_edges(y + 1, edges.collect::<Vec<_>>())?;
    let mut weights = w.weights.clone();
    weights.push(w.weights[x]);
    let wf = validate_weights(&h, &weights)?;
    Ok((h, wf))
}

/// `G(H_1, …, H_n)`: a copy of each `H_i` whose vertices are all joined to
/// `x_i`. No weights involved; used to probe the converse direction.
pub fn attach_structure(g: &Graph, hs: &[Graph]) -> Result<Graph> {
    if hs.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: hs.len(),
        });
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut offset = g.n();
    for (x, h) in hs.iter().enumerate() {
        edges.extend(h.edges().map(|(u, v)| (offset + u, offset + v)));
        edges.extend((0..h.n()).map(|u| (x, offset + u)));
        offset += h.n();
    }
    Graph::from_edges(offset, edges)
}

/// `G(H_1, …, H_n)` with `x_i` weighted by the independence weight of
/// `H_i` and each `H_i` keeping its weights.
pub fn attach_graphs(g: &Graph, hs: &[(Graph, WeightFunction)]) -> Result<(Graph, WeightFunction)> {
    if hs.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: hs.len(),
        });
    }
    let mut weights = Vec::with_capacity(g.n());
    let mut tail = Vec::new();
    for (i, (h, w)) in hs.iter().enumerate() {
        if h.n() == 0 {
            return Err(Error::InvalidConstruction(format!(
                "attached graph {i} has no vertices"
            )));
        }
        let wf = validate_weights(h, &w.weights)?;
        weights.push(wf.independence_weight);
        tail.extend(wf.weights);
    }
    weights.extend(tail);
    let graphs: Vec<Graph> = hs.iter().map(|(h, _)| h.clone()).collect();
    let composite = attach_structure(g, &graphs)?;
    let wf = validate_weights(&composite, &weights)?;
    Ok((composite, wf))
}

/// Target weight profiles realisable on connected levelable graphs built
/// over a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum WeightProfile {
    /// Pairs `(c_i, r_i)`, `r_i ≥ 2`: weight `c_i` on `r_i` vertices, via a
    /// clique `K_{r_i - 1}` attached at path vertex `i`.
    Cliques { pairs: Vec<(u64, usize)> },
    /// `c_i ≥ 1` pendant leaves at path vertex `i`; the path vertex gets
    /// weight `c_i`, every leaf 1.
    Pendants { counts: Vec<usize> },
}

pub fn realize_weight_profile(profile: &WeightProfile) -> Result<(Graph, WeightFunction)> {
    let hs: Vec<(Graph, WeightFunction)> = match profile {
        WeightProfile::Cliques { pairs } => {
            if pairs.is_empty() || pairs.iter().any(|&(c, r)| c < 1 || r < 2) {
                return Err(Error::InvalidConstruction(
                    "clique profile needs at least one pair, each c >= 1 and r >= 2".into(),
                ));
            }
            pairs
                .iter()
                .map(|&(c, r)| {
                    let w = WeightFunction {
                        weights: vec![c; r - 1],
                        independence_weight: c,
                    };
                    (Graph::complete(r - 1), w)
                })
                .collect()
        }
        WeightProfile::Pendants { counts } => {
            if counts.is_empty() || counts.contains(&0) {
                return Err(Error::InvalidConstruction(
                    "pendant profile needs at least one entry, each >= 1".into(),
                ));
            }
            counts
                .iter()
                .map(|&c| {
                    let w = WeightFunction {
                        weights: vec![1; c],
                        independence_weight: c as u64,
                    };
                    (Graph::empty(c), w)
                })
                .collect()
        }
    };
    attach_graphs(&path(hs.len()), &hs)
}
