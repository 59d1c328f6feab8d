//! Closed-form classifiers for named graph families, with explicit weights
//! whenever a construction is known. Every returned weight function has
//! been validated on the realized graph.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::chordal::{is_leaf_order, leaf_order, maximal_cliques, perfect_elimination_order};
use crate::error::{Error, Result};
use crate::generators::{
    big_star, caterpillar, circulant, complete_multipartite, generate_family, CwSpec, FamilySpec,
};
use crate::graph::Graph;
use crate::level::{decide_levelable, validate_weights, WeightFunction};
use crate::mis::enumerate_max_independent_sets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Path,
    Cycle,
    Tree,
    Caterpillar,
    BigStar,
    CubicCirculant,
    CompleteMultipartite,
    AlphaLe2,
    Cochordal,
    CameronWalker,
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub family: FamilyTag,
    pub levelable: bool,
    pub weights: Option<WeightFunction>,
    pub citation: String,
}

impl FamilyVerdict {
    fn new(
        family: FamilyTag,
        weights: Option<WeightFunction>,
        citation: impl Into<String>,
    ) -> Self {
        FamilyVerdict {
            family,
            levelable: weights.is_some(),
            weights,
            citation: citation.into(),
        }
    }

    fn negative(family: FamilyTag, citation: impl Into<String>) -> Self {
        FamilyVerdict::new(family, None, citation)
    }
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// Weights for a tree in which every internal vertex has a leaf neighbour:
/// an internal vertex carries its number of leaves, a leaf carries 1.
fn tree_weights(g: &Graph) -> Option<Vec<u64>> {
    if g.n() <= 2 {
        return Some(vec![1; g.n()]);
    }
    (0..g.n())
        .map(|v| {
            if g.degree(v) == 1 {
                return Some(1);
            }
            let leaves = g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count();
            (leaves > 0).then_some(leaves as u64)
        })
        .collect()
}

pub fn classify_tree(g: &Graph) -> Result<FamilyVerdict> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let weights = match tree_weights(g) {
        Some(w) => Some(validate_weights(g, &w)?),
        None => None,
    };
    Ok(FamilyVerdict::new(
        FamilyTag::Tree,
        weights,
        "a tree is levelable iff every vertex of degree at least 2 is adjacent to a leaf",
    ))
}

/// Rewrites a leg sequence so that both spine ends carry a leg: a legless
/// end vertex is itself a leg of its spine neighbour.
pub fn normalize_caterpillar(legs: &[usize]) -> Vec<usize> {
    let mut legs = legs.to_vec();
    while legs.len() >= 2 && legs[0] == 0 {
        legs.remove(0);
        legs[0] += 1;
    }
    while legs.len() >= 2 && legs[legs.len() - 1] == 0 {
        legs.pop();
        *legs.last_mut().unwrap() += 1;
    }
    legs
}

pub fn classify_caterpillar(legs: &[usize]) -> Result<FamilyVerdict> {
    if legs.is_empty() {
        return Err(Error::InvalidFamily("caterpillar spine is empty".into()));
    }
    let normal = normalize_caterpillar(legs);
    let citation = "a caterpillar is levelable iff every spine vertex has at least one leg";
    // A lone spine vertex without legs is K1.
    if normal.len() > 1 && normal.contains(&0) {
        return Ok(FamilyVerdict::negative(FamilyTag::Caterpillar, citation));
    }
    let g = caterpillar(legs);
    let w = tree_weights(&g).ok_or_else(|| {
        Error::InvalidConstruction("normalized caterpillar lacks a leaf neighbour".into())
    })?;
    Ok(FamilyVerdict::new(
        FamilyTag::Caterpillar,
        Some(validate_weights(&g, &w)?),
        citation,
    ))
}

pub fn classify_big_star(arms: &[usize]) -> Result<FamilyVerdict> {
    if arms.len() < 3 || arms.contains(&0) {
        return Err(Error::InvalidFamily(
            "big star needs at least 3 arms, each of length >= 1".into(),
        ));
    }
    let citation =
        "a big star is levelable iff every arm has length at most 2 and some arm has length 1";
    if arms.iter().any(|&a| a > 2) || !arms.contains(&1) {
        return Ok(FamilyVerdict::negative(FamilyTag::BigStar, citation));
    }
    let g = big_star(arms);
    let w = tree_weights(&g)
        .ok_or_else(|| Error::InvalidConstruction("big star lacks a leaf neighbour".into()))?;
    Ok(FamilyVerdict::new(
        FamilyTag::BigStar,
        Some(validate_weights(&g, &w)?),
        citation,
    ))
}

fn copies(t: usize) -> String {
    if t == 1 {
        "1 copy".into()
    } else {
        format!("{t} copies")
    }
}

/// Verdict for `C_{2n}(a, n)` via its decomposition into `t = gcd(2n, a)`
/// copies of a smaller cubic circulant.
pub fn cubic_circulant_rule(n: usize, a: usize) -> Result<(usize, bool, String)> {
    if a < 1 || a >= n {
        return Err(Error::InvalidFamily(format!(
            "cubic circulant C_2n(a,n) needs 1 <= a < n, got n={n}, a={a}"
        )));
    }
    let t = (2 * n).gcd(&a);
    let m = 2 * n / t;
    if m.is_multiple_of(2) {
        let k = n / t;
        Ok((
            t,
            matches!(k, 2..=4),
            format!(
                "C_{}({a},{n}) is {} of C_{m}(1,{k}); C_2k(1,k) is levelable iff k in {{2,3,4}}",
                2 * n,
                copies(t)
            ),
        ))
    } else {
        Ok((
            t,
            matches!(m, 3 | 5),
            format!(
                "C_{}({a},{n}) is {} of C_{}(2,{m}); C_2k(2,k) with k odd is levelable iff k in {{3,5}}",
                2 * n,
                copies(t / 2),
                2 * m
            ),
        ))
    }
}

pub fn classify_cubic_circulant(n: usize, a: usize) -> Result<FamilyVerdict> {
    let (_, levelable, citation) = cubic_circulant_rule(n, a)?;
    if !levelable {
        return Ok(FamilyVerdict::negative(FamilyTag::CubicCirculant, citation));
    }
    // Vertex-transitive, so constant weights work whenever any weights do.
    let g = circulant(2 * n, &[a, n]);
    let w = validate_weights(&g, &vec![1u64; g.n()])?;
    Ok(FamilyVerdict::new(
        FamilyTag::CubicCirculant,
        Some(w),
        citation,
    ))
}

/// Weight `lcm / a_i` on every vertex of part `i`.
pub fn multipartite_weights(parts: &[usize]) -> Result<WeightFunction> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidFamily("part sizes must be >= 1".into()));
    }
    let lcm = parts.iter().fold(1u64, |acc, &a| acc.lcm(&(a as u64)));
    let w: Vec<u64> = parts
        .iter()
        .flat_map(|&a| std::iter::repeat_n(lcm / a as u64, a))
        .collect();
    validate_weights(&complete_multipartite(parts), &w)
}

/// The parts of `g` when it is complete multipartite, i.e. when its
/// complement is a disjoint union of cliques.
fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.n() == 0 {
        return None;
    }
    let h = g.complement();
    let parts = h.connected_components();
    let cliques = parts.iter().all(|c| {
        c.iter()
            .all(|&u| c.iter().all(|&v| u == v || h.has_edge(u, v)))
    });
    cliques.then_some(parts)
}

pub fn classify_alpha_le2(g: &Graph) -> Result<Option<FamilyVerdict>> {
    let mis = enumerate_max_independent_sets(g)?;
    let alpha = mis.independence_number();
    if alpha > 2 {
        return Ok(None);
    }
    let w: Vec<u64> = if alpha <= 1 {
        vec![1; g.n()]
    } else {
        (0..g.n())
            .map(|v| if g.degree(v) + 1 == g.n() { 2 } else { 1 })
            .collect()
    };
    Ok(Some(FamilyVerdict::new(
        FamilyTag::AlphaLe2,
        Some(crate::level::validate_against(&mis, &w)?),
        "every graph with independence number at most 2 is levelable",
    )))
}

/// Weights for a graph whose complement is chordal, built facet by facet
/// along a leaf order of the complement's clique complex.
pub fn cochordal_weights(g: &Graph) -> Result<Option<WeightFunction>> {
    if g.n() == 0 {
        return Ok(Some(WeightFunction {
            weights: Vec::new(),
            independence_weight: 0,
        }));
    }
    let h = g.complement();
    let Some(peo) = perfect_elimination_order(&h) else {
        return Ok(None);
    };
    let facets = maximal_cliques(&h, &peo);
    let order = leaf_order(&facets);
    debug_assert!(is_leaf_order(&facets, &order));

    let mut weights = vec![0u64; g.n()];
    let mut c = 0u64;
    for &(f, branch) in &order {
        let facet = &facets[f];
        let Some(branch) = branch else {
            facet.iter().for_each(|&v| weights[v] = 1);
            c = facet.len() as u64;
            continue;
        };
        let shared: u64 = facet
            .iter()
            .filter(|v| facets[branch].binary_search(v).is_ok())
            .map(|&v| weights[v])
            .sum();
        let free: Vec<usize> = facet
            .iter()
            .copied()
            .filter(|v| facets[branch].binary_search(v).is_err())
            .collect();
        let k = free.len() as u64;
        let mut gap = c - shared;
        let d = k / gap + 1;
        if d > 1 {
            for w in weights.iter_mut() {
                *w = w.checked_mul(d).ok_or(Error::WeightOverflow)?;
            }
            c = c.checked_mul(d).ok_or(Error::WeightOverflow)?;
            gap *= d;
        }
        let (last, rest) = free.split_last().expect("a new facet has a free vertex");
        rest.iter().for_each(|&v| weights[v] = 1);
        weights[*last] = gap - (k - 1);
    }
    validate_weights(g, &weights).map(Some)
}

pub fn classify_cameron_walker(spec: &CwSpec) -> Result<FamilyVerdict> {
    let g = spec.realize()?;
    let citation = "a Cameron-Walker graph is levelable iff it has no exceptional vertex";
    if !spec.exceptional_vertices().is_empty() {
        return Ok(FamilyVerdict::negative(FamilyTag::CameronWalker, citation));
    }
    let mut w: Vec<u64> = spec.legs.iter().map(|&q| q as u64).collect();
    w.extend(spec.triangles.iter().map(|&r| r as u64));
    w.resize(g.n(), 1);
    Ok(FamilyVerdict::new(
        FamilyTag::CameronWalker,
        Some(validate_weights(&g, &w)?),
        citation,
    ))
}

fn is_path(g: &Graph) -> bool {
    g.n() >= 2 && is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Structural dispatcher; graphs outside every recognised family are
/// decided by linear programming.
pub fn classify(g: &Graph) -> Result<FamilyVerdict> {
    if is_path(g) {
        let n = g.n();
        let weights = if n <= 4 {
            Some(validate_weights(g, &tree_weights(g).unwrap())?)
        } else {
            None
        };
        return Ok(FamilyVerdict::new(
            FamilyTag::Path,
            weights,
            "P_n is levelable iff n in {2,3,4}",
        ));
    }
    if is_cycle(g) {
        let weights = if matches!(g.n(), 3 | 4 | 5 | 7) {
            Some(validate_weights(g, &vec![1u64; g.n()])?)
        } else {
            None
        };
        return Ok(FamilyVerdict::new(
            FamilyTag::Cycle,
            weights,
            "C_n is levelable iff n in {2,3,4,5,7}",
        ));
    }
    if is_tree(g) {
        return classify_tree(g);
    }
    if let Some(parts) = multipartite_parts(g) {
        let lcm = parts.iter().fold(1u64, |acc, p| acc.lcm(&(p.len() as u64)));
        let mut w = vec![0u64; g.n()];
        for part in &parts {
            part.iter().for_each(|&v| w[v] = lcm / part.len() as u64);
        }
        return Ok(FamilyVerdict::new(
            FamilyTag::CompleteMultipartite,
            Some(validate_weights(g, &w)?),
            "complete multipartite graphs are levelable, with weight lcm/a_i on part i",
        ));
    }
    if let Some(verdict) = classify_alpha_le2(g)? {
        return Ok(verdict);
    }
    if let Some(w) = cochordal_weights(g)? {
        return Ok(FamilyVerdict::new(
            FamilyTag::Cochordal,
            Some(w),
            "graphs with chordal complement are levelable",
        ));
    }
    let cert = decide_levelable(g)?;
    Ok(FamilyVerdict::new(
        FamilyTag::Generic,
        cert.weights().cloned(),
        "decided by exact linear programming",
    ))
}

/// Classifies a family description, using the family's own rule where
/// one applies and the structural dispatcher otherwise.
pub fn classify_family(spec: &FamilySpec) -> Result<FamilyVerdict> {
    spec.validate()?;
    match spec {
        FamilySpec::Caterpillar { legs } => classify_caterpillar(legs),
        FamilySpec::BigStar { arms } => classify_big_star(arms),
        FamilySpec::CameronWalker(cw) => classify_cameron_walker(cw),
        FamilySpec::CompleteMultipartite { parts } => Ok(FamilyVerdict::new(
            FamilyTag::CompleteMultipartite,
            Some(multipartite_weights(parts)?),
            "complete multipartite graphs are levelable, with weight lcm/a_i on part i",
        )),
        FamilySpec::Circulant { n, connections } => {
            let mut s = connections.clone();
            s.sort_unstable();
            s.dedup();
            match s.as_slice() {
                &[a, half] if n % 2 == 0 && half == n / 2 && a < half => {
                    classify_cubic_circulant(half, a)
                }
                _ => classify(&generate_family(spec)?),
            }
        }
        _ => classify(&generate_family(spec)?),
    }
}
