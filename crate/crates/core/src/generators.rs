//! Generators for the graph families the classifiers work with.
//!
//! Vertex numbering per family:
//! - path / cycle: sequential, `i ~ i+1` (and `n-1 ~ 0` for cycles);
//! - complete multipartite: parts in block order;
//! - circulant `C_n(S)`: `i ~ j` iff `|i-j| ∈ S` or `n-|i-j| ∈ S`;
//! - caterpillar: spine `0..L`, then the legs of each spine vertex in spine order;
//! - big star: center `0`, then each arm outward from the center, arms in
//!   declaration order;
//! - star `K_{1,n}`: center `0`, leaves `1..=n`;
//! - Cameron–Walker: see [`CwSpec`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Constructor data for a Cameron–Walker graph: a connected bipartite
/// skeleton on `U ∪ V`, `legs[i] ≥ 1` pendant leaves on each `U`-vertex and
/// `triangles[j] ≥ 0` pendant triangles on each `V`-vertex.
///
/// Realised numbering: `U` is `0..a`, `V` is `a..a+b`, then the leaves of
/// each `U`-vertex in order, then the two non-root vertices of each pendant
/// triangle in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwSpec {
    pub u_count: usize,
    pub v_count: usize,
    /// Skeleton edges as `(u_index, v_index)`.
    pub edges: Vec<(usize, usize)>,
    pub legs: Vec<usize>,
    pub triangles: Vec<usize>,
}

impl CwSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(format!("Cameron-Walker: {msg}")));
        if self.u_count == 0 || self.v_count == 0 {
            return bad("both sides of the bipartition must be nonempty".into());
        }
        if self.legs.len() != self.u_count {
            return bad(format!(
                "{} leg counts for {} U-vertices",
                self.legs.len(),
                self.u_count
            ));
        }
        if self.triangles.len() != self.v_count {
            return bad(format!(
                "{} triangle counts for {} V-vertices",
                self.triangles.len(),
                self.v_count
            ));
        }
        if let Some(i) = self.legs.iter().position(|&q| q == 0) {
            return bad(format!("U-vertex {i} has no leaf"));
        }
        for &(u, v) in &self.edges {
            if u >= self.u_count || v >= self.v_count {
                return bad(format!("skeleton edge {u}-{v} out of range"));
            }
        }
        let skeleton = self.skeleton();
        if !skeleton.is_connected() {
            return bad("bipartite skeleton is not connected".into());
        }
        for j in 0..self.v_count {
            if self.triangles[j] == 0 && skeleton.degree(self.u_count + j) < 2 {
                return bad(format!(
                    "exceptional V-vertex {j} has fewer than two U-neighbours"
                ));
            }
        }
        Ok(())
    }

    fn skeleton(&self) -> Graph {
        Graph::from_edges_unchecked(
            self.u_count + self.v_count,
            self.edges.iter().map(|&(u, v)| (u, self.u_count + v)),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.u_count
            + self.v_count
            + self.legs.iter().sum::<usize>()
            + 2 * self.triangles.iter().sum::<usize>()
    }

    /// Indices of `V`-vertices with no pendant triangle.
    pub fn exceptional_vertices(&self) -> Vec<usize> {
        (0..self.v_count)
            .filter(|&j| self.triangles[j] == 0)
            .collect()
    }

    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u, self.u_count + v))
            .collect();
        let mut next = self.u_count + self.v_count;
        for (u, &q) in self.legs.iter().enumerate() {
            for _ in 0..q {
                edges.push((u, next));
                next += 1;
            }
        }
        for (j, &r) in self.triangles.iter().enumerate() {
            let root = self.u_count + j;
            for _ in 0..r {
                edges.extend([(root, next), (root, next + 1), (next, next + 1)]);
                next += 2;
            }
        }
        Graph::from_edges(next, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    /// `Cycle { n: 2 }` is realised as a single edge.
    Cycle {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Circulant {
        n: usize,
        connections: Vec<usize>,
    },
    /// One entry per spine vertex: the number of legs hanging off it.
    Caterpillar {
        legs: Vec<usize>,
    },
    BigStar {
        arms: Vec<usize>,
    },
    CameronWalker(CwSpec),
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// `K_{1,n}`.
    Star {
        n: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
        match self {
            FamilySpec::Path { n } if *n < 2 => bad("path needs n >= 2"),
            FamilySpec::Cycle { n } if *n < 2 => bad("cycle needs n >= 2"),
            FamilySpec::CompleteMultipartite { parts } if parts.is_empty() => {
                bad("multipartite graph needs at least one part")
            }
            FamilySpec::CompleteMultipartite { parts } if parts.contains(&0) => {
                bad("multipartite part sizes must be >= 1")
            }
            FamilySpec::Circulant { n, .. } if *n < 2 => bad("circulant needs n >= 2"),
            FamilySpec::Circulant { n, connections }
                if connections.iter().any(|&s| s == 0 || s > n / 2) =>
            {
                bad("circulant connections must lie in 1..=n/2")
            }
            FamilySpec::Caterpillar { legs } if legs.is_empty() => {
                bad("caterpillar spine is empty")
            }
            FamilySpec::BigStar { arms } if arms.len() < 3 => bad("big star needs at least 3 arms"),
            FamilySpec::BigStar { arms } if arms.contains(&0) => bad("big star arms must be >= 1"),
            FamilySpec::CameronWalker(spec) => spec.validate(),
            FamilySpec::RandomGnp { p, .. } if !(*p > 0.0 && *p < 1.0) => {
                bad("edge probability must lie strictly between 0 and 1")
            }
            FamilySpec::Star { n } if *n < 1 => bad("star needs at least one leaf"),
            _ => Ok(()),
        }
    }

    /// Parses the token form used on the command line, e.g.
    /// `["circulant", "10", "2,5"]` or `["bigstar", "1,2,2,3"]`.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let bad = || {
            Error::InvalidFamily(format!(
                "cannot parse family {:?}; see `gen --help` for the accepted forms",
                tokens.join(" ")
            ))
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let list = |s: &str| -> Result<Vec<usize>> {
            if s == "-" || s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect()
        };
        let spec = match tokens.as_slice() {
            ["path", n] => FamilySpec::Path { n: num(n)? },
            ["cycle", n] => FamilySpec::Cycle { n: num(n)? },
            ["star", n] => FamilySpec::Star { n: num(n)? },
            ["multipartite", parts] => FamilySpec::CompleteMultipartite {
                parts: list(parts)?,
            },
            ["circulant", n, s] => FamilySpec::Circulant {
                n: num(n)?,
                connections: list(s)?,
            },
            ["circulant", n] => FamilySpec::Circulant {
                n: num(n)?,
                connections: Vec::new(),
            },
            ["cubic-circulant", n, a] => {
                let (n, a) = (num(n)?, num(a)?);
                FamilySpec::Circulant {
                    n: 2 * n,
                    connections: vec![a, n],
                }
            }
            ["caterpillar", legs] => FamilySpec::Caterpillar { legs: list(legs)? },
            ["bigstar", arms] => FamilySpec::BigStar { arms: list(arms)? },
            ["gnp", n, p, seed] => FamilySpec::RandomGnp {
                n: num(n)?,
                p: p.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            },
            ["cameron-walker", a, b, edges, legs, triangles] => {
                let edges = if *edges == "-" {
                    Vec::new()
                } else {
                    edges
                        .split(',')
                        .map(|e| {
                            let (u, v) = e.split_once('-').ok_or_else(bad)?;
                            Ok((num(u)?, num(v)?))
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                FamilySpec::CameronWalker(CwSpec {
                    u_count: num(a)?,
                    v_count: num(b)?,
                    edges,
                    legs: list(legs)?,
                    triangles: list(triangles)?,
                })
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        FamilySpec::from_tokens(&tokens)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        match self {
            FamilySpec::Path { n } => write!(f, "path {n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle {n}"),
            FamilySpec::Star { n } => write!(f, "star {n}"),
            FamilySpec::CompleteMultipartite { parts } => write!(f, "multipartite {}", join(parts)),
            FamilySpec::Circulant { n, connections } => {
                write!(f, "circulant {n} {}", join(connections))
            }
            FamilySpec::Caterpillar { legs } => write!(f, "caterpillar {}", join(legs)),
            FamilySpec::BigStar { arms } => write!(f, "bigstar {}", join(arms)),
            FamilySpec::RandomGnp { n, p, seed } => write!(f, "gnp {n} {p} {seed}"),
            FamilySpec::CameronWalker(cw) => {
                let edges = if cw.edges.is_empty() {
                    "-".to_string()
                } else {
                    cw.edges
                        .iter()
                        .map(|(u, v)| format!("{u}-{v}"))
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(
                    f,
                    "cameron-walker {} {} {} {} {}",
                    cw.u_count,
                    cw.v_count,
                    edges,
                    join(&cw.legs),
                    join(&cw.triangles)
                )
            }
        }
    }
}

pub fn generate_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::CompleteMultipartite { parts } => complete_multipartite(parts),
        FamilySpec::Circulant { n, connections } => circulant(*n, connections),
        FamilySpec::Caterpillar { legs } => caterpillar(legs),
        FamilySpec::BigStar { arms } => big_star(arms),
        FamilySpec::CameronWalker(cw) => cw.realize()?,
        FamilySpec::RandomGnp { n, p, seed } => random_gnp(*n, *p, *seed),
        FamilySpec::Star { n } => Graph::from_edges_unchecked(n + 1, (1..=*n).map(|v| (0, v))),
    })
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => path(2),
        _ => Graph::from_edges_unchecked(n, (0..n).map(|v| (v, (v + 1) % n))),
    }
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut block = Vec::new();
    for (k, &size) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(k, size));
    }
    let n = block.len();
    let block = &block;
    Graph::from_edges_unchecked(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| block[u] != block[v])
            .collect::<Vec<_>>(),
    )
}

pub fn circulant(n: usize, connections: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = j - i;
            if connections.iter().any(|&s| s == d || s == n - d) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

pub fn caterpillar(legs: &[usize]) -> Graph {
    let spine = legs.len();
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (v, &count) in legs.iter().enumerate() {
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::from_edges_unchecked(next, edges)
}

pub fn big_star(arms: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges_unchecked(next, edges)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based uniform draw in `[0, 1)` keyed by `(seed, i, j)`, so the
/// coin for a pair does not depend on the order pairs are visited.
pub fn edge_coin(seed: u64, i: usize, j: usize) -> f64 {
    let h = splitmix64(splitmix64(splitmix64(seed) ^ i as u64) ^ (j as u64).rotate_left(32));
    (h >> 11) as f64 / (1u64 << 53) as f64
}

pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| edge_coin(seed, i, j) < p)
        .collect();
    Graph::from_edges_unchecked(n, edges)
}
