//! Maximal independent sets: the facets of the independence complex.

use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_SETS: usize = 1_000_000;

static MAX_SETS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SETS);

/// Process-wide cap used wherever no explicit cap is given.
pub fn default_max_sets() -> usize {
    MAX_SETS.load(Ordering::Relaxed)
}

pub fn set_default_max_sets(cap: usize) {
    MAX_SETS.store(cap, Ordering::Relaxed);
}

/// All maximal independent sets of a graph, each sorted, listed in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxIndFamily {
    sets: Vec<Vec<usize>>,
    source_n: usize,
}

impl MaxIndFamily {
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn bitsets(&self) -> Vec<FixedBitSet> {
        self.sets
            .iter()
            .map(|set| {
                let mut bits = FixedBitSet::with_capacity(self.source_n);
                for &v in set {
                    bits.insert(v);
                }
                bits
            })
            .collect()
    }

    pub fn independence_number(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_well_covered(&self) -> bool {
        self.sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Wraps an explicit list of sets; they are sorted and deduplicated but
    /// not checked against any graph.
    pub fn from_sets(source_n: usize, sets: Vec<Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        sets.sort();
        sets.dedup();
        MaxIndFamily { sets, source_n }
    }
}

pub fn enumerate_max_independent_sets(g: &Graph) -> Result<MaxIndFamily> {
    enumerate_with_cap(g, default_max_sets())
}

/// Bron–Kerbosch with pivoting, run on the complement implicitly: the
/// candidate set `P` always holds vertices independent of the current set.
/// Pivot is the vertex of `P ∪ X` with the most non-neighbours in `P`,
/// ties to the smallest index. Fails rather than truncates past `cap`.
pub fn enumerate_with_cap(g: &Graph, cap: usize) -> Result<MaxIndFamily> {
    let n = g.n();
    let mut closed = g.neighbor_sets();
    for (v, set) in closed.iter_mut().enumerate() {
        set.insert(v);
    }
    let mut search = Search {
        closed: &closed,
        cap,
        found: Vec::new(),
        current: Vec::new(),
    };
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    search.expand(candidates, FixedBitSet::with_capacity(n))?;

    let mut sets = search.found;
    sets.sort();
    Ok(MaxIndFamily { sets, source_n: n })
}

struct Search<'a> {
    /// Closed neighbourhoods `N[v]`.
    closed: &'a [FixedBitSet],
    cap: usize,
    found: Vec<Vec<usize>>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet, mut excluded: FixedBitSet) -> Result<()> {
        if candidates.is_clear() {
            if excluded.is_clear() {
                if self.found.len() == self.cap {
                    return Err(Error::TooManySets { cap: self.cap });
                }
                let mut set = self.current.clone();
                set.sort_unstable();
                self.found.push(set);
            }
            return Ok(());
        }

        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .map(|u| (candidates.difference_count(&self.closed[u]), u))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, u)| u)
            .expect("candidates nonempty");

        let branch: Vec<usize> = candidates.intersection(&self.closed[pivot]).collect();
        for v in branch {
            let mut next_candidates = candidates.clone();
            next_candidates.difference_with(&self.closed[v]);
            let mut next_excluded = excluded.clone();
            next_excluded.difference_with(&self.closed[v]);

            self.current.push(v);
            self.expand(next_candidates, next_excluded)?;
            self.current.pop();

            candidates.set(v, false);
            excluded.insert(v);
        }
        Ok(())
    }
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(enumerate_max_independent_sets(g)?.independence_number())
}

pub fn is_well_covered(g: &Graph) -> Result<bool> {
    Ok(enumerate_max_independent_sets(g)?.is_well_covered())
}
