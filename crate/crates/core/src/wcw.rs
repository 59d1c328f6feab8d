//! The vector space of well-covered weightings, computed exactly.
//!
//! A weighting lies in this space iff every maximal independent set has
//! the same weight, i.e. iff it is annihilated by the consecutive
//! differences `1_{W_k} - 1_{W_{k+1}}` of the family's indicator vectors.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{enumerate_max_independent_sets, MaxIndFamily};
use crate::rational::{Echelon, Rational, RationalVector};

/// `(s-1) × n` matrix whose row `k` is `1_{W_k} - 1_{W_{k+1}}`.
pub fn constraint_matrix(mis: &MaxIndFamily) -> Result<Vec<Vec<i64>>> {
    if mis.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = mis.source_n();
    let indicators: Vec<Vec<i64>> = mis
        .sets()
        .iter()
        .map(|set| {
            let mut row = vec![0; n];
            for &v in set {
                row[v] = 1;
            }
            row
        })
        .collect();
    Ok(indicators
        .windows(2)
        .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| a - b).collect())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WcwBasis {
    pub dim: usize,
    pub basis: Vec<RationalVector>,
    pub constraint_rows: Vec<Vec<i64>>,
    pub rank: usize,
    /// Free coordinates, one per basis vector; vector `k` has a 1 in
    /// `free_columns[k]` and 0 in every other free column.
    pub free_columns: Vec<usize>,
}

impl WcwBasis {
    pub fn n(&self) -> usize {
        self.dim + self.rank
    }

    /// Span membership via the basis coordinates: a vector is in the span
    /// iff it equals the combination of basis vectors weighted by its own
    /// free coordinates.
    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut combination = vec![BigRational::zero(); v.len()];
        for (b, &f) in self.basis.iter().zip(&self.free_columns) {
            for (acc, x) in combination.iter_mut().zip(b) {
                *acc += &v[f].0 * &x.0;
            }
        }
        combination.iter().zip(v).all(|(a, b)| *a == b.0)
    }
}

pub fn wcw_basis(g: &Graph) -> Result<WcwBasis> {
    wcw_basis_from_family(&enumerate_max_independent_sets(g)?)
}

pub fn wcw_basis_from_family(mis: &MaxIndFamily) -> Result<WcwBasis> {
    let rows = constraint_matrix(mis)?;
    let echelon = Echelon::from_rows(mis.source_n(), rows.iter().map(Vec::as_slice));
    let basis = echelon.kernel_basis();
    Ok(WcwBasis {
        dim: basis.len(),
        basis,
        rank: echelon.rank(),
        free_columns: echelon.free_columns(),
        constraint_rows: rows,
    })
}

/// Whether every maximal independent set of `g` has the same `w`-weight.
pub fn is_wcw_weighting(g: &Graph, w: &[Rational]) -> Result<bool> {
    if w.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: w.len(),
        });
    }
    let mis = enumerate_max_independent_sets(g)?;
    let mut sums = mis
        .sets()
        .iter()
        .map(|set| set.iter().map(|&v| &w[v].0).sum::<BigRational>());
    let Some(first) = sums.next() else {
        return Ok(true);
    };
    Ok(sums.all(|s| s == first))
}
