//! Independence complexes and the artinian monomial quotients
//! `k[x] / (I(G) + (x_1^{a_1}, …, x_n^{a_n}))`: monomial bases, socle
//! vectors and levelness, by direct enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::level::validate_against;
use crate::mis::{enumerate_max_independent_sets, MaxIndFamily};

pub const DEFAULT_MONOMIAL_CAP: u128 = 1_000_000;

/// Facets of a simplicial complex on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetComplex {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl FacetComplex {
    pub fn facet_sizes(&self) -> Vec<usize> {
        self.facets.iter().map(Vec::len).collect()
    }
}

pub fn independence_complex(g: &Graph) -> Result<FacetComplex> {
    let mis = enumerate_max_independent_sets(g)?;
    Ok(FacetComplex {
        n: g.n(),
        facets: mis.sets().to_vec(),
    })
}

/// Exponent bounds `a_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if let Some(index) = a.iter().position(|&x| x < 2) {
            return Err(Error::InvalidExponent {
                index,
                value: a[index],
            });
        }
        Ok(ExponentVector(a))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of exponent tuples `0 ≤ e_i < a_i`.
    pub fn candidate_count(&self) -> u128 {
        self.0
            .iter()
            .try_fold(1u128, |acc, &x| acc.checked_mul(x as u128))
            .unwrap_or(u128::MAX)
    }
}

impl TryFrom<Vec<u32>> for ExponentVector {
    type Error = Error;

    fn try_from(a: Vec<u32>) -> Result<Self> {
        ExponentVector::new(a)
    }
}

impl From<ExponentVector> for Vec<u32> {
    fn from(a: ExponentVector) -> Self {
        a.0
    }
}

/// Standard monomials of the quotient, grouped by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialBasis {
    pub graded_dims: Vec<usize>,
    /// Exponent tuples sorted by degree, then lexicographically.
    pub monomials: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleVector {
    pub s: Vec<usize>,
    pub e: usize,
}

impl SocleVector {
    pub fn is_level(&self) -> bool {
        self.s[..self.e].iter().all(|&x| x == 0)
    }
}

fn check_length(g: &Graph, a: &ExponentVector) -> Result<()> {
    if a.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: a.len(),
        });
    }
    Ok(())
}

/// Calls `visit` on every exponent tuple with independent support.
fn for_each_standard_monomial(
    g: &Graph,
    a: &ExponentVector,
    cap: u128,
    mut visit: impl FnMut(&[u32]),
) -> Result<()> {
    check_length(g, a)?;
    let needed = a.candidate_count();
    if needed > cap {
        return Err(Error::MonomialCap { needed, cap });
    }
    let n = g.n();
    let bounds = a.as_slice();
    let mut e = vec![0u32; n];
    loop {
        let independent = (0..n)
            .filter(|&i| e[i] > 0)
            .all(|i| g.neighbors(i).iter().all(|&j| e[j] == 0));
        if independent {
            visit(&e);
        }
        // Mixed-radix increment.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(());
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

pub fn monomial_basis(g: &Graph, a: &ExponentVector) -> Result<MonomialBasis> {
    monomial_basis_with_cap(g, a, DEFAULT_MONOMIAL_CAP)
}

pub fn monomial_basis_with_cap(g: &Graph, a: &ExponentVector, cap: u128) -> Result<MonomialBasis> {
    let mut monomials = Vec::new();
    for_each_standard_monomial(g, a, cap, |e| monomials.push(e.to_vec()))?;
    monomials.sort_by(|x, y| degree(x).cmp(&degree(y)).then_with(|| x.cmp(y)));
    let top = monomials.last().map_or(0, |m| degree(m));
    let mut graded_dims = vec![0; top + 1];
    for m in &monomials {
        graded_dims[degree(m)] += 1;
    }
    Ok(MonomialBasis {
        graded_dims,
        monomials,
    })
}

/// A standard monomial is in the socle iff multiplying by any `x_i` leaves
/// the basis: either `x_i` is already at its top power, or `i` is a
/// neighbour of the support.
fn is_socle(g: &Graph, bounds: &[u32], e: &[u32]) -> bool {
    (0..e.len())
        .all(|i| e[i] + 1 == bounds[i] || (e[i] == 0 && g.neighbors(i).iter().any(|&j| e[j] > 0)))
}

pub fn socle_vector(g: &Graph, a: &ExponentVector) -> Result<SocleVector> {
    socle_vector_with_cap(g, a, DEFAULT_MONOMIAL_CAP)
}

pub fn socle_vector_with_cap(g: &Graph, a: &ExponentVector, cap: u128) -> Result<SocleVector> {
    let bounds = a.as_slice();
    let mut s: Vec<usize> = Vec::new();
    let mut e_top = 0;
    for_each_standard_monomial(g, a, cap, |e| {
        let d = degree(e);
        e_top = e_top.max(d);
        if s.len() <= d {
            s.resize(d + 1, 0);
        }
        if is_socle(g, bounds, e) {
            s[d] += 1;
        }
    })?;
    s.resize(e_top + 1, 0);
    Ok(SocleVector { s, e: e_top })
}

pub fn is_level_quotient(g: &Graph, a: &ExponentVector) -> Result<bool> {
    Ok(socle_vector(g, a)?.is_level())
}

/// Whether `a` solves `Σ_{F_k} a_i - Σ_{F_{k+1}} a_i = |F_k| - |F_{k+1}|`
/// for consecutive facets.
pub fn vtz_feasible(fc: &FacetComplex, a: &ExponentVector) -> Result<bool> {
    if a.len() != fc.n {
        return Err(Error::LengthMismatch {
            expected: fc.n,
            got: a.len(),
        });
    }
    let a = a.as_slice();
    let lhs = |f: &[usize]| f.iter().map(|&i| a[i] as i64).sum::<i64>();
    Ok(fc
        .facets
        .windows(2)
        .all(|pair| lhs(&pair[0]) - lhs(&pair[1]) == pair[0].len() as i64 - pair[1].len() as i64))
}

/// Whether `a - 1` is a valid weight function for the facets of `fc`.
pub fn shifted_weights_valid(fc: &FacetComplex, a: &ExponentVector) -> bool {
    let w: Vec<u64> = a.as_slice().iter().map(|&x| x as u64 - 1).collect();
    let mis = MaxIndFamily::from_sets(fc.n, fc.facets.clone());
    validate_against(&mis, &w).is_ok()
}
