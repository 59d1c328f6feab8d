//! Deciding levelability, with certificates in both directions.
//!
//! A graph is levelable when some strictly positive integer weighting gives
//! every maximal independent set the same total. The decision is the exact
//! LP feasibility of `{ A x = 0, x ≥ 1 }` over the consecutive-difference
//! constraint matrix `A`; the system is homogeneous, so `x ≥ 1` loses
//! nothing against `x > 0`. Graphs are decided one connected component at a
//! time: a disjoint union is levelable iff every part is.

use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{feasible_nonnegative, LpOutcome, DEFAULT_MAX_PIVOTS};
use crate::mis::{default_max_sets, enumerate_with_cap, MaxIndFamily};
use crate::rational::{lcm_of_denominators, Echelon, Rational};
use crate::wcw::constraint_matrix;

pub const DEFAULT_OBSTRUCTION_BUDGET: u64 = 10_000_000;

/// Strictly positive integer weights under which every maximal independent
/// set sums to `independence_weight`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunction {
    pub weights: Vec<u64>,
    pub independence_weight: u64,
}

impl WeightFunction {
    /// Multiplies every weight (and the independence weight) by `m`.
    pub fn scaled(&self, m: u64) -> Result<WeightFunction> {
        let weights = self
            .weights
            .iter()
            .map(|w| w.checked_mul(m).ok_or(Error::WeightOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightFunction {
            weights,
            independence_weight: self
                .independence_weight
                .checked_mul(m)
                .ok_or(Error::WeightOverflow)?,
        })
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// Four maximal independent sets with `F3 ∪ F4 ⊊ F1 ∪ F2` and
/// `F3 ∩ F4 = ∅`. Summing weights gives `2c` on both sides, which positive
/// weights cannot satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionQuadruple {
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
    pub f3: Vec<usize>,
    pub f4: Vec<usize>,
}

impl ObstructionQuadruple {
    /// The two set conditions (maximality is checked separately).
    pub fn satisfies_set_conditions(&self) -> bool {
        let upper: std::collections::BTreeSet<usize> =
            self.f1.iter().chain(&self.f2).copied().collect();
        let lower: std::collections::BTreeSet<usize> =
            self.f3.iter().chain(&self.f4).copied().collect();
        let disjoint = self.f3.iter().all(|v| !self.f4.contains(v));
        disjoint && lower.is_subset(&upper) && lower.len() < upper.len()
    }
}

/// Multipliers `u` on the rows of a component's constraint matrix such that
/// `r = uᵀA` is componentwise nonnegative with positive sum. Then
/// `r·x ≥ Σr > 0` for every `x ≥ 1`, contradicting `A x = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityAttestation {
    pub farkas_multipliers: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Obstruction(ObstructionQuadruple),
    Infeasibility(InfeasibilityAttestation),
}

/// Evidence is stated relative to one connected component (sorted vertex
/// list, global labels). Farkas multipliers index the constraint rows of
/// that component's induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub component: Vec<usize>,
    #[serde(flatten)]
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LevelCertificate {
    Levelable(WeightFunction),
    NotLevelable { witness: Witness },
}

impl LevelCertificate {
    pub fn is_levelable(&self) -> bool {
        matches!(self, LevelCertificate::Levelable(_))
    }

    pub fn weights(&self) -> Option<&WeightFunction> {
        match self {
            LevelCertificate::Levelable(w) => Some(w),
            LevelCertificate::NotLevelable { .. } => None,
        }
    }
}

/// Checks `w` against an explicit family of maximal independent sets.
pub fn validate_against<W>(mis: &MaxIndFamily, w: &[W]) -> Result<WeightFunction>
where
    W: Copy + Into<i128>,
{
    if w.len() != mis.source_n() {
        return Err(Error::LengthMismatch {
            expected: mis.source_n(),
            got: w.len(),
        });
    }
    let weights = w
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let x: i128 = x.into();
            if x < 1 {
                Err(Error::NonPositiveWeight(i))
            } else {
                u64::try_from(x).map_err(|_| Error::WeightOverflow)
            }
        })
        .collect::<Result<Vec<u64>>>()?;
    let sum = |set: &[usize]| -> Result<u64> {
        set.iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(weights[v]))
            .ok_or(Error::WeightOverflow)
    };
    let first = mis.sets().first().ok_or(Error::EmptyFamily)?;
    let first_sum = sum(first)?;
    for set in &mis.sets()[1..] {
        let s = sum(set)?;
        if s != first_sum {
            return Err(Error::UnequalSums {
                first: first.clone(),
                first_sum,
                second: set.clone(),
                second_sum: s,
            });
        }
    }
    Ok(WeightFunction {
        weights,
        independence_weight: first_sum,
    })
}

pub fn validate_weights<W>(g: &Graph, w: &[W]) -> Result<WeightFunction>
where
    W: Copy + Into<i128>,
{
    if w.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: w.len(),
        });
    }
    validate_against(&enumerate_with_cap(g, default_max_sets())?, w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionSearch {
    pub quadruple: Option<ObstructionQuadruple>,
    /// Candidate checks performed.
    pub checks: u64,
    /// True when the budget ran out before the scan finished; a `None`
    /// quadruple then says nothing either way.
    pub budget_exhausted: bool,
}

pub fn find_obstruction(mis: &MaxIndFamily) -> ObstructionSearch {
    find_obstruction_with_budget(mis, DEFAULT_OBSTRUCTION_BUDGET)
}

/// Scans index tuples `(i, j, k, l)` with `i < j`, `k < l` in lexicographic
/// order and returns the first satisfying the obstruction conditions.
pub fn find_obstruction_with_budget(mis: &MaxIndFamily, budget: u64) -> ObstructionSearch {
    let sets = mis.bitsets();
    let s = sets.len();
    let mut disjoint_pairs: Vec<(usize, usize, FixedBitSet)> = Vec::new();
    for k in 0..s {
        for l in k + 1..s {
            if sets[k].is_disjoint(&sets[l]) {
                let mut union = sets[k].clone();
                union.union_with(&sets[l]);
                disjoint_pairs.push((k, l, union));
            }
        }
    }
    let mut checks = 0u64;
    for i in 0..s {
        for j in i + 1..s {
            let mut upper = sets[i].clone();
            upper.union_with(&sets[j]);
            let upper_count = upper.count_ones(..);
            for (k, l, lower) in &disjoint_pairs {
                if checks == budget {
                    return ObstructionSearch {
                        quadruple: None,
                        checks,
                        budget_exhausted: true,
                    };
                }
                checks += 1;
                if lower.is_subset(&upper) && lower.count_ones(..) < upper_count {
                    let pick = |x: usize| mis.sets()[x].clone();
                    return ObstructionSearch {
                        quadruple: Some(ObstructionQuadruple {
                            f1: pick(i),
                            f2: pick(j),
                            f3: pick(*k),
                            f4: pick(*l),
                        }),
                        checks,
                        budget_exhausted: false,
                    };
                }
            }
        }
    }
    ObstructionSearch {
        quadruple: None,
        checks,
        budget_exhausted: false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideConfig {
    pub max_sets: usize,
    pub max_pivots: usize,
    pub obstruction_budget: u64,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            max_sets: default_max_sets(),
            max_pivots: DEFAULT_MAX_PIVOTS,
            obstruction_budget: DEFAULT_OBSTRUCTION_BUDGET,
        }
    }
}

#[derive(Debug, Default)]
pub struct DecisionStats {
    decided: AtomicU64,
    not_levelable: AtomicU64,
    not_levelable_without_quadruple: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct StatsSnapshot {
    pub decided: u64,
    pub not_levelable: u64,
    /// Non-levelable verdicts for which the quadruple scan found nothing and
    /// the witness is a Farkas vector instead.
    pub not_levelable_without_quadruple: u64,
}

/// Levelability decider with configurable resource caps and running
/// counters. Safe to share across threads.
#[derive(Debug, Default)]
pub struct Decider {
    config: DecideConfig,
    stats: DecisionStats,
}

impl Decider {
    pub fn new(config: DecideConfig) -> Self {
        Decider {
            config,
            stats: DecisionStats::default(),
        }
    }

    pub fn config(&self) -> &DecideConfig {
        &self.config
    }

    pub fn stats(&self) -> StatsSnapshot {
        StatsSnapshot {
            decided: self.stats.decided.load(Ordering::Relaxed),
            not_levelable: self.stats.not_levelable.load(Ordering::Relaxed),
            not_levelable_without_quadruple: self
                .stats
                .not_levelable_without_quadruple
                .load(Ordering::Relaxed),
        }
    }

    pub fn decide(&self, g: &Graph) -> Result<LevelCertificate> {
        let mut weights = vec![0u64; g.n()];
        let mut independence_weight = 0u64;
        for component in g.connected_components() {
            let sub = g.induced_subgraph(&component);
            match self.decide_connected(&sub)? {
                ComponentVerdict::Levelable(w) => {
                    for (&v, &x) in component.iter().zip(&w.weights) {
                        weights[v] = x;
                    }
                    independence_weight = independence_weight
                        .checked_add(w.independence_weight)
                        .ok_or(Error::WeightOverflow)?;
                }
                ComponentVerdict::NotLevelable(evidence) => {
                    self.stats.decided.fetch_add(1, Ordering::Relaxed);
                    self.stats.not_levelable.fetch_add(1, Ordering::Relaxed);
                    let evidence = match evidence {
                        Evidence::Obstruction(q) => {
                            let map = |s: Vec<usize>| s.into_iter().map(|v| component[v]).collect();
                            Evidence::Obstruction(ObstructionQuadruple {
                                f1: map(q.f1),
                                f2: map(q.f2),
                                f3: map(q.f3),
                                f4: map(q.f4),
                            })
                        }
                        farkas @ Evidence::Infeasibility(_) => {
                            self.stats
                                .not_levelable_without_quadruple
                                .fetch_add(1, Ordering::Relaxed);
                            farkas
                        }
                    };
                    return Ok(LevelCertificate::NotLevelable {
                        witness: Witness {
                            component,
                            evidence,
                        },
                    });
                }
            }
        }
        self.stats.decided.fetch_add(1, Ordering::Relaxed);
        Ok(LevelCertificate::Levelable(WeightFunction {
            weights,
            independence_weight,
        }))
    }

    fn decide_connected(&self, g: &Graph) -> Result<ComponentVerdict> {
        let mis = enumerate_with_cap(g, self.config.max_sets)?;
        let rows = constraint_matrix(&mis)?;
        let echelon = Echelon::from_rows(g.n(), rows.iter().map(Vec::as_slice));

        // Independent rows span the same constraints; x = 1 + y with y ≥ 0.
        let a: Vec<Vec<BigRational>> = echelon
            .source_rows()
            .iter()
            .map(|&k| {
                rows[k]
                    .iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = a
            .iter()
            .map(|row| -row.iter().sum::<BigRational>())
            .collect();

        match feasible_nonnegative(g.n(), &a, &b, self.config.max_pivots)? {
            LpOutcome::Feasible(y) => {
                let x: Vec<BigRational> = y.into_iter().map(|yi| yi + BigRational::one()).collect();
                let integral = to_primitive_integers(&x)?;
                Ok(ComponentVerdict::Levelable(validate_against(
                    &mis, &integral,
                )?))
            }
            LpOutcome::Infeasible { farkas } => {
                let search = find_obstruction_with_budget(&mis, self.config.obstruction_budget);
                if let Some(q) = search.quadruple {
                    return Ok(ComponentVerdict::NotLevelable(Evidence::Obstruction(q)));
                }
                let mut multipliers = vec![BigRational::zero(); rows.len()];
                for (&k, u) in echelon.source_rows().iter().zip(farkas) {
                    multipliers[k] = u;
                }
                let multipliers = to_primitive_integers_signed(&multipliers)
                    .into_iter()
                    .map(|x| Rational(BigRational::from_integer(x)))
                    .collect();
                Ok(ComponentVerdict::NotLevelable(Evidence::Infeasibility(
                    InfeasibilityAttestation {
                        farkas_multipliers: multipliers,
                    },
                )))
            }
        }
    }
}

enum ComponentVerdict {
    Levelable(WeightFunction),
    NotLevelable(Evidence),
}

/// Clears denominators and divides by the gcd; inputs must be positive.
fn to_primitive_integers(x: &[BigRational]) -> Result<Vec<u64>> {
    to_primitive_integers_signed(x)
        .into_iter()
        .map(|v| v.to_u64().ok_or(Error::WeightOverflow))
        .collect()
}

fn to_primitive_integers_signed(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = lcm_of_denominators(x);
    let ints: Vec<BigInt> = x
        .iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if gcd.is_zero() || gcd.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &gcd).collect()
    }
}

pub fn decide_levelable(g: &Graph) -> Result<LevelCertificate> {
    Decider::default().decide(g)
}

/// Re-checks a certificate against `g` from scratch.
pub fn verify_certificate(g: &Graph, cert: &LevelCertificate) -> Result<bool> {
    match cert {
        LevelCertificate::Levelable(w) => {
            if w.weights.len() != g.n() || w.weights.contains(&0) {
                return Ok(false);
            }
            let mut total = 0u64;
            for component in g.connected_components() {
                let sub = g.induced_subgraph(&component);
                let local: Vec<u64> = component.iter().map(|&v| w.weights[v]).collect();
                match validate_weights(&sub, &local) {
                    Ok(wf) => total += wf.independence_weight,
                    Err(Error::UnequalSums { .. }) => return Ok(false),
                    Err(e) => return Err(e),
                }
            }
            Ok(total == w.independence_weight)
        }
        LevelCertificate::NotLevelable { witness } => {
            if !g.connected_components().contains(&witness.component) {
                return Ok(false);
            }
            let component = &witness.component;
            let sub = g.induced_subgraph(component);
            match &witness.evidence {
                Evidence::Obstruction(q) => {
                    let local = |set: &[usize]| -> Option<Vec<usize>> {
                        set.iter()
                            .map(|v| component.binary_search(v).ok())
                            .collect()
                    };
                    let all_maximal = [&q.f1, &q.f2, &q.f3, &q.f4]
                        .iter()
                        .all(|set| local(set).is_some_and(|s| sub.is_maximal_independent(&s)));
                    Ok(all_maximal && q.satisfies_set_conditions())
                }
                Evidence::Infeasibility(att) => {
                    let mis = enumerate_with_cap(&sub, default_max_sets())?;
                    let rows = constraint_matrix(&mis)?;
                    Ok(is_infeasibility_witness(&rows, &att.farkas_multipliers))
                }
            }
        }
    }
}

/// `r = uᵀA` must be componentwise nonnegative with positive sum.
pub fn is_infeasibility_witness(rows: &[Vec<i64>], multipliers: &[Rational]) -> bool {
    if rows.len() != multipliers.len() {
        return false;
    }
    let n = rows.first().map_or(0, Vec::len);
    let mut combination = vec![BigRational::zero(); n];
    for (row, u) in rows.iter().zip(multipliers) {
        for (acc, &x) in combination.iter_mut().zip(row) {
            if x != 0 {
                *acc += &u.0 * BigRational::from_integer(x.into());
            }
        }
    }
    let total: BigRational = combination.iter().sum();
    combination.iter().all(|r| !r.is_negative()) && total.is_positive()
}
