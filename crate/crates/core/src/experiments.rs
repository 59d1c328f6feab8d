//! How often random graphs have a trivial space of well-covered weightings.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::random_gnp;
use crate::graph::Graph;
use crate::level::{DecideConfig, Decider};
use crate::mis::enumerate_with_cap;
use crate::rational::Rational;
use crate::wcw::wcw_basis_from_family;

/// Seed used by the command-line `stats` default and the regression suite.
pub const DEFAULT_SEED: u64 = 7;

/// Largest `n` for which every labelled graph is enumerated.
pub const EXHAUSTIVE_MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub n: usize,
    pub p: f64,
    /// Sampling seed, or the edge bitmask in exhaustive mode.
    pub seed: u64,
    /// `None` when a resource cap stopped the computation.
    pub dim: Option<usize>,
    pub levelable: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimZeroReport {
    pub n: usize,
    pub p: f64,
    pub exhaustive: bool,
    /// Dimension-zero count over completed trials.
    pub fraction: Rational,
    pub dim_histogram: BTreeMap<usize, usize>,
    pub levelable_count: usize,
    pub cap_exceeded: usize,
    pub trials: Vec<TrialRecord>,
}

impl DimZeroReport {
    pub fn completed(&self) -> usize {
        self.trials.len() - self.cap_exceeded
    }

    pub fn dim_positive_count(&self) -> usize {
        self.dim_histogram
            .iter()
            .filter(|(&d, _)| d > 0)
            .map(|(_, &c)| c)
            .sum()
    }

    /// `trial,n,p,seed,dim,levelable`, one row per trial; capped trials
    /// leave the last two fields empty.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["trial", "n", "p", "seed", "dim", "levelable"])
            .expect("in-memory write");
        for t in &self.trials {
            writer
                .write_record([
                    t.trial.to_string(),
                    t.n.to_string(),
                    t.p.to_string(),
                    t.seed.to_string(),
                    t.dim.map_or(String::new(), |d| d.to_string()),
                    t.levelable.map_or(String::new(), |b| b.to_string()),
                ])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<(usize, usize)> = pairs
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).expect("pairs are in range")
}

fn run_trial(
    decider: &Decider,
    trial: usize,
    n: usize,
    p: f64,
    seed: u64,
    g: &Graph,
) -> Result<TrialRecord> {
    let mut record = TrialRecord {
        trial,
        n,
        p,
        seed,
        dim: None,
        levelable: None,
    };
    let mis = match enumerate_with_cap(g, decider.config().max_sets) {
        Ok(mis) => mis,
        Err(Error::TooManySets { .. }) => return Ok(record),
        Err(e) => return Err(e),
    };
    record.dim = Some(wcw_basis_from_family(&mis)?.dim);
    record.levelable = match decider.decide(g) {
        Ok(cert) => Some(cert.is_levelable()),
        Err(Error::TooManySets { .. } | Error::LpIterationCap(_)) => {
            record.dim = None;
            None
        }
        Err(e) => return Err(e),
    };
    Ok(record)
}

/// Samples `trials` graphs `G(n, p)` with seeds `seed, seed+1, …`. With
/// `trials = 0` and `n ≤ 5` every labelled graph on `n` vertices is used
/// instead, and `p` is reported as 1/2.
pub fn wcw_dim_zero_fraction(n: usize, p: f64, trials: usize, seed: u64) -> Result<DimZeroReport> {
    wcw_dim_zero_fraction_with(n, p, trials, seed, DecideConfig::default())
}

pub fn wcw_dim_zero_fraction_with(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
    config: DecideConfig,
) -> Result<DimZeroReport> {
    let exhaustive = trials == 0;
    if exhaustive && n > EXHAUSTIVE_MAX_N {
        return Err(Error::InvalidFamily(format!(
            "exhaustive mode needs n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    if !exhaustive && !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidFamily(
            "edge probability must lie strictly between 0 and 1".into(),
        ));
    }
    // Uniform over labelled graphs is G(n, 1/2).
    let p = if exhaustive { 0.5 } else { p };
    let decider = Decider::new(config);
    let jobs: Vec<(usize, u64)> = if exhaustive {
        let pairs = n * n.saturating_sub(1) / 2;
        (0..1u64 << pairs).enumerate().collect()
    } else {
        (0..trials)
            .map(|k| (k, seed.wrapping_add(k as u64)))
            .collect()
    };
    let records = jobs
        .par_iter()
        .map(|&(trial, s)| {
            let g = if exhaustive {
                graph_from_mask(n, s)
            } else {
                random_gnp(n, p, s)
            };
            run_trial(&decider, trial, n, p, s, &g)
        })
        .collect::<Result<Vec<TrialRecord>>>()?;

    let mut dim_histogram = BTreeMap::new();
    let mut levelable_count = 0;
    let mut cap_exceeded = 0;
    for r in &records {
        match (r.dim, r.levelable) {
            (Some(d), Some(l)) => {
                *dim_histogram.entry(d).or_insert(0) += 1;
                levelable_count += l as usize;
            }
            _ => cap_exceeded += 1,
        }
    }
    let completed = records.len() - cap_exceeded;
    let zero = dim_histogram.get(&0).copied().unwrap_or(0);
    let fraction = if completed == 0 {
        Rational::zero()
    } else {
        Rational(BigRational::new(zero.into(), completed.into()))
    };
    Ok(DimZeroReport {
        n,
        p,
        exhaustive,
        fraction,
        dim_histogram,
        levelable_count,
        cap_exceeded,
        trials: records,
    })
}
