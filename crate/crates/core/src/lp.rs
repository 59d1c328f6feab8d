//! Exact rational phase-I simplex for feasibility of `A y = b, y ≥ 0`.
//!
//! Bland's rule guarantees termination. An infeasible program yields a
//! Farkas vector `u` with `uᵀA ≥ 0` and `uᵀb < 0`, read off the optimal
//! phase-I duals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<BigRational>),
    Infeasible { farkas: Vec<BigRational> },
}

/// Decides `{ y ∈ Qⁿ : A y = b, y ≥ 0 }`. `a` is `m × n`, `b` has length `m`.
pub fn feasible_nonnegative(
    n: usize,
    a: &[Vec<BigRational>],
    b: &[BigRational],
    max_pivots: usize,
) -> Result<LpOutcome> {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    assert!(a.iter().all(|row| row.len() == n), "row length");
    if m == 0 {
        return Ok(LpOutcome::Feasible(vec![BigRational::zero(); n]));
    }

    // Columns: original `0..n`, artificial `n..n+m`, right-hand side last.
    let width = n + m + 1;
    let rhs = n + m;
    let signs: Vec<bool> = b.iter().map(|x| x.is_negative()).collect();
    let mut tableau: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            for j in 0..n {
                row[j] = if signs[i] { -&a[i][j] } else { a[i][j].clone() };
            }
            row[n + i] = BigRational::one();
            row[rhs] = b[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-I objective (sum of artificials); the last
    // entry holds minus the current objective value.
    let mut cost = vec![BigRational::zero(); width];
    for row in &tableau {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    let mut pivots = 0;
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let leave = (0..m)
            .filter(|&i| tableau[i][enter].is_positive())
            .min_by(|&i, &k| {
                let ri = &tableau[i][rhs] / &tableau[i][enter];
                let rk = &tableau[k][rhs] / &tableau[k][enter];
                ri.cmp(&rk).then(basis[i].cmp(&basis[k]))
            });
        // The phase-I objective is bounded below by zero, so some row
        // always limits the step.
        let leave = leave.expect("phase-I program is bounded");
        if pivots == max_pivots {
            return Err(Error::LpIterationCap(max_pivots));
        }
        pivots += 1;
        pivot(&mut tableau, &mut cost, leave, enter);
        basis[leave] = enter;
    }

    if cost[rhs].is_zero() {
        let mut y = vec![BigRational::zero(); n];
        for (i, &var) in basis.iter().enumerate() {
            if var < n {
                y[var] = tableau[i][rhs].clone();
            }
        }
        return Ok(LpOutcome::Feasible(y));
    }

    // Artificial column `n+i` has unit cost, so its reduced cost is
    // `1 - dual_i`; the Farkas vector is the negated dual, mapped back
    // through the row sign flips.
    let farkas = (0..m)
        .map(|i| {
            let dual = BigRational::one() - &cost[n + i];
            if signs[i] {
                dual
            } else {
                -dual
            }
        })
        .collect();
    Ok(LpOutcome::Infeasible { farkas })
}

fn pivot(tableau: &mut [Vec<BigRational>], cost: &mut [BigRational], row: usize, col: usize) {
    let inv = BigRational::one() / &tableau[row][col];
    for x in tableau[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tableau[row].clone();
    for (i, other) in tableau.iter_mut().enumerate() {
        if i == row || other[col].is_zero() {
            continue;
        }
        let factor = other[col].clone();
        for (x, p) in other.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
}

/// Checks `uᵀA ≥ 0` componentwise and `uᵀb < 0`.
pub fn is_farkas_certificate(a: &[Vec<BigRational>], b: &[BigRational], u: &[BigRational]) -> bool {
    if u.len() != a.len() || b.len() != a.len() {
        return false;
    }
    let n = a.first().map_or(0, Vec::len);
    let combination_nonnegative = (0..n).all(|j| {
        let s: BigRational = a.iter().zip(u).map(|(row, ui)| &row[j] * ui).sum();
        !s.is_negative()
    });
    let rhs: BigRational = b.iter().zip(u).map(|(bi, ui)| bi * ui).sum();
    combination_nonnegative && rhs.is_negative()
}
