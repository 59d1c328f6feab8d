//! Exact rationals and fraction-free row reduction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational that serialises as `"p/q"`, or `"p"` when `q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

pub type RationalVector = Vec<Rational>;

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid rational {s:?}");
        let (numer, denom) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = denom.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Divides `row` by the gcd of its entries.
fn remove_content(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for x in row.iter_mut() {
            *x /= &content;
        }
    }
}

/// Reduced row echelon form over the integers, built one row at a time by
/// fraction-free elimination. Each stored row is primitive (content 1) with
/// a positive pivot and zeros in every other pivot column, so the rational
/// RREF is obtained by dividing a row by its pivot.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    sources: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            sources: Vec::new(),
        }
    }

    pub fn from_rows<'a, I>(ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [i64]>,
    {
        let mut echelon = Echelon::new(ncols);
        for (k, row) in rows.into_iter().enumerate() {
            echelon.insert(row.iter().map(|&x| BigInt::from(x)).collect(), k);
        }
        echelon
    }

    /// Reduces `row` against the current basis; keeps it (tagged with
    /// `source`) when it is independent. Returns whether it was kept.
    pub fn insert(&mut self, mut row: Vec<BigInt>, source: usize) -> bool {
        assert_eq!(row.len(), self.ncols, "row length");
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, b) in row.iter_mut().zip(basis) {
                *x = &*x * &basis[p] - &factor * b;
            }
            remove_content(&mut row);
        }
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if row[pivot].is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        remove_content(&mut row);
        for basis in &mut self.rows {
            if basis[pivot].is_zero() {
                continue;
            }
            let factor = basis[pivot].clone();
            for (b, x) in basis.iter_mut().zip(&row) {
                *b = &*b * &row[pivot] - &factor * x;
            }
            remove_content(basis);
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        self.sources.push(source);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Indices (as passed to [`Echelon::insert`]) of the rows that were kept;
    /// they form a basis of the row space.
    pub fn source_rows(&self) -> &[usize] {
        &self.sources
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols = self.pivots.clone();
        cols.sort_unstable();
        cols
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis: one vector per free column `f` (increasing), with
    /// `x_f = 1`, every other free coordinate 0, and pivot coordinates read
    /// off the reduced rows.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![BigRational::zero(); self.ncols];
                v[f] = BigRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = BigRational::new(-row[f].clone(), row[p].clone());
                }
                v.into_iter().map(Rational).collect()
            })
            .collect()
    }
}

pub fn lcm_of_denominators(values: &[BigRational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::new(-6, 3).to_string(), "-2");
        assert_eq!("3/-6".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        let json = serde_json::to_string(&vec![Rational::new(1, 3), Rational::from(4)]).unwrap();
        assert_eq!(json, r#"["1/3","4"]"#);
    }

    #[test]
    fn echelon_rank_and_kernel() {
        // x0 - x1 = 0, x1 - x2 = 0, x0 - x2 = 0 (dependent)
        let rows: Vec<Vec<i64>> = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]];
        let e = Echelon::from_rows(3, rows.iter().map(Vec::as_slice));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.source_rows(), &[0, 1]);
        let kernel = e.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(
            kernel[0],
            vec![Rational::from(1), Rational::from(1), Rational::from(1)]
        );
    }

    #[test]
    fn fractional_kernel_entries() {
        let rows: Vec<Vec<i64>> = vec![vec![2, 0, -1]];
        let e = Echelon::from_rows(3, rows.iter().map(Vec::as_slice));
        let kernel = e.kernel_basis();
        assert_eq!(
            kernel[0],
            vec![Rational::zero(), Rational::from(1), Rational::zero()]
        );
        assert_eq!(
            kernel[1],
            vec![Rational::new(1, 2), Rational::zero(), Rational::from(1)]
        );
    }
}
