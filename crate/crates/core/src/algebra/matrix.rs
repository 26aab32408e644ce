//! Integer matrices with exact rational rank.
//!
//! These carry the cup-product maps of a cohomology ring; the only linear
//! algebra the Gysin bookkeeping needs is rank over ℚ, computed by exact
//! Gaussian elimination on `BigRational` entries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::JsonInt;
use super::AlgebraError;

/// Row-major integer matrix. Wire format: `{"rows": r, "cols": c, "entries":
/// [[..row..], ..]}` with entries as decimal strings (plain integers
/// accepted on input). A matrix with `rows·cols = 0` may omit `entries`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<BigInt>>) -> Result<Self, AlgebraError> {
        if entries.is_empty() && rows * cols == 0 {
            return Ok(Self {
                rows,
                cols,
                entries: Vec::new(),
            });
        }
        if entries.len() != rows {
            return Err(AlgebraError::MatrixShape(format!(
                "expected {rows} rows, got {}",
                entries.len()
            )));
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != cols {
                return Err(AlgebraError::MatrixShape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            flat.extend(row);
        }
        Ok(Self {
            rows,
            cols,
            entries: flat,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Rank-`r` rectangular matrix with ones on the leading diagonal.
    pub fn diagonal_ones(rows: usize, cols: usize, r: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| {
            if i == j && i < r {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    /// Rank over the rationals, by exact Gaussian elimination.
    #[allow(clippy::needless_range_loop)] // pivot row and target row alias
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| BigRational::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let pivot = (rank..self.rows).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else { continue };
            m.swap(rank, pivot);
            let inv = m[rank][col].recip();
            for j in col..self.cols {
                let v = &m[rank][j] * &inv;
                m[rank][j] = v;
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in col..self.cols {
                        let v = &m[r][j] - &factor * &m[rank][j];
                        m[r][j] = v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

#[derive(Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    #[serde(default)]
    entries: Vec<Vec<JsonInt>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<String>>,
        }
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        Out {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(deserializer)?;
        let entries = raw
            .entries
            .into_iter()
            .map(|row| row.into_iter().map(JsonInt::into_bigint).collect())
            .collect::<Result<Vec<Vec<BigInt>>, D::Error>>()?;
        IntMatrix::new(raw.rows, raw.cols, entries).map_err(serde::de::Error::custom)
    }
}
