//! Exact linear algebra over GF(2), the rationals and the integers.
//!
//! No floating point is used anywhere. Matrices carry arbitrary-precision
//! integer entries; over GF(2) they are reduced mod 2 into packed bit rows,
//! over the rationals their rank is found by fraction-free elimination.

mod chain;
mod gf2;
mod rational;
mod snf;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use chain::{ChainComplexData, Direction};
pub use gf2::BitMatrix;
pub use snf::smith_normal_form;

use crate::error::{Error, Result};

/// Coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    #[serde(rename = "GF2", alias = "gf2")]
    Gf2,
    #[serde(rename = "Rational", alias = "rational")]
    Rational,
}

impl FieldTag {
    pub const ALL: [FieldTag; 2] = [FieldTag::Gf2, FieldTag::Rational];
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Gf2 => "GF2",
            FieldTag::Rational => "Rational",
        })
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" | "z2" => Ok(FieldTag::Gf2),
            "rational" | "q" | "rationals" => Ok(FieldTag::Rational),
            other => Err(Error::Input(format!("unknown field `{other}` (expected GF2 or Rational)"))),
        }
    }
}

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    what: "matrix row length",
                    expected: cols,
                    got: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        Ok(m)
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions add.
    pub fn from_triplets<T: Into<BigInt>>(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for (i, j, v) in entries {
            if i >= rows || j >= cols {
                return Err(Error::DimensionMismatch {
                    what: "triplet position",
                    expected: rows.max(cols),
                    got: i.max(j),
                });
            }
            let cur = &mut m.data[i * cols + j];
            *cur += v.into();
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// The submatrix keeping the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut s = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                s.set(i, jj, self.get(i, j).clone());
            }
        }
        s
    }

    /// Matrix product, skipping zero entries of `self`.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                what: "product inner dimension",
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entries reduced mod 2 into packed rows.
    pub fn to_gf2(&self) -> BitMatrix {
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).is_odd() {
                    b.set(i, j, true);
                }
            }
        }
        b
    }

    pub(crate) fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub(crate) fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

trait IsOdd {
    fn is_odd(&self) -> bool;
}

impl IsOdd for BigInt {
    fn is_odd(&self) -> bool {
        num_integer::Integer::is_odd(self)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Rank of an integer matrix read over `field`.
pub fn rank(m: &ExactMatrix, field: FieldTag) -> usize {
    match field {
        FieldTag::Gf2 => m.to_gf2().rank(),
        FieldTag::Rational => rational::rank_integer(m),
    }
}

/// Rank over the rationals of a matrix with fractional entries. Each row is
/// scaled by the lcm of its denominators, which preserves rank.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect()
        })
        .collect();
    rational::rank_rows(scaled)
}

pub(crate) fn abs_cmp(a: &BigInt, b: &BigInt) -> std::cmp::Ordering {
    a.abs().cmp(&b.abs())
}
