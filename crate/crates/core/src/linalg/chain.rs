//! Finite chain and cochain complexes of finite-dimensional vector spaces.

use super::{rank, ExactMatrix, FieldTag};
use crate::error::{Error, Result};

/// Whether differentials lower or raise degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `diffs[j]` maps degree `j + 1` to degree `j` (a `dims[j] × dims[j+1]` matrix).
    Chain,
    /// `diffs[j]` maps degree `j` to degree `j + 1` (a `dims[j+1] × dims[j]` matrix).
    Cochain,
}

/// Groups in degrees `lowest, lowest + 1, ...` with integer differentials
/// read over a coefficient field.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    field: FieldTag,
    direction: Direction,
    lowest: i64,
    dims: Vec<usize>,
    diffs: Vec<ExactMatrix>,
}

impl ChainComplexData {
    /// Validates shapes and that consecutive composites vanish over `field`.
    pub fn new(
        field: FieldTag,
        direction: Direction,
        lowest: i64,
        dims: Vec<usize>,
        diffs: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::DimensionMismatch {
                what: "number of differentials",
                expected: dims.len().saturating_sub(1),
                got: diffs.len(),
            });
        }
        for (j, d) in diffs.iter().enumerate() {
            let (rows, cols) = match direction {
                Direction::Chain => (dims[j], dims[j + 1]),
                Direction::Cochain => (dims[j + 1], dims[j]),
            };
            if d.rows() != rows || d.cols() != cols {
                return Err(Error::DimensionMismatch {
                    what: "differential shape",
                    expected: rows * cols,
                    got: d.rows() * d.cols(),
                });
            }
        }
        for j in 1..diffs.len() {
            let composite = match direction {
                Direction::Chain => diffs[j - 1].mul(&diffs[j])?,
                Direction::Cochain => diffs[j].mul(&diffs[j - 1])?,
            };
            let vanishes = match field {
                FieldTag::Gf2 => composite.to_gf2().is_zero(),
                FieldTag::Rational => composite.is_zero(),
            };
            if !vanishes {
                return Err(Error::MalformedComplex { first: j - 1, second: j });
            }
        }
        Ok(ChainComplexData {
            field,
            direction,
            lowest,
            dims,
            diffs,
        })
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Degree of `dims[0]`.
    pub fn lowest_degree(&self) -> i64 {
        self.lowest
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[ExactMatrix] {
        &self.diffs
    }

    /// `dim H_j = dims[j] - rank(out of j) - rank(into j)`, indexed like `dims`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.diffs.iter().map(|d| rank(d, self.field)).collect();
        (0..self.dims.len())
            .map(|j| {
                let below = if j > 0 { ranks[j - 1] } else { 0 };
                let above = ranks.get(j).copied().unwrap_or(0);
                self.dims[j] - below - above
            })
            .collect()
    }

    /// Alternating sum of group dimensions, signed by absolute degree.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(j, &d)| if (self.lowest + j as i64).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point() {
        let c = ChainComplexData::new(FieldTag::Rational, Direction::Chain, 0, vec![1], vec![]).unwrap();
        assert_eq!(c.homology_dims(), vec![1]);
    }

    #[test]
    fn identity_is_acyclic() {
        let c = ChainComplexData::new(
            FieldTag::Gf2,
            Direction::Chain,
            0,
            vec![1, 1],
            vec![ExactMatrix::identity(1)],
        )
        .unwrap();
        assert_eq!(c.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn triangle_boundary_is_a_circle() {
        // Edges 12, 13, 23 with ∂(ij) = j - i.
        let d1 = ExactMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        for field in FieldTag::ALL {
            let c = ChainComplexData::new(field, Direction::Chain, 0, vec![3, 3], vec![d1.clone()]).unwrap();
            assert_eq!(c.homology_dims(), vec![1, 1]);
            let h = c.homology_dims();
            assert_eq!(h[0] as i64 - h[1] as i64, c.euler_characteristic());
        }
    }

    #[test]
    fn rejects_nonzero_composite() {
        let one = ExactMatrix::identity(1);
        let err = ChainComplexData::new(FieldTag::Rational, Direction::Chain, 0, vec![1, 1, 1], vec![one.clone(), one.clone()]);
        assert!(matches!(err, Err(Error::MalformedComplex { .. })));
        // 2 = 0 over GF(2).
        let two = ExactMatrix::from_rows(&[vec![2]]).unwrap();
        assert!(ChainComplexData::new(FieldTag::Gf2, Direction::Chain, 0, vec![1, 1, 1], vec![one.clone(), two.clone()]).is_ok());
        assert!(ChainComplexData::new(FieldTag::Rational, Direction::Chain, 0, vec![1, 1, 1], vec![one, two]).is_err());
    }

    #[test]
    fn shape_checked() {
        let err = ChainComplexData::new(FieldTag::Gf2, Direction::Cochain, 0, vec![2, 3], vec![ExactMatrix::zeros(2, 3)]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
