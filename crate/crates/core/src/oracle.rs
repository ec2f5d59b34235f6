//! Direct cellular computation of `K(X, W)` for `(D², S¹)` and `(D¹, S⁰)`.
//!
//! Each factor gets a minimal CW structure of three cells; a product cell
//! belongs to `K(X, W)` exactly when the set of factors sitting on the top
//! cell is a face of `K`. The boundary is the Leibniz rule with Koszul
//! signs. This path shares nothing with the Betti-table pipeline except
//! the rank routines.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{check_ground_set, Error, Result};
use crate::linalg::{ChainComplexData, Direction, ExactMatrix, FieldTag};
use crate::macx::{poincare_rzk, poincare_zk, PoincarePolynomial, PoincareReport};
use crate::subset::Subset;

/// Largest ground set the oracle will build (at most `3^7` cells).
pub const MAX_ORACLE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellModel {
    /// `D²` as `e⁰ ∪ e¹ ∪ e²` with `∂e² = e¹`, `∂e¹ = 0`; the first two cells form `S¹`.
    Disk2,
    /// `D¹` as `p₋ ∪ p₊ ∪ e¹` with `∂e¹ = p₊ - p₋`; the two points form `S⁰`.
    Interval,
}

impl CellModel {
    pub const ALL: [CellModel; 2] = [CellModel::Disk2, CellModel::Interval];

    /// Index of the top cell among the factor's three cells.
    pub const TOP: u8 = 2;

    pub fn cell_dim(self, cell: u8) -> usize {
        match (self, cell) {
            (CellModel::Disk2, c) => c as usize,
            (CellModel::Interval, 2) => 1,
            (CellModel::Interval, _) => 0,
        }
    }

    /// Boundary of a factor cell as `(cell, coefficient)` pairs.
    pub fn boundary(self, cell: u8) -> &'static [(u8, i64)] {
        match (self, cell) {
            (CellModel::Disk2, 2) => &[(1, 1)],
            (CellModel::Interval, 2) => &[(0, -1), (1, 1)],
            _ => &[],
        }
    }
}

impl fmt::Display for CellModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellModel::Disk2 => "disk2",
            CellModel::Interval => "interval",
        })
    }
}

impl FromStr for CellModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "disk2" => Ok(CellModel::Disk2),
            "interval" => Ok(CellModel::Interval),
            other => Err(Error::Input(format!("unknown cell model `{other}`"))),
        }
    }
}

/// A product cell `c_1 × ... × c_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCell(pub Vec<u8>);

impl ProductCell {
    pub fn top_set(&self) -> Subset {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == CellModel::TOP)
            .fold(Subset::EMPTY, |acc, (i, _)| acc.insert(i + 1))
    }

    pub fn dim(&self, model: CellModel) -> usize {
        self.0.iter().map(|&c| model.cell_dim(c)).sum()
    }
}

/// Cells of `K(X, W)` in product-lexicographic order. The cell set is the
/// same for both models; only dimensions and boundaries differ.
pub fn cells(k: &SimplicialComplex) -> Result<Vec<ProductCell>> {
    let m = k.ground_set();
    check_ground_set(m, MAX_ORACLE)?;
    let mut out = Vec::new();
    let mut cur = vec![0u8; m];
    loop {
        let cell = ProductCell(cur.clone());
        if k.contains(cell.top_set()) {
            out.push(cell);
        }
        // Odometer with the last factor varying fastest.
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < 2 {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// The cellular chain complex of `K(X, W)` over `field`, degrees `0..=top`.
pub fn build_complex(k: &SimplicialComplex, model: CellModel, field: FieldTag) -> Result<ChainComplexData> {
    let all = cells(k)?;
    let top = all.iter().map(|c| c.dim(model)).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<ProductCell>> = vec![Vec::new(); top + 1];
    for c in all {
        let d = c.dim(model);
        by_dim[d].push(c);
    }
    let index: Vec<HashMap<&ProductCell, usize>> = by_dim
        .iter()
        .map(|group| group.iter().enumerate().map(|(n, c)| (c, n)).collect())
        .collect();
    let mut diffs = Vec::with_capacity(top);
    for d in 1..=top {
        let mut entries = Vec::new();
        for (col, cell) in by_dim[d].iter().enumerate() {
            let mut sign_exp = 0;
            for i in 0..cell.0.len() {
                for &(face, coeff) in model.boundary(cell.0[i]) {
                    let mut target = cell.clone();
                    target.0[i] = face;
                    let row = *index[d - 1]
                        .get(&target)
                        .expect("boundary stays inside K(X, W)");
                    let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
                    entries.push((row, col, sign * coeff));
                }
                sign_exp += model.cell_dim(cell.0[i]);
            }
        }
        diffs.push(ExactMatrix::from_triplets(by_dim[d - 1].len(), by_dim[d].len(), entries)?);
    }
    let dims = by_dim.iter().map(Vec::len).collect();
    ChainComplexData::new(field, Direction::Chain, 0, dims, diffs)
}

/// Cohomology dimensions of `K(X, W)`, equal to its homology dimensions
/// over a field.
pub fn oracle_poincare(k: &SimplicialComplex, model: CellModel, field: FieldTag) -> Result<PoincarePolynomial> {
    let c = build_complex(k, model, field)?;
    Ok(PoincarePolynomial::from_coeffs(
        c.homology_dims().into_iter().enumerate().map(|(n, d)| (n, d as u64)),
    ))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OracleReport {
    pub model: CellModel,
    pub field: FieldTag,
    pub cell_count: usize,
    pub oracle: PoincareReport,
    pub hochster: PoincareReport,
    pub euler_characteristic: i64,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CrossValidation {
    pub reports: Vec<OracleReport>,
    pub all_match: bool,
}

/// Compares the cellular result with the Betti-table result for both models.
pub fn cross_validate(k: &SimplicialComplex, field: FieldTag) -> Result<CrossValidation> {
    let mut reports = Vec::with_capacity(2);
    for model in CellModel::ALL {
        let complex = build_complex(k, model, field)?;
        let oracle = PoincarePolynomial::from_coeffs(
            complex.homology_dims().into_iter().enumerate().map(|(n, d)| (n, d as u64)),
        );
        let hochster = match model {
            CellModel::Disk2 => poincare_zk(k, field),
            CellModel::Interval => poincare_rzk(k, field),
        };
        let euler = complex.euler_characteristic();
        reports.push(OracleReport {
            model,
            field,
            cell_count: complex.dims().iter().sum(),
            matches: oracle == hochster && euler == oracle.euler_characteristic(),
            oracle: oracle.report(),
            hochster: hochster.report(),
            euler_characteristic: euler,
        });
    }
    let all_match = reports.iter().all(|r| r.matches);
    Ok(CrossValidation { reports, all_match })
}
