//! Free actions of coordinate subgroups on moment-angle complexes.
//!
//! The isotropy group of a point of `Z_K` (resp. the real moment-angle
//! complex) is the coordinate subtorus (resp. 2-torus) on the coordinates
//! where the point vanishes, and that zero set is always a face of `K`. A
//! subgroup `H` therefore acts freely iff for every face `σ` its projection
//! onto the coordinates `[m] \ σ` is injective. Larger faces give smaller
//! projections, so maximal faces suffice.
//!
//! For a 2-torus given by GF(2) generator rows, injectivity is full row rank
//! of the column submatrix. For a torus `T^r → T^m` given by an integer
//! matrix, injectivity of the composite `T^r → T^{[m] \ σ}` holds iff the
//! column submatrix is a split lattice map: exactly `r` invariant factors,
//! all equal to 1.

use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{check_ground_set, Error, Result};
use crate::linalg::{rank, smith_normal_form, ExactMatrix, FieldTag};
use crate::macx::{poincare_rzk, poincare_zk};
use crate::oracle::{cells, CellModel};
use crate::subset::Subset;

/// Largest ground set searched by [`max_free_rank_real`].
pub const MAX_SEARCH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// A subgroup of `(Z_2)^m`, generators over GF(2).
    Real,
    /// A subtorus of `T^m`, integer generators.
    Torus,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Real => "real",
            GroupKind::Torus => "torus",
        })
    }
}

/// `r` generators of a rank-`r` subgroup, as an `r × m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    kind: GroupKind,
    m: usize,
    generators: ExactMatrix,
}

impl SubgroupSpec {
    /// Validates entries and that the rows are independent.
    pub fn new(kind: GroupKind, m: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                what: "generator row length",
                expected: m,
                got: bad.len(),
            });
        }
        if kind == GroupKind::Real && rows.iter().flatten().any(|&v| v != 0 && v != 1) {
            return Err(Error::Input("real subgroup generators must be 0/1 vectors".into()));
        }
        let generators = if rows.is_empty() {
            ExactMatrix::zeros(0, m)
        } else {
            ExactMatrix::from_rows(rows)?
        };
        let actual = match kind {
            GroupKind::Real => rank(&generators, FieldTag::Gf2),
            GroupKind::Torus => smith_normal_form(&generators).len(),
        };
        if actual != rows.len() {
            return Err(Error::RankDeficient {
                claimed: rows.len(),
                actual,
            });
        }
        Ok(SubgroupSpec { kind, m, generators })
    }

    pub fn real(m: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(GroupKind::Real, m, rows)
    }

    pub fn torus(m: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(GroupKind::Torus, m, rows)
    }

    /// The diagonal circle `t ↦ (t, ..., t)`.
    pub fn diagonal_torus(m: usize) -> Self {
        Self::torus(m, &[vec![1; m]]).expect("a nonzero row has rank one")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn ground_set(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &ExactMatrix {
        &self.generators
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                self.generators
                    .row(i)
                    .iter()
                    .map(|v| i64::try_from(v).expect("generator entries fit in i64"))
                    .collect()
            })
            .collect()
    }

    /// Whether the projection onto the coordinates outside `face` is injective.
    pub fn injective_off(&self, face: Subset) -> bool {
        let r = self.rank();
        if r == 0 {
            return true;
        }
        let cols: Vec<usize> = (0..self.m).filter(|&j| !face.contains(j + 1)).collect();
        let sub = self.generators.select_columns(&cols);
        match self.kind {
            GroupKind::Real => rank(&sub, FieldTag::Gf2) == r,
            GroupKind::Torus => {
                let d = smith_normal_form(&sub);
                d.len() == r && d.iter().all(One::is_one)
            }
        }
    }
}

fn check_same_ground_set(h: &SubgroupSpec, k: &SimplicialComplex) -> Result<()> {
    if h.m == k.ground_set() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            what: "subgroup ground set",
            expected: k.ground_set(),
            got: h.m,
        })
    }
}

/// Freeness checked on the maximal faces of `K`.
pub fn is_free(h: &SubgroupSpec, k: &SimplicialComplex) -> Result<bool> {
    check_same_ground_set(h, k)?;
    Ok(k.maximal_faces().iter().all(|&s| h.injective_off(s)))
}

/// Freeness checked on every face of `K`.
pub fn is_free_all_faces(h: &SubgroupSpec, k: &SimplicialComplex) -> Result<bool> {
    check_same_ground_set(h, k)?;
    Ok(k.faces().all(|s| h.injective_off(s)))
}

/// Freeness of a real subgroup read directly off the cells of the interval
/// model: a nonzero `h` has a fixed point in a cell iff it flips no
/// coordinate where the cell sits on one of the two endpoints (the open
/// interval factor always contains the fixed point 0).
pub fn orbit_free_on_cells(h: &SubgroupSpec, k: &SimplicialComplex) -> Result<bool> {
    check_same_ground_set(h, k)?;
    if h.kind != GroupKind::Real {
        return Err(Error::Input("cell-level orbit check applies to real subgroups".into()));
    }
    let rows = h.rows();
    let elements: Vec<Vec<i64>> = (1u32..1 << rows.len())
        .map(|combo| {
            (0..h.m)
                .map(|j| {
                    rows.iter()
                        .enumerate()
                        .filter(|(t, _)| combo >> t & 1 == 1)
                        .map(|(_, r)| r[j])
                        .sum::<i64>()
                        % 2
                })
                .collect()
        })
        .collect();
    for cell in cells(k)? {
        for g in &elements {
            let fixes_a_point = cell
                .0
                .iter()
                .zip(g)
                .all(|(&c, &flip)| c == CellModel::TOP || flip == 0);
            if fixes_a_point {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `m - dim K - 1`, the largest rank of a freely acting subgroup.
pub fn rank_bound(k: &SimplicialComplex) -> i64 {
    k.ground_set() as i64 - k.dim() - 1
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HcReport {
    pub kind: GroupKind,
    pub field: FieldTag,
    pub r: usize,
    pub free: bool,
    pub total_dim_zk: u64,
    pub total_dim_rzk: u64,
    /// `2^r`.
    pub lower_bound: u64,
    pub rank_bound: i64,
    /// `total >= 2^r`; absent when the action is not free.
    pub cohomology_bound_holds: Option<bool>,
    /// `r <= m - dim K - 1`; absent when the action is not free.
    pub rank_bound_holds: Option<bool>,
    pub totals_equal: bool,
}

impl HcReport {
    /// False only when an asserted inequality or identity fails.
    pub fn holds(&self) -> bool {
        self.totals_equal
            && self.cohomology_bound_holds != Some(false)
            && self.rank_bound_holds != Some(false)
    }
}

/// Checks `sum dim H^*(Z_K) = sum dim H^*(RZ_K) >= 2^r` for a free `H`.
pub fn hc_verify(k: &SimplicialComplex, h: &SubgroupSpec, field: FieldTag) -> Result<HcReport> {
    let free = is_free(h, k)?;
    let total_dim_zk = poincare_zk(k, field).total_dim();
    let total_dim_rzk = poincare_rzk(k, field).total_dim();
    let r = h.rank();
    let lower_bound = 1u64 << r;
    let bound = rank_bound(k);
    let total = match h.kind {
        GroupKind::Torus => total_dim_zk,
        GroupKind::Real => total_dim_rzk,
    };
    Ok(HcReport {
        kind: h.kind,
        field,
        r,
        free,
        total_dim_zk,
        total_dim_rzk,
        lower_bound,
        rank_bound: bound,
        cohomology_bound_holds: free.then_some(total >= lower_bound),
        rank_bound_holds: free.then_some(r as i64 <= bound),
        totals_equal: total_dim_zk == total_dim_rzk,
    })
}

/// Row-reduced echelon generator matrices with the given pivot columns.
fn echelon_matrices(m: usize, pivots: &[usize]) -> Vec<Vec<Vec<i64>>> {
    let free_slots: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(t, &p)| (p + 1..m).filter(|j| !pivots.contains(j)).map(move |j| (t, j)))
        .collect();
    (0u64..1 << free_slots.len())
        .map(|bits| {
            let mut rows = vec![vec![0i64; m]; pivots.len()];
            for (t, &p) in pivots.iter().enumerate() {
                rows[t][p] = 1;
            }
            for (n, &(t, j)) in free_slots.iter().enumerate() {
                rows[t][j] = (bits >> n & 1) as i64;
            }
            rows
        })
        .collect()
}

/// The largest rank of a real subgroup acting freely, with a witness, by
/// exhaustive search over echelon forms.
pub fn max_free_rank_real(k: &SimplicialComplex) -> Result<(usize, SubgroupSpec)> {
    let m = k.ground_set();
    check_ground_set(m, MAX_SEARCH)?;
    for r in (1..=m).rev() {
        let pivot_sets: Vec<Vec<usize>> = (0u32..1 << m)
            .filter(|p| p.count_ones() as usize == r)
            .map(|p| (0..m).filter(|j| p >> j & 1 == 1).collect())
            .collect();
        let found = pivot_sets.par_iter().find_map_first(|pivots| {
            echelon_matrices(m, pivots).into_iter().find_map(|rows| {
                let h = SubgroupSpec::real(m, &rows).expect("echelon rows are independent");
                k.maximal_faces().iter().all(|&s| h.injective_off(s)).then_some(h)
            })
        });
        if let Some(h) = found {
            return Ok((r, h));
        }
    }
    Ok((0, SubgroupSpec::real(m, &[])?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_complexes;

    #[test]
    fn validation() {
        assert!(matches!(
            SubgroupSpec::real(3, &[vec![1, 1, 1], vec![1, 1, 1]]),
            Err(Error::RankDeficient { claimed: 2, actual: 1 })
        ));
        assert!(SubgroupSpec::real(3, &[vec![1, 2, 0]]).is_err());
        assert!(SubgroupSpec::torus(3, &[vec![1, 2]]).is_err());
        assert!(SubgroupSpec::torus(2, &[vec![2, 0], vec![0, 3]]).is_ok());
        let h = SubgroupSpec::real(4, &[vec![1, 1, 0, 0]]).unwrap();
        let k = SimplicialComplex::simplex(3).unwrap();
        assert!(matches!(is_free(&h, &k), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn examples() {
        for m in 2..=6 {
            let sphere = SimplicialComplex::simplex_boundary(m).unwrap();
            assert!(is_free(&SubgroupSpec::diagonal_torus(m), &sphere).unwrap());
            assert_eq!(rank_bound(&sphere), 1);
            let full = SimplicialComplex::simplex(m).unwrap();
            assert!(!is_free(&SubgroupSpec::diagonal_torus(m), &full).unwrap());
            assert_eq!(rank_bound(&full), 0);
            assert_eq!(rank_bound(&SimplicialComplex::empty_face_only(m).unwrap()), m as i64);
        }
        let circle = SimplicialComplex::simplex_boundary(3).unwrap();
        let h = SubgroupSpec::real(3, &[vec![1, 1, 1]]).unwrap();
        assert!(is_free(&h, &circle).unwrap());
        assert!(orbit_free_on_cells(&h, &circle).unwrap());
        // A non-split circle: t ↦ (t², t², t²) has isotropy Z/2 everywhere.
        let doubled = SubgroupSpec::torus(3, &[vec![2, 2, 2]]).unwrap();
        assert!(!is_free(&doubled, &circle).unwrap());
    }

    #[test]
    fn hc_examples() {
        for m in 2..=5 {
            let sphere = SimplicialComplex::simplex_boundary(m).unwrap();
            let r = hc_verify(&sphere, &SubgroupSpec::diagonal_torus(m), FieldTag::Rational).unwrap();
            assert!(r.free && r.holds());
            assert_eq!((r.total_dim_zk, r.lower_bound), (2, 2));

            let e = SimplicialComplex::empty_face_only(m).unwrap();
            let identity: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
            let full_group = SubgroupSpec::real(m, &identity).unwrap();
            let r = hc_verify(&e, &full_group, FieldTag::Gf2).unwrap();
            assert!(r.free && r.holds());
            assert_eq!((r.total_dim_rzk, r.lower_bound), (1 << m, 1 << m));

            let full = SimplicialComplex::simplex(m).unwrap();
            let r = hc_verify(&full, &SubgroupSpec::diagonal_torus(m), FieldTag::Gf2).unwrap();
            assert!(!r.free);
            assert_eq!(r.cohomology_bound_holds, None);
            assert!(r.holds());
        }
    }

    #[test]
    fn search_and_criteria_agree_small() {
        for m in 1..=4 {
            for k in enumerate_complexes(m).unwrap() {
                let (r, witness) = max_free_rank_real(&k).unwrap();
                assert_eq!(witness.rank(), r);
                assert!(is_free(&witness, &k).unwrap());
                assert!(r as i64 <= rank_bound(&k));
                for pivots in (0u32..1 << m).map(|p| (0..m).filter(|j| p >> j & 1 == 1).collect::<Vec<_>>()) {
                    for rows in echelon_matrices(m, &pivots) {
                        let h = SubgroupSpec::real(m, &rows).unwrap();
                        let free = is_free(&h, &k).unwrap();
                        assert_eq!(free, is_free_all_faces(&h, &k).unwrap());
                        assert_eq!(free, orbit_free_on_cells(&h, &k).unwrap());
                        assert!(!free || h.rank() <= r);
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_under_subcomplexes() {
        let ks: Vec<SimplicialComplex> = enumerate_complexes(3).unwrap().collect();
        let h = SubgroupSpec::real(3, &[vec![1, 1, 0]]).unwrap();
        for big in &ks {
            if is_free(&h, big).unwrap() {
                for small in ks.iter().filter(|s| s.is_subcomplex_of(big)) {
                    assert!(is_free(&h, small).unwrap());
                }
            }
        }
    }

    #[test]
    fn search_size_limit() {
        let k = SimplicialComplex::empty_face_only(7).unwrap();
        assert!(max_free_rank_real(&k).is_err());
    }
}
