//! Bigraded Betti numbers of Stanley–Reisner rings.
//!
//! `β_{i,a}` is read off the reduced cohomology of the full subcomplex
//! `K|_a` in degree `|a| - i - 1`; no free resolution is built. Each subset
//! `a` is an independent job.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::linalg::{ChainComplexData, Direction, ExactMatrix, FieldTag};
use crate::powerset::SubsetFn;
use crate::subset::Subset;

/// The coaugmented simplicial cochain complex on a list of faces, degree
/// `-1` spanned by the empty face. `faces` must be downward closed.
pub fn coaugmented_cochain_complex(faces: &[Subset], field: FieldTag) -> ChainComplexData {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    // by_size[s] lists faces with s vertices, i.e. cochain degree s - 1.
    let mut by_size: Vec<Vec<Subset>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.len()].push(f);
    }
    for group in by_size.iter_mut() {
        group.sort_unstable();
    }
    let dims: Vec<usize> = by_size.iter().map(Vec::len).collect();
    let diffs = (0..top)
        .map(|s| {
            let lower = &by_size[s];
            let upper = &by_size[s + 1];
            let mut entries = Vec::new();
            for (row, &tau) in upper.iter().enumerate() {
                for (pos, v) in tau.iter().enumerate() {
                    let sigma = tau.remove(v);
                    let col = lower.binary_search(&sigma).expect("faces are downward closed");
                    entries.push((row, col, if pos % 2 == 0 { 1i64 } else { -1 }));
                }
            }
            ExactMatrix::from_triplets(upper.len(), lower.len(), entries).expect("indices in range")
        })
        .collect();
    ChainComplexData::new(field, Direction::Cochain, -1, dims, diffs)
        .expect("simplicial coboundary squares to zero")
}

fn reduced_dims_of_faces(faces: &[Subset], field: FieldTag) -> Vec<usize> {
    coaugmented_cochain_complex(faces, field).homology_dims()
}

/// Dimensions of `H̃^j(K)` for `j = -1, 0, ..., dim K` (index 0 is `j = -1`).
pub fn reduced_cohomology_dims(k: &SimplicialComplex, field: FieldTag) -> Vec<usize> {
    let faces: Vec<Subset> = k.faces().collect();
    reduced_dims_of_faces(&faces, field)
}

/// `β_{i,a}` for every `i` and squarefree `a`, over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    m: usize,
    field: FieldTag,
    entries: BTreeMap<(usize, Subset), u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub a: Subset,
    pub beta: u64,
}

/// Serializable view of a [`BettiTable`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiReport {
    pub field: FieldTag,
    pub m: usize,
    pub entries: Vec<BettiEntry>,
    /// `sum_a β_{i,a}` indexed by `i`.
    pub row_totals: Vec<u64>,
    pub total: u64,
}

impl BettiTable {
    pub fn ground_set(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn get(&self, i: usize, a: Subset) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, canonical index of a)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Subset, u64)> + '_ {
        self.entries.iter().map(|(&(i, a), &b)| (i, a, b))
    }

    /// `sum_i sum_a β_{i,a}`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The function `a ↦ sum_i β_{i,a} mod 2`.
    pub fn parity(&self) -> SubsetFn {
        let mut f = SubsetFn::zero(self.m).expect("table ground set is valid");
        for (&(_, a), &b) in &self.entries {
            if b % 2 == 1 {
                f.set(a, !f.get(a));
            }
        }
        f
    }

    pub fn report(&self) -> BettiReport {
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut row_totals = vec![0; max_i + 1];
        for (&(i, _), &b) in &self.entries {
            row_totals[i] += b;
        }
        BettiReport {
            field: self.field,
            m: self.m,
            entries: self.entries().map(|(i, a, beta)| BettiEntry { i, a, beta }).collect(),
            row_totals,
            total: self.total(),
        }
    }
}

/// `β_{i,a} = dim H̃^{|a|-i-1}(K|_a)` for all `a ⊆ [m]`, `0 <= i <= |a|`.
pub fn betti_table(k: &SimplicialComplex, field: FieldTag) -> BettiTable {
    let m = k.ground_set();
    let f = k.indicator();
    let per_subset: Vec<(Subset, Vec<usize>)> = (0..1u32 << m)
        .into_par_iter()
        .map(|mask| {
            let a = Subset::from_mask(mask);
            let faces: Vec<Subset> = a.subsets().filter(|&s| f.get(s)).collect();
            (a, reduced_dims_of_faces(&faces, field))
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (a, dims) in per_subset {
        // dims[d] is H̃^{d-1}; degree |a| - i - 1 sits at index |a| - i.
        for (d, &h) in dims.iter().enumerate() {
            if h > 0 {
                let i = a.len() - d;
                entries.insert((i, a), h as u64);
            }
        }
    }
    BettiTable { m, field, entries }
}

pub fn total_betti_sum(t: &BettiTable) -> u64 {
    t.total()
}

/// Outcome of checking `M(f)(a) ≡ sum_i β_{i,a} (mod 2)` for every `a`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParityIdentityReport {
    pub field: FieldTag,
    pub holds: bool,
    /// First `a` (canonical order) where the two sides differ.
    pub witness: Option<Subset>,
    /// Whether every element of `[m]` is a vertex, as the identity's usual
    /// statement assumes. The identity is evaluated either way.
    pub no_ghost_vertices: bool,
}

/// Computes the Betti table over `field` and checks the parity identity.
pub fn parity_identity(k: &SimplicialComplex, field: FieldTag) -> ParityIdentityReport {
    check_parity_identity(k, &betti_table(k, field))
}

/// Same check against a table that was already computed.
pub fn check_parity_identity(k: &SimplicialComplex, table: &BettiTable) -> ParityIdentityReport {
    let g = k.indicator().mobius();
    let diff = &g + &table.parity();
    let witness = diff.support_iter().next();
    ParityIdentityReport {
        field: table.field(),
        holds: witness.is_none(),
        witness,
        no_ghost_vertices: k.has_no_ghost_vertices(),
    }
}

/// `|supp(M(f))| <= sum β_{i,a}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SupportBoundReport {
    pub field: FieldTag,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

/// Computes the Betti table over `field` and checks the support bound.
pub fn support_bound(k: &SimplicialComplex, field: FieldTag) -> SupportBoundReport {
    check_support_bound(k, &betti_table(k, field))
}

pub fn check_support_bound(k: &SimplicialComplex, table: &BettiTable) -> SupportBoundReport {
    let lhs = k.indicator().mobius().support_size() as u64;
    let rhs = table.total();
    SupportBoundReport {
        field: table.field(),
        lhs,
        rhs,
        holds: lhs <= rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_complexes;

    fn s(m: usize, e: &[usize]) -> Subset {
        Subset::from_elements(m, e).unwrap()
    }

    #[test]
    fn reduced_cohomology_examples() {
        for field in FieldTag::ALL {
            let e = SimplicialComplex::empty_face_only(3).unwrap();
            assert_eq!(reduced_cohomology_dims(&e, field), vec![1]);
            let two = SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap();
            assert_eq!(reduced_cohomology_dims(&two, field), vec![0, 1]);
            let circle = SimplicialComplex::simplex_boundary(3).unwrap();
            assert_eq!(reduced_cohomology_dims(&circle, field), vec![0, 0, 1]);
            let disk = SimplicialComplex::simplex(3).unwrap();
            assert_eq!(reduced_cohomology_dims(&disk, field), vec![0, 0, 0, 0]);
        }
    }

    #[test]
    fn betti_examples() {
        for field in FieldTag::ALL {
            for m in 1..=5 {
                let full = betti_table(&SimplicialComplex::simplex(m).unwrap(), field);
                assert_eq!(full.entries().collect::<Vec<_>>(), vec![(0, Subset::EMPTY, 1)]);
                assert_eq!(total_betti_sum(&full), 1);
            }
            for m in 2..=6 {
                let b = betti_table(&SimplicialComplex::simplex_boundary(m).unwrap(), field);
                assert_eq!(
                    b.entries().collect::<Vec<_>>(),
                    vec![(0, Subset::EMPTY, 1), (1, Subset::full(m), 1)]
                );
                assert_eq!(b.total(), 2);
            }
            let two = SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap();
            let t = betti_table(&two, field);
            assert_eq!(
                t.entries().collect::<Vec<_>>(),
                vec![(0, Subset::EMPTY, 1), (1, s(2, &[1, 2]), 1)]
            );
            assert_eq!(t.total(), 2);
        }
    }

    #[test]
    fn ghost_vertex_generator() {
        // Vertex 3 never appears: v_3 lies in the Stanley–Reisner ideal.
        let k = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        let t = betti_table(&k, FieldTag::Gf2);
        assert_eq!(t.get(1, s(3, &[3])), 1);
        assert!(!parity_identity(&k, FieldTag::Gf2).no_ghost_vertices);
        assert!(parity_identity(&k, FieldTag::Gf2).holds);
    }

    #[test]
    fn empty_face_only_is_koszul() {
        // k[v]/(v_1..v_m) is resolved by the Koszul complex: β_{i,a} = 1 iff |a| = i.
        for m in 1..=5 {
            let k = SimplicialComplex::empty_face_only(m).unwrap();
            let t = betti_table(&k, FieldTag::Rational);
            for a in Subset::all(m) {
                for i in 0..=m {
                    assert_eq!(t.get(i, a), u64::from(a.len() == i));
                }
            }
            let r = support_bound(&k, FieldTag::Gf2);
            assert_eq!(r.lhs, 1 << m);
            assert!(r.rhs >= 1 << m);
        }
    }

    #[test]
    fn parity_identity_on_circle() {
        let k = SimplicialComplex::simplex_boundary(3).unwrap();
        let g = k.indicator().mobius();
        assert_eq!(g.support(), vec![Subset::EMPTY, Subset::full(3)]);
        for field in FieldTag::ALL {
            let r = parity_identity(&k, field);
            assert!(r.holds && r.witness.is_none());
            let c = support_bound(&k, field);
            assert_eq!((c.lhs, c.rhs), (2, 2));
        }
    }

    #[test]
    fn structural_invariants_small() {
        for m in 1..=4 {
            for k in enumerate_complexes(m).unwrap() {
                for field in FieldTag::ALL {
                    let t = betti_table(&k, field);
                    assert_eq!(t.get(0, Subset::EMPTY), 1);
                    assert!(t.entries().all(|(i, a, _)| i <= a.len()));
                    assert!(check_parity_identity(&k, &t).holds);
                }
            }
        }
    }

    #[test]
    fn detects_wrong_table() {
        let k = SimplicialComplex::simplex_boundary(3).unwrap();
        let mut t = betti_table(&k, FieldTag::Gf2);
        t.entries.insert((1, s(3, &[1, 2])), 1);
        let r = check_parity_identity(&k, &t);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(s(3, &[1, 2])));
    }
}
