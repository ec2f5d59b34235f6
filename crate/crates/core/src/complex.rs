//! Abstract simplicial complexes on `[m]`.

use std::fmt;

use rand::Rng;

use crate::error::{check_ground_set, Error, Result, MAX_GROUND_SET};
use crate::powerset::SubsetFn;
use crate::subset::Subset;

/// Largest ground set accepted by [`enumerate_complexes`].
pub const MAX_ENUMERATION: usize = 4;

/// A downward-closed family of subsets of `[m]` containing the empty set.
///
/// Faces are held as their indicator function; the inclusion-maximal faces
/// are kept alongside in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    indicator: SubsetFn,
    maximal: Vec<Subset>,
}

impl SimplicialComplex {
    /// The downward closure of `gens` together with the empty face.
    pub fn from_maximal_faces(m: usize, gens: &[Subset]) -> Result<Self> {
        let mut f = SubsetFn::zero(m)?;
        f.set(Subset::EMPTY, true);
        for &g in gens {
            if !g.within(m) {
                let element = g.iter().find(|&e| e > m).unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, m });
            }
            f.set(g, true);
        }
        // Propagate each face to all of its subsets, one coordinate at a time.
        for element in 1..=m {
            let mut faces: Vec<Subset> = f.support_iter().filter(|a| a.contains(element)).collect();
            faces.sort_unstable();
            for a in faces {
                f.set(a.remove(element), true);
            }
        }
        Ok(Self::from_closed(f))
    }

    /// Same as [`Self::from_maximal_faces`] with 1-based element lists.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_ground_set(m, MAX_GROUND_SET)?;
        let gens = facets
            .iter()
            .map(|f| Subset::from_elements(m, f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_maximal_faces(m, &gens)
    }

    /// The complex whose faces are `supp(f)`; `f` must be nice.
    pub fn from_support(f: &SubsetFn) -> Result<Self> {
        f.check_nice()?;
        Ok(Self::from_closed(f.clone()))
    }

    /// The full power set `2^[m]`.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::from_maximal_faces(m, &[Subset::full(m)])
    }

    /// The boundary of the simplex on `[m]`, `2^[m] \ {[m]}`.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        check_ground_set(m, MAX_GROUND_SET)?;
        let full = Subset::full(m);
        let gens: Vec<Subset> = (1..=m).map(|i| full.remove(i)).collect();
        Self::from_maximal_faces(m, &gens)
    }

    /// The complex `{∅}` on `[m]`.
    pub fn empty_face_only(m: usize) -> Result<Self> {
        Self::from_maximal_faces(m, &[])
    }

    fn from_closed(indicator: SubsetFn) -> Self {
        let m = indicator.ground_set();
        let maximal = indicator
            .support_iter()
            .filter(|&a| (1..=m).all(|e| a.contains(e) || !indicator.get(a.insert(e))))
            .collect();
        SimplicialComplex { indicator, maximal }
    }

    pub fn ground_set(&self) -> usize {
        self.indicator.ground_set()
    }

    /// The nice function `sum_{a in K} delta_a`.
    pub fn indicator(&self) -> &SubsetFn {
        &self.indicator
    }

    pub fn contains(&self, face: Subset) -> bool {
        face.within(self.ground_set()) && self.indicator.get(face)
    }

    pub fn maximal_faces(&self) -> &[Subset] {
        &self.maximal
    }

    /// Faces in canonical order.
    pub fn faces(&self) -> impl Iterator<Item = Subset> + '_ {
        self.indicator.support_iter()
    }

    pub fn face_count(&self) -> usize {
        self.indicator.support_size()
    }

    /// `max |a| - 1` over faces; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.maximal.iter().map(|a| a.len() as i64).max().unwrap_or(0) - 1
    }

    /// Union of all faces.
    pub fn vertex_set(&self) -> Subset {
        self.maximal.iter().fold(Subset::EMPTY, |acc, &a| acc.union(a))
    }

    /// True when every element of `[m]` is a vertex.
    pub fn has_no_ghost_vertices(&self) -> bool {
        self.vertex_set() == Subset::full(self.ground_set())
    }

    /// The full subcomplex `K|_a = {σ ∈ K : σ ⊆ a}`, kept on the same ground
    /// set so labels are unchanged.
    pub fn restriction(&self, a: Subset) -> SimplicialComplex {
        let a = a.intersection(Subset::full(self.ground_set()));
        let mut gens: Vec<Subset> = self.maximal.iter().map(|&s| s.intersection(a)).collect();
        gens.sort_unstable();
        gens.dedup();
        SimplicialComplex::from_maximal_faces(self.ground_set(), &gens)
            .expect("restriction stays within the ground set")
    }

    /// `K|_a` re-indexed onto `[|a|]`, with the original labels of the new
    /// vertices `1..=|a|` (label `labels[j]` becomes vertex `j + 1`).
    pub fn restriction_reindexed(&self, a: Subset) -> Result<(SimplicialComplex, Vec<usize>)> {
        let labels = a.intersection(Subset::full(self.ground_set())).elements();
        let k = labels.len().max(1);
        let compress = |s: Subset| {
            Subset::from_mask(
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, &l)| s.contains(l))
                    .fold(0u32, |acc, (j, _)| acc | 1 << j),
            )
        };
        let gens: Vec<Subset> = self.maximal.iter().map(|&s| compress(s.intersection(a))).collect();
        Ok((SimplicialComplex::from_maximal_faces(k, &gens)?, labels))
    }

    /// Relabels vertices: element `i` becomes `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        let m = self.ground_set();
        if perm.len() != m {
            return Err(Error::DimensionMismatch {
                what: "permutation length",
                expected: m,
                got: perm.len(),
            });
        }
        let gens = self
            .maximal
            .iter()
            .map(|s| Subset::from_elements(m, &s.iter().map(|e| perm[e - 1]).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_maximal_faces(m, &gens)
    }

    /// True iff every face of `self` is a face of `other` (same ground set).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.ground_set() == other.ground_set() && self.maximal.iter().all(|&s| other.contains(s))
    }

    /// Maximal faces as sorted 1-based vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.maximal.iter().map(|s| s.elements()).collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(m={}, maximal=", self.ground_set())?;
        f.debug_list().entries(&self.maximal).finish()?;
        f.write_str(")")
    }
}

/// Every simplicial complex on `[m]` (including `{∅}`), each exactly once.
///
/// Subsets are decided in canonical order, which lists every subset after
/// all of its proper subsets, so a subset may be added exactly when each of
/// its codimension-one faces already was.
pub fn enumerate_complexes(m: usize) -> Result<impl Iterator<Item = SimplicialComplex>> {
    check_ground_set(m, MAX_ENUMERATION)?;
    let mut out = Vec::new();
    let mut f = SubsetFn::zero(m)?;
    f.set(Subset::EMPTY, true);
    extend_downsets(&mut f, 1, &mut out);
    Ok(out.into_iter())
}

fn extend_downsets(f: &mut SubsetFn, next: u32, out: &mut Vec<SimplicialComplex>) {
    let m = f.ground_set();
    if next == 1 << m {
        out.push(SimplicialComplex::from_closed(f.clone()));
        return;
    }
    let a = Subset::from_mask(next);
    extend_downsets(f, next + 1, out);
    if a.iter().all(|e| f.get(a.remove(e))) {
        f.set(a, true);
        extend_downsets(f, next + 1, out);
        f.set(a, false);
    }
}

/// A random complex on `[m]`: between one and `2m` random generators, each
/// vertex included independently with a per-complex density.
pub fn random_complex<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<SimplicialComplex> {
    check_ground_set(m, MAX_GROUND_SET)?;
    let density: f64 = rng.gen_range(0.2..0.85);
    let count = rng.gen_range(1..=2 * m);
    let gens: Vec<Subset> = (0..count)
        .map(|_| {
            Subset::from_mask((0..m).filter(|_| rng.gen_bool(density)).fold(0u32, |acc, i| acc | 1 << i))
        })
        .collect();
    SimplicialComplex::from_maximal_faces(m, &gens)
}
