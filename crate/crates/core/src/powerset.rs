//! The algebra of `Z/2Z`-valued functions on the power set of `[m]`.
//!
//! A [`SubsetFn`] is a table of `2^m` bits packed into 64-bit words, indexed
//! by the canonical index of a subset. Addition is pointwise XOR and
//! multiplication pointwise AND.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{check_ground_set, Error, Result, MAX_GROUND_SET};
use crate::subset::Subset;

/// Masks selecting positions whose bit `i` is clear, for `i < 6`.
pub(crate) const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetFn {
    m: usize,
    words: Vec<u64>,
}

/// The named basis functions of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `delta(a)` is 1 exactly at `a`.
    Delta(Subset),
    /// `mu(a)` is 1 exactly on the supersets of `a`.
    Mu(Subset),
    /// The `i`-th coordinate function, 1 on subsets containing `i`.
    Coordinate(usize),
    /// The constant function 1.
    One,
}

fn word_count(m: usize) -> usize {
    if m >= 6 {
        1 << (m - 6)
    } else {
        1
    }
}

/// Mask of valid bits in the last word for ground sets with `m < 6`.
fn tail_mask(m: usize) -> u64 {
    if m >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << m)) - 1
    }
}

impl SubsetFn {
    pub fn zero(m: usize) -> Result<Self> {
        check_ground_set(m, MAX_GROUND_SET)?;
        Ok(SubsetFn {
            m,
            words: vec![0; word_count(m)],
        })
    }

    pub fn one(m: usize) -> Result<Self> {
        let mut f = Self::zero(m)?;
        f.words.fill(u64::MAX);
        f.words[0] &= tail_mask(m);
        Ok(f)
    }

    pub fn delta(m: usize, a: Subset) -> Result<Self> {
        let mut f = Self::zero(m)?;
        check_within(m, a)?;
        f.set(a, true);
        Ok(f)
    }

    pub fn mu(m: usize, a: Subset) -> Result<Self> {
        let mut f = Self::zero(m)?;
        check_within(m, a)?;
        for b in Subset::full(m).difference(a).subsets() {
            f.set(b.union(a), true);
        }
        Ok(f)
    }

    pub fn coordinate(m: usize, element: usize) -> Result<Self> {
        check_ground_set(m, MAX_GROUND_SET)?;
        if element == 0 || element > m {
            return Err(Error::ElementOutOfRange { element, m });
        }
        Self::mu(m, Subset::singleton(element))
    }

    pub fn basis(kind: BasisKind, m: usize) -> Result<Self> {
        match kind {
            BasisKind::Delta(a) => Self::delta(m, a),
            BasisKind::Mu(a) => Self::mu(m, a),
            BasisKind::Coordinate(i) => Self::coordinate(m, i),
            BasisKind::One => Self::one(m),
        }
    }

    /// Builds a function from its support.
    pub fn from_support<I: IntoIterator<Item = Subset>>(m: usize, support: I) -> Result<Self> {
        let mut f = Self::zero(m)?;
        for a in support {
            check_within(m, a)?;
            f.set(a, true);
        }
        Ok(f)
    }

    /// Builds a function from a predicate evaluated on every subset.
    pub fn from_fn(m: usize, mut pred: impl FnMut(Subset) -> bool) -> Result<Self> {
        let mut f = Self::zero(m)?;
        for a in Subset::all(m) {
            if pred(a) {
                f.set(a, true);
            }
        }
        Ok(f)
    }

    /// Builds a function from raw packed words; surplus bits are cleared.
    pub fn from_words(m: usize, mut words: Vec<u64>) -> Result<Self> {
        check_ground_set(m, MAX_GROUND_SET)?;
        if words.len() != word_count(m) {
            return Err(Error::DimensionMismatch {
                what: "packed word count",
                expected: word_count(m),
                got: words.len(),
            });
        }
        words[0] &= tail_mask(m);
        Ok(SubsetFn { m, words })
    }

    pub fn ground_set(&self) -> usize {
        self.m
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, a: Subset) -> bool {
        let i = a.index();
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub(crate) fn set(&mut self, a: Subset, value: bool) {
        let i = a.index();
        let bit = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= bit;
        } else {
            self.words[i >> 6] &= !bit;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|supp(f)|`.
    pub fn support_size(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Subsets where `f = 1`, sorted by cardinality and then canonical index.
    pub fn support(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.support_iter().collect();
        out.sort_by_key(|a| (a.len(), a.index()));
        out
    }

    /// Subsets where `f = 1`, in canonical order.
    pub fn support_iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Subset::from_mask(((w << 6) | bit) as u32))
            })
        })
    }

    /// The Möbius transform `M(f)(a) = sum_{b ⊆ a} f(b) mod 2`.
    ///
    /// One butterfly pass per coordinate: `out(a) += out(a \ {i})` for every
    /// `a` containing `i`.
    pub fn mobius(&self) -> SubsetFn {
        let mut out = self.clone();
        let m = self.m;
        for i in 0..m.min(6) {
            let shift = 1 << i;
            for w in out.words.iter_mut() {
                *w ^= (*w & LOW_HALF[i]) << shift;
            }
        }
        for i in 6..m {
            let stride = 1 << (i - 6);
            for j in 0..out.words.len() {
                if j & stride != 0 {
                    let low = out.words[j ^ stride];
                    out.words[j] ^= low;
                }
            }
        }
        out.words[0] &= tail_mask(m);
        out
    }

    /// True iff the support is a simplicial complex: downward closed and
    /// containing the empty set. The zero function is not nice.
    pub fn is_nice(&self) -> bool {
        self.niceness_violation().is_none()
    }

    /// Checks niceness, naming a violating pair on failure.
    pub fn check_nice(&self) -> Result<()> {
        match self.niceness_violation() {
            None => Ok(()),
            Some(_) if self.is_zero() => Err(Error::EmptySupport),
            Some((superset, subset)) => Err(Error::NotNice { superset, subset }),
        }
    }

    /// A pair `(a, a \ {i})` with `f(a) = 1` and `f(a \ {i}) = 0`, if any.
    /// Downward closure under single-element removal implies full closure.
    fn niceness_violation(&self) -> Option<(Subset, Subset)> {
        if self.is_zero() {
            return Some((Subset::EMPTY, Subset::EMPTY));
        }
        if !self.get(Subset::EMPTY) {
            // Some nonempty face exists; walk down from it.
            let a = self.support_iter().next()?;
            let subset = a
                .subsets()
                .find(|&b| !self.get(b))
                .expect("empty set is missing");
            return Some((a, subset));
        }
        for i in 0..self.m {
            let element = i + 1;
            let bad = if i < 6 {
                let shift = 1 << i;
                self.words
                    .iter()
                    .position(|&w| (w & !LOW_HALF[i]) >> shift & !w != 0)
            } else {
                let stride = 1 << (i - 6);
                (0..self.words.len())
                    .position(|j| j & stride != 0 && self.words[j] & !self.words[j ^ stride] != 0)
            };
            if bad.is_some() {
                let a = self
                    .support_iter()
                    .find(|&a| a.contains(element) && !self.get(a.remove(element)))
                    .expect("violation located by word scan");
                return Some((a, a.remove(element)));
            }
        }
        None
    }
}

fn check_within(m: usize, a: Subset) -> Result<()> {
    if a.within(m) {
        Ok(())
    } else {
        let element = a.iter().find(|&e| e > m).unwrap_or(0);
        Err(Error::ElementOutOfRange { element, m })
    }
}

impl Add for &SubsetFn {
    type Output = SubsetFn;

    fn add(self, rhs: &SubsetFn) -> SubsetFn {
        assert_eq!(self.m, rhs.m, "ground sets differ");
        SubsetFn {
            m: self.m,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a ^ b).collect(),
        }
    }
}

impl Add for SubsetFn {
    type Output = SubsetFn;

    fn add(self, rhs: SubsetFn) -> SubsetFn {
        &self + &rhs
    }
}

impl Mul for &SubsetFn {
    type Output = SubsetFn;

    fn mul(self, rhs: &SubsetFn) -> SubsetFn {
        assert_eq!(self.m, rhs.m, "ground sets differ");
        SubsetFn {
            m: self.m,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect(),
        }
    }
}

impl Mul for SubsetFn {
    type Output = SubsetFn;

    fn mul(self, rhs: SubsetFn) -> SubsetFn {
        &self * &rhs
    }
}

impl fmt::Debug for SubsetFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetFn(m={}, supp=", self.m)?;
        f.debug_list().entries(self.support()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(m: usize, e: &[usize]) -> Subset {
        Subset::from_elements(m, e).unwrap()
    }

    fn naive_mobius(f: &SubsetFn) -> SubsetFn {
        let m = f.ground_set();
        SubsetFn::from_fn(m, |a| a.subsets().filter(|&b| f.get(b)).count() % 2 == 1).unwrap()
    }

    fn arb_fn(max_m: usize) -> impl Strategy<Value = SubsetFn> {
        (1..=max_m).prop_flat_map(|m| {
            proptest::collection::vec(any::<u64>(), word_count(m))
                .prop_map(move |w| SubsetFn::from_words(m, w).unwrap())
        })
    }

    #[test]
    fn basis_examples() {
        let d = SubsetFn::delta(2, s(2, &[1])).unwrap();
        assert_eq!(d.support(), vec![s(2, &[1])]);
        assert_eq!(SubsetFn::mu(3, Subset::EMPTY).unwrap(), SubsetFn::one(3).unwrap());
        let mu1 = SubsetFn::mu(2, s(2, &[1])).unwrap();
        assert_eq!(mu1.support(), vec![s(2, &[1]), s(2, &[1, 2])]);
        let mu12 = SubsetFn::mu(3, s(3, &[1, 2])).unwrap();
        assert_eq!(mu12.support(), vec![s(3, &[1, 2]), s(3, &[1, 2, 3])]);
        assert_eq!(SubsetFn::one(3).unwrap().support().len(), 8);
        assert_eq!(
            SubsetFn::delta(3, s(3, &[2])).unwrap().support(),
            vec![s(3, &[2])]
        );
        let x2 = SubsetFn::basis(BasisKind::Coordinate(2), 3).unwrap();
        assert!(x2.support_iter().all(|a| a.contains(2)));
        assert_eq!(x2.support_size(), 4);
    }

    #[test]
    fn size_errors() {
        assert!(matches!(SubsetFn::zero(0), Err(Error::GroundSetSize { .. })));
        assert!(matches!(SubsetFn::zero(26), Err(Error::GroundSetSize { .. })));
        assert!(SubsetFn::zero(25).is_ok());
        assert!(matches!(
            SubsetFn::coordinate(3, 4),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert!(SubsetFn::delta(2, s(3, &[3])).is_err());
    }

    #[test]
    fn mobius_of_delta_is_mu() {
        for m in 1..=6 {
            for a in Subset::all(m) {
                let d = SubsetFn::delta(m, a).unwrap();
                let mu = SubsetFn::mu(m, a).unwrap();
                assert_eq!(d.mobius(), mu);
                assert_eq!(mu.mobius(), d);
            }
            let z = SubsetFn::zero(m).unwrap();
            assert_eq!(z.mobius(), z);
        }
    }

    #[test]
    fn exhaustive_involution_small() {
        for m in 1..=4 {
            for bits in 0..(1u64 << (1 << m)) {
                let f = SubsetFn::from_words(m, vec![bits]).unwrap();
                assert_eq!(f.mobius(), naive_mobius(&f));
                assert_eq!(f.mobius().mobius(), f);
            }
        }
    }

    #[test]
    fn change_of_basis_is_involution() {
        // Column a of the matrix is M(delta(a)) = mu(a); squaring it over GF(2)
        // must give the identity.
        let m = 4;
        let n = 1 << m;
        let col = |a: usize| SubsetFn::mu(m, Subset::from_mask(a as u32)).unwrap();
        for a in 0..n {
            for c in 0..n {
                let mut acc = false;
                for b in 0..n {
                    acc ^= col(b).get(Subset::from_mask(c as u32)) && col(a).get(Subset::from_mask(b as u32));
                }
                assert_eq!(acc, a == c);
            }
        }
    }

    #[test]
    fn niceness_examples() {
        let f = SubsetFn::from_support(2, [Subset::EMPTY, s(2, &[1]), s(2, &[2])]).unwrap();
        assert!(f.is_nice());
        let g = SubsetFn::delta(2, s(2, &[1, 2])).unwrap();
        assert!(!g.is_nice());
        match g.check_nice() {
            Err(Error::NotNice { superset, subset }) => {
                assert!(subset.is_subset_of(superset));
                assert!(g.get(superset) && !g.get(subset));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(SubsetFn::one(3).unwrap().is_nice());
        assert!(!SubsetFn::zero(3).unwrap().is_nice());
        assert_eq!(SubsetFn::zero(3).unwrap().check_nice(), Err(Error::EmptySupport));
    }

    #[test]
    fn niceness_matches_brute_force() {
        for m in 1..=3 {
            for bits in 0..(1u64 << (1 << m)) {
                let f = SubsetFn::from_words(m, vec![bits]).unwrap();
                let brute = f.get(Subset::EMPTY)
                    && f.support_iter().all(|a| a.subsets().all(|b| f.get(b)));
                assert_eq!(f.is_nice(), brute, "{f:?}");
            }
        }
        // Cross-word closure at m = 7.
        let mut f = SubsetFn::from_fn(7, |a| a.len() <= 1).unwrap();
        assert!(f.is_nice());
        f.set(Subset::from_elements(7, &[7, 1]).unwrap(), true);
        assert!(f.is_nice());
        f.set(Subset::from_elements(7, &[7, 1, 2]).unwrap(), true);
        assert!(!f.is_nice());
    }

    proptest! {
        #[test]
        fn mobius_is_linear(f in arb_fn(10), seed in any::<u64>()) {
            let m = f.ground_set();
            let g = SubsetFn::from_fn(m, |a| (a.index() as u64).wrapping_mul(seed) >> 63 == 1).unwrap();
            prop_assert_eq!((&f + &g).mobius(), &f.mobius() + &g.mobius());
        }

        #[test]
        fn mobius_matches_naive(f in arb_fn(8)) {
            prop_assert_eq!(f.mobius(), naive_mobius(&f));
        }

        #[test]
        fn algebra_laws(f in arb_fn(9)) {
            prop_assert!((&f + &f).is_zero());
            prop_assert_eq!(&f * &f, f.clone());
            if f.get(Subset::EMPTY) {
                prop_assert!(f.mobius().get(Subset::EMPTY));
            }
        }
    }
}
