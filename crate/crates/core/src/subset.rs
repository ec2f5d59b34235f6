//! Subsets of the ground set `[m] = {1, ..., m}`.
//!
//! A subset is stored as its canonical index: bit `i - 1` is set iff `i` is
//! an element. Elements are 1-based at every public boundary.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_GROUND_SET};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The subset with the given canonical index.
    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    /// The full ground set `[m]`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_GROUND_SET);
        Subset(((1u64 << m) - 1) as u32)
    }

    pub fn singleton(element: usize) -> Self {
        debug_assert!((1..=MAX_GROUND_SET).contains(&element));
        Subset(1 << (element - 1))
    }

    /// Builds a subset from 1-based elements, checking each lies in `[m]`.
    pub fn from_elements(m: usize, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &e in elements {
            if e == 0 || e > m || e > MAX_GROUND_SET {
                return Err(Error::ElementOutOfRange { element: e, m });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset(mask))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        element >= 1 && element <= 32 && self.0 & (1 << (element - 1)) != 0
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn insert(self, element: usize) -> Subset {
        self.union(Subset::singleton(element))
    }

    pub fn remove(self, element: usize) -> Subset {
        self.difference(Subset::singleton(element))
    }

    /// True iff every element lies in `[m]`.
    pub fn within(self, m: usize) -> bool {
        self.is_subset_of(Subset::full(m))
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bit + 1)
            }
        })
    }

    /// All subsets of `self`, in increasing canonical index.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// Every subset of `[m]` in canonical order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << m).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, e) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(d)?;
        Subset::from_elements(MAX_GROUND_SET, &elements).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_index() {
        let a = Subset::from_elements(3, &[1, 3]).unwrap();
        assert_eq!(a.index(), 0b101);
        assert_eq!(a.elements(), vec![1, 3]);
        assert_eq!(a.to_string(), "{1,3}");
        assert!(Subset::from_elements(3, &[4]).is_err());
        assert!(Subset::from_elements(3, &[0]).is_err());
    }

    #[test]
    fn submask_enumeration() {
        let a = Subset::from_mask(0b1011);
        let subs: Vec<_> = a.subsets().map(Subset::mask).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
