//! Bit-mask subsets of a small finite ground set.

use std::fmt;
use std::ops::{BitAnd, BitOr};

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// Index of a point in the ground set (0-based).
pub type Point = u8;

/// A subset of the ground set, stored as a bit mask over point indices.
///
/// Only bits below the ambient space's point count are meaningful; all
/// constructors in this crate keep the invariant that no higher bit is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The whole ground set of an `n`-point space.
    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= MAX_POINTS);
        PointSet(if n == 0 { 0 } else { (1u32 << n) - 1 })
    }

    pub fn from_mask(mask: u32) -> PointSet {
        PointSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn singleton(p: Point) -> PointSet {
        PointSet(1 << p)
    }

    pub fn contains(self, p: Point) -> bool {
        self.0 & (1 << p) != 0
    }

    pub fn insert(&mut self, p: Point) {
        self.0 |= 1 << p;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersect(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    /// Set difference `self - other`.
    pub fn minus(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement inside the given ground set.
    pub fn complement_in(self, full: PointSet) -> PointSet {
        PointSet(full.0 & !self.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Points of the set in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = Point> {
        let mask = self.0;
        (0..MAX_POINTS as u8).filter(move |p| mask & (1 << p) != 0)
    }

    /// All subsets of `of`, in ascending mask order.
    pub fn subsets_of(of: PointSet) -> impl Iterator<Item = PointSet> {
        // Enumerates submasks by counting through the full range and
        // keeping only masks inside `of`; `of` is at most 16 bits wide.
        (0..=of.0).filter(move |m| m & !of.0 == 0).map(PointSet)
    }

    /// Sort key giving the canonical family order: cardinality, then mask.
    pub fn canon_key(self) -> (u32, u32) {
        (self.0.count_ones(), self.0)
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersect(rhs)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Sorts a family of sets into canonical order (cardinality, then mask)
/// and removes duplicates.
pub fn canonicalize_family(sets: &mut Vec<PointSet>) {
    sets.sort_by_key(|s| s.canon_key());
    sets.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_and_complement() {
        let full = PointSet::full(3);
        let a = PointSet::from_mask(0b101);
        assert!(a.is_subset(full));
        assert_eq!(a.complement_in(full), PointSet::from_mask(0b010));
        assert_eq!(a.len(), 2);
        assert!(a.contains(0) && !a.contains(1) && a.contains(2));
    }

    #[test]
    fn subsets_enumeration_is_complete() {
        let of = PointSet::from_mask(0b110);
        let subs: Vec<_> = PointSet::subsets_of(of).collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|s| s.is_subset(of)));
    }

    #[test]
    fn canonical_order_is_cardinality_then_mask() {
        let mut fam = vec![
            PointSet::from_mask(0b111),
            PointSet::from_mask(0b010),
            PointSet::from_mask(0b101),
            PointSet::from_mask(0b011),
            PointSet::EMPTY,
            PointSet::from_mask(0b011),
        ];
        canonicalize_family(&mut fam);
        let masks: Vec<u32> = fam.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b000, 0b010, 0b011, 0b101, 0b111]);
    }
}
