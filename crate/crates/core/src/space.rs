//! Finite topological spaces: validation, classical operators, classical
//! separation properties, and enumeration of all labeled topologies.

use std::collections::HashSet;

use crate::error::SpaceError;
use crate::set::{canonicalize_family, Point, PointSet, MAX_POINTS};

const DEFAULT_LABELS: [&str; MAX_POINTS] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
];

/// A topological space on an index-labeled ground set of at most 16 points.
///
/// The open family is kept in canonical order (cardinality, then mask) with
/// no duplicates; the closed family is precomputed since every property
/// checker quantifies over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<PointSet>,
    closeds: Vec<PointSet>,
}

impl FiniteSpace {
    /// Validates the topology axioms and canonicalizes the open family.
    pub fn new(labels: Vec<String>, mut opens: Vec<PointSet>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n == 0 {
            return Err(SpaceError::NoPoints);
        }
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        let full = PointSet::full(n);
        for s in &opens {
            if !s.is_subset(full) {
                let stray = s.minus(full).iter().next().unwrap();
                return Err(SpaceError::SetOutOfSpace(stray as usize));
            }
        }
        canonicalize_family(&mut opens);
        let space = FiniteSpace {
            labels,
            opens,
            closeds: Vec::new(),
        };
        if !space.opens.contains(&PointSet::EMPTY) || !space.opens.contains(&full) {
            return Err(SpaceError::MissingEmptyOrFull);
        }
        let members: HashSet<u32> = space.opens.iter().map(|s| s.mask()).collect();
        for (i, &u) in space.opens.iter().enumerate() {
            for &v in &space.opens[i + 1..] {
                if !members.contains(&u.union(v).mask()) {
                    return Err(SpaceError::NotUnionClosed(space.fmt_set(u), space.fmt_set(v)));
                }
                if !members.contains(&u.intersect(v).mask()) {
                    return Err(SpaceError::NotIntersectionClosed(
                        space.fmt_set(u),
                        space.fmt_set(v),
                    ));
                }
            }
        }
        let mut closeds: Vec<PointSet> = space
            .opens
            .iter()
            .map(|s| s.complement_in(full))
            .collect();
        canonicalize_family(&mut closeds);
        Ok(FiniteSpace { closeds, ..space })
    }

    /// Builds a space with labels `a`, `b`, `c`, ... for tests and enumeration.
    pub fn with_default_labels(n: usize, opens: Vec<PointSet>) -> Result<Self, SpaceError> {
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        let labels = DEFAULT_LABELS[..n].iter().map(|s| s.to_string()).collect();
        FiniteSpace::new(labels, opens)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_of(&self, p: Point) -> &str {
        &self.labels[p as usize]
    }

    pub fn point_of_label(&self, label: &str) -> Option<Point> {
        self.labels.iter().position(|l| l == label).map(|i| i as Point)
    }

    /// Open family in canonical order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Closed family in canonical order.
    pub fn closeds(&self) -> &[PointSet] {
        &self.closeds
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search_by_key(&s.canon_key(), |o| o.canon_key()).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.closeds.binary_search_by_key(&s.canon_key(), |o| o.canon_key()).is_ok()
    }

    /// Index of `s` in the canonical open family.
    pub fn open_index(&self, s: PointSet) -> Option<usize> {
        self.opens.binary_search_by_key(&s.canon_key(), |o| o.canon_key()).ok()
    }

    /// All subsets of the ground set, in ascending mask order.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> {
        (0..(1u32 << self.n())).map(PointSet::from_mask)
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        let mut out = self.full();
        for &c in &self.closeds {
            if a.is_subset(c) {
                out = out.intersect(c);
            }
        }
        out
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for &o in &self.opens {
            if o.is_subset(a) {
                out = out.union(o);
            }
        }
        out
    }

    /// Renders a set with display labels, e.g. `{a,c}`.
    pub fn fmt_set(&self, s: PointSet) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for p in s.iter() {
            if !first {
                out.push(',');
            }
            match self.labels.get(p as usize) {
                Some(l) => out.push_str(l),
                None => out.push_str(&format!("#{p}")),
            }
            first = false;
        }
        out.push('}');
        out
    }

    /// Distinct points are separated by disjoint open sets.
    pub fn is_t2(&self) -> bool {
        let pts: Vec<Point> = self.full().iter().collect();
        for &x in &pts {
            for &y in &pts {
                if x >= y {
                    continue;
                }
                let ok = self.opens.iter().any(|&u| {
                    u.contains(x)
                        && self
                            .opens
                            .iter()
                            .any(|&v| v.contains(y) && u.is_disjoint(v))
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Every point outside a closed set is separated from it by disjoint opens.
    pub fn is_regular_space(&self) -> bool {
        for &c in &self.closeds {
            for x in self.full().minus(c).iter() {
                let ok = self.opens.iter().any(|&u| {
                    u.contains(x)
                        && self
                            .opens
                            .iter()
                            .any(|&v| c.is_subset(v) && u.is_disjoint(v))
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Disjoint closed sets are separated by disjoint open sets.
    pub fn is_normal_space(&self) -> bool {
        for &a in &self.closeds {
            for &b in &self.closeds {
                if !a.is_disjoint(b) {
                    continue;
                }
                let ok = self.opens.iter().any(|&u| {
                    a.is_subset(u)
                        && self
                            .opens
                            .iter()
                            .any(|&v| b.is_subset(v) && u.is_disjoint(v))
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Sort key for the canonical ordering of topologies:
    /// open-family size, then the mask sequence lexicographically.
    pub fn canon_key(&self) -> (usize, Vec<u32>) {
        (self.opens.len(), self.opens.iter().map(|s| s.mask()).collect())
    }
}

/// A family of subsets encoded as a bitset over subset masks: bit `m` is set
/// iff the subset with mask `m` belongs to the family. Valid for n <= 4.
fn family_bits_closed(bits: u32, n: usize) -> bool {
    let top = 1u32 << n;
    for mi in 0..top {
        if bits >> mi & 1 == 0 {
            continue;
        }
        for mj in mi + 1..top {
            if bits >> mj & 1 == 0 {
                continue;
            }
            if bits >> (mi | mj) & 1 == 0 || bits >> (mi & mj) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

fn close_family_bits(mut bits: u32, n: usize) -> u32 {
    let top = 1u32 << n;
    loop {
        let mut next = bits;
        for mi in 0..top {
            if bits >> mi & 1 == 0 {
                continue;
            }
            for mj in mi + 1..top {
                if bits >> mj & 1 == 0 {
                    continue;
                }
                next |= 1 << (mi | mj);
                next |= 1 << (mi & mj);
            }
        }
        if next == bits {
            return bits;
        }
        bits = next;
    }
}

fn family_bits_to_space(bits: u32, n: usize) -> FiniteSpace {
    let opens = (0..1u32 << n)
        .filter(|m| bits >> m & 1 == 1)
        .map(PointSet::from_mask)
        .collect();
    FiniteSpace::with_default_labels(n, opens).expect("enumerated family is a topology")
}

fn check_enumeration_size(n: usize) -> Result<(), SpaceError> {
    if n == 0 || n > 4 {
        return Err(SpaceError::SizeTooLarge(n));
    }
    Ok(())
}

/// Every labeled topology on `n` points, canonically ordered, each exactly once.
///
/// Production strategy: close every generator family of proper nonempty
/// subsets under union and intersection, then deduplicate.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>, SpaceError> {
    check_enumeration_size(n)?;
    let top = 1u32 << n;
    let proper = top - 2;
    let base = 1 | 1 << (top - 1);
    let mut seen = HashSet::new();
    for gen in 0u32..1 << proper {
        // Bit k of `gen` selects the proper nonempty subset with mask k+1.
        let bits = close_family_bits(base | gen << 1, n);
        seen.insert(bits);
    }
    let mut spaces: Vec<FiniteSpace> = seen
        .into_iter()
        .map(|bits| family_bits_to_space(bits, n))
        .collect();
    spaces.sort_by_key(|s| s.canon_key());
    Ok(spaces)
}

/// Independent enumeration strategy used to cross-check
/// [`enumerate_topologies`]: filter every family containing the empty set
/// and the whole space for closure under union and intersection.
pub fn enumerate_topologies_direct(n: usize) -> Result<Vec<FiniteSpace>, SpaceError> {
    check_enumeration_size(n)?;
    let top = 1u32 << n;
    let proper = top - 2;
    let base = 1 | 1 << (top - 1);
    let mut spaces = Vec::new();
    for gen in 0u32..1 << proper {
        let bits = base | gen << 1;
        if family_bits_closed(bits, n) {
            spaces.push(family_bits_to_space(bits, n));
        }
    }
    spaces.sort_by_key(|s| s.canon_key());
    Ok(spaces)
}
