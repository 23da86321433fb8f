//! Operations gamma on a topology and the derived gamma-interior and
//! gamma-closure operators.
//!
//! An operation assigns to each open set V a superset gamma(V) of V. The
//! derived structures never look at gamma outside the open family.

use std::sync::{Arc, OnceLock};

use crate::error::OperationError;
use crate::set::{canonicalize_family, Point, PointSet};
use crate::space::FiniteSpace;

/// Named operation families; `Custom` covers explicit tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpTag {
    Identity,
    Closure,
    IntClosure,
    Pivot(Point),
    Custom,
}

/// Which gamma-closedness definition is in force.
///
/// `Jankovic`: the complement is gamma-open. `Kasahara`: cl_gamma(A) ⊆ A.
/// Both are first-class; callers pick per run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ClosedVariant {
    #[default]
    Jankovic,
    Kasahara,
}

/// Which direction the "open operation" definition quantifies.
///
/// `Ogata`: every open U around x admits a gamma-open B with x ∈ B ⊆ gamma(U).
/// `Printed`: same, but with gamma(U) ⊆ B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OpenDirection {
    #[default]
    Ogata,
    Printed,
}

/// A total table from the host topology's open family to supersets.
/// Entries are aligned with the space's canonical open order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaOperation {
    table: Vec<PointSet>,
    tag: OpTag,
}

impl GammaOperation {
    /// gamma(V) = V.
    pub fn identity(space: &FiniteSpace) -> Self {
        GammaOperation {
            table: space.opens().to_vec(),
            tag: OpTag::Identity,
        }
    }

    /// gamma(V) = cl(V).
    pub fn closure_op(space: &FiniteSpace) -> Self {
        GammaOperation {
            table: space.opens().iter().map(|&v| space.closure(v)).collect(),
            tag: OpTag::Closure,
        }
    }

    /// gamma(V) = int(cl(V)).
    pub fn int_closure_op(space: &FiniteSpace) -> Self {
        GammaOperation {
            table: space
                .opens()
                .iter()
                .map(|&v| space.interior(space.closure(v)))
                .collect(),
            tag: OpTag::IntClosure,
        }
    }

    /// gamma(V) = V when the pivot lies in V, cl(V) otherwise.
    pub fn pivot(space: &FiniteSpace, p: Point) -> Result<Self, OperationError> {
        if (p as usize) >= space.n() {
            return Err(OperationError::PivotNotInSpace(format!("#{p}")));
        }
        let table = space
            .opens()
            .iter()
            .map(|&v| if v.contains(p) { v } else { space.closure(v) })
            .collect();
        Ok(GammaOperation {
            table,
            tag: OpTag::Pivot(p),
        })
    }

    /// Builds an operation from explicit (open, image) pairs. The pairs must
    /// cover every open set exactly once, stay inside the space, and be
    /// expansive.
    pub fn from_table(
        space: &FiniteSpace,
        entries: &[(PointSet, PointSet)],
    ) -> Result<Self, OperationError> {
        let want = space.opens().len();
        if entries.len() != want {
            return Err(OperationError::TableLength {
                got: entries.len(),
                want,
            });
        }
        let mut table: Vec<Option<PointSet>> = vec![None; want];
        for &(open, image) in entries {
            let idx = space
                .open_index(open)
                .ok_or_else(|| OperationError::EntryNotOpen(space.fmt_set(open)))?;
            if table[idx].is_some() {
                return Err(OperationError::DuplicateEntry(space.fmt_set(open)));
            }
            table[idx] = Some(image);
        }
        let table: Vec<PointSet> = table
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| OperationError::MissingEntry(space.fmt_set(space.opens()[i]))))
            .collect::<Result<_, _>>()?;
        let op = GammaOperation {
            table,
            tag: OpTag::Custom,
        };
        op.validate(space)?;
        Ok(op)
    }

    /// Wraps a table already aligned with the canonical open order.
    /// Used by pool enumeration, which constructs expansive tables by design.
    pub(crate) fn from_aligned(table: Vec<PointSet>) -> Self {
        GammaOperation {
            table,
            tag: OpTag::Custom,
        }
    }

    pub fn validate(&self, space: &FiniteSpace) -> Result<(), OperationError> {
        if self.table.len() != space.opens().len() {
            return Err(OperationError::TableLength {
                got: self.table.len(),
                want: space.opens().len(),
            });
        }
        let full = space.full();
        for (&v, &image) in space.opens().iter().zip(&self.table) {
            if !image.is_subset(full) {
                return Err(OperationError::ValueOutOfSpace(space.fmt_set(image)));
            }
            if !v.is_subset(image) {
                return Err(OperationError::NotExpansive {
                    open: space.fmt_set(v),
                    image: space.fmt_set(image),
                });
            }
        }
        Ok(())
    }

    /// Value at the open set with the given canonical index.
    pub fn value(&self, open_index: usize) -> PointSet {
        self.table[open_index]
    }

    pub fn table(&self) -> &[PointSet] {
        &self.table
    }

    pub fn tag(&self) -> OpTag {
        self.tag
    }
}

/// Classification of an operation relative to its host topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperationTraits {
    /// U ⊆ V implies gamma(U) ⊆ gamma(V), over all open pairs.
    pub monotone: bool,
    /// Any two open neighborhoods U, V of a point admit an open W around it
    /// with gamma(W) ⊆ gamma(U) ∩ gamma(V).
    pub regular: bool,
    /// Every open U around x admits a gamma-open B with x ∈ B ⊆ gamma(U).
    pub open_ogata: bool,
    /// Every open U around x admits a gamma-open B with x ∈ B and gamma(U) ⊆ B.
    pub open_as_printed: bool,
    /// gamma(V) is gamma-open for every open V.
    pub gamma_open_op: bool,
}

impl OperationTraits {
    pub fn open_in(&self, dir: OpenDirection) -> bool {
        match dir {
            OpenDirection::Ogata => self.open_ogata,
            OpenDirection::Printed => self.open_as_printed,
        }
    }
}

struct Memo {
    /// int_gamma of every subset, indexed by mask.
    int_table: Vec<PointSet>,
    /// cl_gamma of every subset, indexed by mask; computed from its own
    /// definition, independently of `int_table`.
    cl_table: Vec<PointSet>,
    /// All gamma-open subsets in canonical order.
    gamma_opens: Vec<PointSet>,
    /// Whether every subspace carrier is gamma0-compact as a subspace;
    /// indexed by carrier mask (entry 0 unused). Filled together with the
    /// rest of the memo; cheap because compactness is decided per carrier.
    subspace_compact: Vec<bool>,
}

/// A space paired with an operation. Derived operators are memoized on
/// first use; after that the context is shareable read-only across workers.
pub struct GammaContext {
    space: Arc<FiniteSpace>,
    gamma: GammaOperation,
    memo: OnceLock<Memo>,
    traits_memo: OnceLock<OperationTraits>,
}

impl Clone for GammaContext {
    fn clone(&self) -> Self {
        GammaContext {
            space: Arc::clone(&self.space),
            gamma: self.gamma.clone(),
            memo: OnceLock::new(),
            traits_memo: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for GammaContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GammaContext")
            .field("space", &self.space)
            .field("gamma", &self.gamma)
            .finish_non_exhaustive()
    }
}

impl PartialEq for GammaContext {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.gamma == other.gamma
    }
}

impl Eq for GammaContext {}

impl GammaContext {
    pub fn new(space: Arc<FiniteSpace>, gamma: GammaOperation) -> Result<Self, OperationError> {
        gamma.validate(&space)?;
        Ok(GammaContext {
            space,
            gamma,
            memo: OnceLock::new(),
            traits_memo: OnceLock::new(),
        })
    }

    pub fn of(space: FiniteSpace, gamma: GammaOperation) -> Result<Self, OperationError> {
        GammaContext::new(Arc::new(space), gamma)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn space_arc(&self) -> Arc<FiniteSpace> {
        Arc::clone(&self.space)
    }

    pub fn gamma(&self) -> &GammaOperation {
        &self.gamma
    }

    fn memo(&self) -> &Memo {
        self.memo.get_or_init(|| {
            let n = self.space.n();
            let total = 1usize << n;
            let int_table: Vec<PointSet> = (0..total)
                .map(|m| self.int_gamma_raw(PointSet::from_mask(m as u32)))
                .collect();
            let cl_table: Vec<PointSet> = (0..total)
                .map(|m| self.cl_gamma_raw(PointSet::from_mask(m as u32)))
                .collect();
            let mut gamma_opens: Vec<PointSet> = (0..total)
                .map(|m| PointSet::from_mask(m as u32))
                .filter(|&a| int_table[a.mask() as usize] == a)
                .collect();
            canonicalize_family(&mut gamma_opens);
            let subspace_compact = (0..total)
                .map(|m| {
                    let carrier = PointSet::from_mask(m as u32);
                    subspace_compact_raw(&gamma_opens, &cl_table, carrier)
                })
                .collect();
            Memo {
                int_table,
                cl_table,
                gamma_opens,
                subspace_compact,
            }
        })
    }

    /// Points of `a` having an open neighborhood N with gamma(N) ⊆ a.
    fn int_gamma_raw(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for (i, &n_set) in self.space.opens().iter().enumerate() {
            if self.gamma.value(i).is_subset(a) {
                out = out.union(n_set.intersect(a));
            }
        }
        out
    }

    /// Points x such that gamma(U) meets `a` for every open U containing x.
    fn cl_gamma_raw(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        'points: for x in self.space.full().iter() {
            for (i, &u) in self.space.opens().iter().enumerate() {
                if u.contains(x) && self.gamma.value(i).is_disjoint(a) {
                    continue 'points;
                }
            }
            out.insert(x);
        }
        out
    }

    pub fn int_gamma(&self, a: PointSet) -> PointSet {
        self.memo().int_table[a.mask() as usize]
    }

    pub fn cl_gamma(&self, a: PointSet) -> PointSet {
        self.memo().cl_table[a.mask() as usize]
    }

    pub fn is_gamma_open(&self, a: PointSet) -> bool {
        self.int_gamma(a) == a
    }

    /// All gamma-open subsets in canonical order.
    pub fn gamma_opens(&self) -> &[PointSet] {
        &self.memo().gamma_opens
    }

    pub fn is_gamma_closed(&self, a: PointSet, variant: ClosedVariant) -> bool {
        match variant {
            ClosedVariant::Jankovic => self.is_gamma_open(a.complement_in(self.space.full())),
            ClosedVariant::Kasahara => self.cl_gamma(a).is_subset(a),
        }
    }

    /// All gamma-closed subsets under the chosen variant, canonical order.
    pub fn gamma_closed_family(&self, variant: ClosedVariant) -> Vec<PointSet> {
        let mut closed: Vec<PointSet> = self
            .space
            .subsets()
            .filter(|&a| self.is_gamma_closed(a, variant))
            .collect();
        canonicalize_family(&mut closed);
        closed
    }

    /// Whether the two gamma-closedness variants agree on every subset.
    pub fn closed_variants_agree(&self) -> bool {
        self.space.subsets().all(|a| {
            self.is_gamma_closed(a, ClosedVariant::Jankovic)
                == self.is_gamma_closed(a, ClosedVariant::Kasahara)
        })
    }

    /// U is a gamma-nbd of x iff x ∈ int_gamma(U). This is the normative
    /// reading; see [`GammaContext::nbd_readings_agree`] for the probe
    /// against the containment reading.
    pub fn is_gamma_nbd(&self, u: PointSet, x: Point) -> bool {
        self.int_gamma(u).contains(x)
    }

    /// Whether "x ∈ int_gamma(U)" and "U contains a gamma-open set containing
    /// x" agree for every U and x. The two readings can genuinely differ;
    /// agreement is reported, never assumed.
    pub fn nbd_readings_agree(&self) -> bool {
        let opens = self.gamma_opens().to_vec();
        for u in self.space.subsets() {
            for x in self.space.full().iter() {
                let int_reading = self.is_gamma_nbd(u, x);
                let containment_reading =
                    opens.iter().any(|&b| b.contains(x) && b.is_subset(u));
                if int_reading != containment_reading {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the subspace on `carrier` is gamma0-compact. Decided at memo
    /// time for every carrier; see `subspace_compact_raw`.
    pub fn subspace_compact(&self, carrier: PointSet) -> bool {
        self.memo().subspace_compact[carrier.mask() as usize]
    }

    pub fn traits(&self) -> &OperationTraits {
        self.traits_memo.get_or_init(|| {
            let opens = self.space.opens();
            let values: Vec<PointSet> = (0..opens.len()).map(|i| self.gamma.value(i)).collect();

            let monotone = opens.iter().enumerate().all(|(i, &u)| {
                opens
                    .iter()
                    .enumerate()
                    .all(|(j, &v)| !u.is_subset(v) || values[i].is_subset(values[j]))
            });

            let points: Vec<Point> = self.space.full().iter().collect();
            let regular = points.iter().all(|&x| {
                let around: Vec<usize> = (0..opens.len())
                    .filter(|&i| opens[i].contains(x))
                    .collect();
                around.iter().all(|&i| {
                    around.iter().all(|&j| {
                        let cap = values[i].intersect(values[j]);
                        around.iter().any(|&k| values[k].is_subset(cap))
                    })
                })
            });

            let gamma_open_family = self.gamma_opens().to_vec();
            let open_ogata = points.iter().all(|&x| {
                (0..opens.len()).filter(|&i| opens[i].contains(x)).all(|i| {
                    gamma_open_family
                        .iter()
                        .any(|&b| b.contains(x) && b.is_subset(values[i]))
                })
            });
            let open_as_printed = points.iter().all(|&x| {
                (0..opens.len()).filter(|&i| opens[i].contains(x)).all(|i| {
                    gamma_open_family
                        .iter()
                        .any(|&b| b.contains(x) && values[i].is_subset(b))
                })
            });

            let gamma_open_op = values.iter().all(|&v| self.is_gamma_open(v));

            OperationTraits {
                monotone,
                regular,
                open_ogata,
                open_as_printed,
                gamma_open_op,
            }
        })
    }
}

/// Whether the subspace on `carrier` is gamma0-compact, from the relative
/// family {carrier ∩ O} and the relative closure B ↦ carrier ∩ cl_gamma(B).
///
/// A cover together with a failing subfamily-search exists iff some point t
/// of the carrier is avoided by the closures of a family that still covers:
/// the relative closure of a relative-open contains it (expansiveness holds
/// relatively), so the union of {G : t ∉ rel-cl(G)} can never reach t itself,
/// and checking whether that union covers the carrier is exact.
fn subspace_compact_raw(gamma_opens: &[PointSet], cl_table: &[PointSet], carrier: PointSet) -> bool {
    if carrier.is_empty() {
        return true;
    }
    let mut rel_family: Vec<PointSet> = gamma_opens.iter().map(|&o| o.intersect(carrier)).collect();
    canonicalize_family(&mut rel_family);
    let rel_cl = |b: PointSet| cl_table[b.mask() as usize].intersect(carrier);
    for t in carrier.iter() {
        let mut avoid = PointSet::EMPTY;
        for &g in &rel_family {
            if !rel_cl(g).contains(t) {
                avoid = avoid.union(g);
            }
        }
        if carrier.is_subset(avoid) {
            return false;
        }
    }
    true
}
