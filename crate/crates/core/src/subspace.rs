//! Relativization: gamma-structure induced on a subset of the ground set.
//!
//! A subspace carries no operation table of its own. Its designated
//! gamma-open family is {carrier ∩ O : O gamma-open in the parent} and its
//! gamma-closure of B is carrier ∩ cl_gamma(B) computed in the root context.
//! Nested subviews reduce to root-level formulas because carriers nest.

use crate::error::SubspaceError;
use crate::gamma::GammaContext;
use crate::set::{canonicalize_family, Point, PointSet};

/// Common access to the gamma-structure of a full context or a subspace.
pub trait GammaView: Sync {
    fn root(&self) -> &GammaContext;

    /// The view's ground set, in root indices.
    fn carrier(&self) -> PointSet;

    /// The view's gamma-open family, canonical order.
    fn family(&self) -> &[PointSet];

    /// gamma-closure within the view; `b` must be a subset of the carrier.
    fn closure_of(&self, b: PointSet) -> PointSet;

    /// Whether `u` (a subset of the carrier) is a gamma-nbd of `x` in the view.
    fn is_nbd(&self, u: PointSet, x: Point) -> bool;
}

impl GammaView for GammaContext {
    fn root(&self) -> &GammaContext {
        self
    }

    fn carrier(&self) -> PointSet {
        self.space().full()
    }

    fn family(&self) -> &[PointSet] {
        self.gamma_opens()
    }

    fn closure_of(&self, b: PointSet) -> PointSet {
        self.cl_gamma(b)
    }

    fn is_nbd(&self, u: PointSet, x: Point) -> bool {
        self.is_gamma_nbd(u, x)
    }
}

/// A relativized view. The family is given directly rather than induced by
/// an operation table, so nbd-ness uses the containment reading: `u` is a
/// nbd of `x` iff some relative gamma-open B has x ∈ B ⊆ u.
#[derive(Clone, Debug)]
pub struct Subspace<'a> {
    root: &'a GammaContext,
    carrier: PointSet,
    family: Vec<PointSet>,
}

impl<'a> Subspace<'a> {
    pub fn carrier(&self) -> PointSet {
        self.carrier
    }
}

impl GammaView for Subspace<'_> {
    fn root(&self) -> &GammaContext {
        self.root
    }

    fn carrier(&self) -> PointSet {
        self.carrier
    }

    fn family(&self) -> &[PointSet] {
        &self.family
    }

    fn closure_of(&self, b: PointSet) -> PointSet {
        debug_assert!(b.is_subset(self.carrier));
        self.root.cl_gamma(b).intersect(self.carrier)
    }

    fn is_nbd(&self, u: PointSet, x: Point) -> bool {
        self.family.iter().any(|&b| b.contains(x) && b.is_subset(u))
    }
}

/// The subspace of `ctx` on the nonempty carrier `a`.
pub fn relativize(ctx: &GammaContext, a: PointSet) -> Result<Subspace<'_>, SubspaceError> {
    subview(ctx, a)
}

/// Restricts any view to a nonempty sub-carrier. Because relative families
/// and closures are both root-derived, a subview of a subview equals the
/// root subview on the same carrier.
pub fn subview<'a, V: GammaView + ?Sized>(
    view: &'a V,
    b: PointSet,
) -> Result<Subspace<'a>, SubspaceError> {
    if b.is_empty() {
        return Err(SubspaceError::EmptySubspace);
    }
    if !b.is_subset(view.carrier()) {
        return Err(SubspaceError::CarrierOutOfView);
    }
    let mut family: Vec<PointSet> = view.family().iter().map(|&o| o.intersect(b)).collect();
    canonicalize_family(&mut family);
    Ok(Subspace {
        root: view.root(),
        carrier: b,
        family,
    })
}
