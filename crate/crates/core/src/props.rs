//! Gamma-separation and gamma-compactness properties of a context, with
//! witness extraction where reports need it.

use crate::gamma::{ClosedVariant, GammaContext};
use crate::set::{Point, PointSet};
use crate::subspace::{subview, GammaView};

/// What a gamma-open cover must cover: the whole space or just the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoverMode {
    #[default]
    X,
    A,
}

/// The gamma-open sets around one point, plus the general nbd predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaNbdSystem {
    pub point: Point,
    pub gamma_open_nbds: Vec<PointSet>,
}

impl GammaNbdSystem {
    /// U is a gamma-nbd of the point iff the point lies in int_gamma(U).
    pub fn is_gamma_nbd(&self, ctx: &GammaContext, u: PointSet) -> bool {
        ctx.is_gamma_nbd(u, self.point)
    }
}

pub fn gamma_nbd_system(ctx: &GammaContext, x: Point) -> GammaNbdSystem {
    let gamma_open_nbds = ctx
        .gamma_opens()
        .iter()
        .copied()
        .filter(|o| o.contains(x))
        .collect();
    GammaNbdSystem {
        point: x,
        gamma_open_nbds,
    }
}

/// First point pair (x, y) that no pair of open sets separates with disjoint
/// gamma-values, or None when the space is gamma-T2.
pub fn gamma_t2_failure(ctx: &GammaContext) -> Option<(Point, Point)> {
    let opens = ctx.space().opens();
    let values: Vec<PointSet> = (0..opens.len()).map(|i| ctx.gamma().value(i)).collect();
    let pts: Vec<Point> = ctx.space().full().iter().collect();
    for (i, &x) in pts.iter().enumerate() {
        for &y in &pts[i + 1..] {
            let separable = (0..opens.len()).any(|ui| {
                opens[ui].contains(x)
                    && (0..opens.len()).any(|vi| {
                        opens[vi].contains(y) && values[ui].is_disjoint(values[vi])
                    })
            });
            if !separable {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_gamma_t2(ctx: &GammaContext) -> bool {
    gamma_t2_failure(ctx).is_none()
}

/// First (x, A) with A gamma-closed, x outside A, and no disjoint gamma-open
/// pair U ∋ x, V ⊇ A; None when the space is gamma*-regular.
pub fn gamma_star_regular_failure(
    ctx: &GammaContext,
    variant: ClosedVariant,
) -> Option<(Point, PointSet)> {
    let family = ctx.gamma_opens();
    for a in ctx.gamma_closed_family(variant) {
        for x in ctx.space().full().minus(a).iter() {
            let separable = family.iter().any(|&u| {
                u.contains(x)
                    && family
                        .iter()
                        .any(|&v| a.is_subset(v) && u.is_disjoint(v))
            });
            if !separable {
                return Some((x, a));
            }
        }
    }
    None
}

pub fn is_gamma_star_regular(ctx: &GammaContext, variant: ClosedVariant) -> bool {
    gamma_star_regular_failure(ctx, variant).is_none()
}

/// First disjoint gamma-closed pair with no disjoint gamma-open separation;
/// None when the space is gamma-normal.
pub fn gamma_normal_failure(
    ctx: &GammaContext,
    variant: ClosedVariant,
) -> Option<(PointSet, PointSet)> {
    let family = ctx.gamma_opens();
    let closed = ctx.gamma_closed_family(variant);
    for &a in &closed {
        for &b in &closed {
            if !a.is_disjoint(b) {
                continue;
            }
            let separable = family.iter().any(|&u| {
                a.is_subset(u)
                    && family
                        .iter()
                        .any(|&v| b.is_subset(v) && u.is_disjoint(v))
            });
            if !separable {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_gamma_normal(ctx: &GammaContext, variant: ClosedVariant) -> bool {
    gamma_normal_failure(ctx, variant).is_none()
}

/// Every gamma-closed A inside a gamma-open U admits a gamma-open V with
/// A ⊆ V and cl_gamma(V) ⊆ U.
pub fn shrinkability(ctx: &GammaContext, variant: ClosedVariant) -> bool {
    let family = ctx.gamma_opens();
    ctx.gamma_closed_family(variant).iter().all(|&a| {
        family.iter().filter(|&&u| a.is_subset(u)).all(|&u| {
            family
                .iter()
                .any(|&v| a.is_subset(v) && ctx.cl_gamma(v).is_subset(u))
        })
    })
}

/// Separation of a point from a gamma-closed set by gamma-open sets with
/// disjoint gamma-closures.
pub fn star_regular_strengthened(ctx: &GammaContext, variant: ClosedVariant) -> bool {
    let family = ctx.gamma_opens();
    ctx.gamma_closed_family(variant).iter().all(|&a| {
        ctx.space().full().minus(a).iter().all(|x| {
            family.iter().any(|&u| {
                u.contains(x)
                    && family.iter().any(|&v| {
                        a.is_subset(v) && ctx.cl_gamma(u).is_disjoint(ctx.cl_gamma(v))
                    })
            })
        })
    })
}

/// Separation of disjoint gamma-closed pairs by gamma-open sets with
/// disjoint gamma-closures.
pub fn normal_strengthened(ctx: &GammaContext, variant: ClosedVariant) -> bool {
    let family = ctx.gamma_opens();
    let closed = ctx.gamma_closed_family(variant);
    closed.iter().all(|&a| {
        closed.iter().filter(|&&b| a.is_disjoint(b)).all(|&b| {
            family.iter().any(|&u| {
                a.is_subset(u)
                    && family.iter().any(|&v| {
                        b.is_subset(v) && ctx.cl_gamma(u).is_disjoint(ctx.cl_gamma(v))
                    })
            })
        })
    })
}

/// Families of at most this many sets get the literal quantification over
/// all subfamilies; larger families use the exact point-witness method.
const LITERAL_COVER_LIMIT: usize = 12;

/// Whether every cover of the required region by the view's gamma-open sets
/// admits a finite subfamily whose gamma-closures cover `target`.
///
/// With `CoverMode::X` covers must cover the whole carrier, with
/// `CoverMode::A` only the target. Since the closure-union of a subfamily is
/// monotone in the subfamily, a qualifying subfamily exists iff the whole
/// cover qualifies, so checking each cover once is the literal quantifier.
pub fn is_gamma0_compact<V: GammaView + ?Sized>(
    view: &V,
    target: PointSet,
    mode: CoverMode,
) -> bool {
    debug_assert!(target.is_subset(view.carrier()));
    let family = view.family();
    let need = match mode {
        CoverMode::X => view.carrier(),
        CoverMode::A => target,
    };
    let closures: Vec<PointSet> = family.iter().map(|&g| view.closure_of(g)).collect();
    if family.len() <= LITERAL_COVER_LIMIT {
        for bits in 0u32..1 << family.len() {
            let mut union = PointSet::EMPTY;
            let mut cl_union = PointSet::EMPTY;
            for (i, (&g, &c)) in family.iter().zip(&closures).enumerate() {
                if bits >> i & 1 == 1 {
                    union = union.union(g);
                    cl_union = cl_union.union(c);
                }
            }
            if need.is_subset(union) && !target.is_subset(cl_union) {
                return false;
            }
        }
        true
    } else {
        // A failing cover exists iff for some t in the target, the members
        // whose closures avoid t already cover the required region.
        for t in target.iter() {
            let mut avoid = PointSet::EMPTY;
            for (&g, &c) in family.iter().zip(&closures) {
                if !c.contains(t) {
                    avoid = avoid.union(g);
                }
            }
            if need.is_subset(avoid) {
                return false;
            }
        }
        true
    }
}

/// Local compactness of a whole context through the per-carrier
/// compactness memo; agrees with `is_gamma_locally_compact` on root views
/// and skips building subspace values.
pub fn is_root_locally_compact(ctx: &GammaContext) -> bool {
    ctx.space().full().iter().all(|x| {
        ctx.space()
            .subsets()
            .any(|u| ctx.is_gamma_nbd(u, x) && ctx.subspace_compact(u))
    })
}

/// Outcome of the gamma-local-compactness search: per-point witness
/// gamma-nbds when compact, or the first failing point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCompactness {
    pub compact: bool,
    pub witnesses: Vec<(Point, PointSet)>,
    pub failing_point: Option<Point>,
}

/// Every point needs a gamma-nbd that is gamma0-compact as a subspace.
/// Witnesses are the canonically first qualifying nbd per point.
pub fn is_gamma_locally_compact<V: GammaView + ?Sized>(
    view: &V,
    mode: CoverMode,
) -> LocalCompactness {
    let carrier = view.carrier();
    let mut candidates: Vec<PointSet> = PointSet::subsets_of(carrier).collect();
    candidates.sort_by_key(|s| s.canon_key());
    let mut witnesses = Vec::new();
    for x in carrier.iter() {
        let mut found = None;
        for &u in &candidates {
            if !u.contains(x) || !view.is_nbd(u, x) {
                continue;
            }
            let sub = subview(view, u).expect("nbd of a point is nonempty");
            if is_gamma0_compact(&sub, u, mode) {
                found = Some(u);
                break;
            }
        }
        match found {
            Some(u) => witnesses.push((x, u)),
            None => {
                return LocalCompactness {
                    compact: false,
                    witnesses,
                    failing_point: Some(x),
                }
            }
        }
    }
    LocalCompactness {
        compact: true,
        witnesses,
        failing_point: None,
    }
}
