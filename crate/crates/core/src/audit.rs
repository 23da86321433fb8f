//! Statement registry and exhaustive audit harness: every registered
//! statement is run as a hypothesis/conclusion predicate over enumerated
//! instances, and violations are reported as re-checkable instances.

use crate::error::AuditError;
use crate::gamma::{ClosedVariant, GammaContext, GammaOperation, OpenDirection};
use crate::maps::{enumerate_maps, MapFilter, SpaceMap};
use crate::pool::{pool_operations, PoolSpec};
use crate::props::{
    is_gamma0_compact, is_gamma_locally_compact, is_gamma_normal, is_gamma_star_regular,
    is_gamma_t2, is_root_locally_compact, normal_strengthened, shrinkability,
    star_regular_strengthened, CoverMode,
};
use crate::set::{Point, PointSet};
use crate::space::{enumerate_topologies, FiniteSpace};
use crate::subspace::subview;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Identifiers of the audited statements. The registry holds one entry per
/// id, in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    TA,
    L32,
    T413,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::TA,
        TheoremId::L32,
        TheoremId::T413,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::T12 => "T12",
            TheoremId::T13 => "T13",
            TheoremId::T14 => "T14",
            TheoremId::TA => "TA",
            TheoremId::L32 => "L32",
            TheoremId::T413 => "T413",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = AuditError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s.trim())
            .ok_or_else(|| AuditError::UnknownTheorem(s.trim().to_owned()))
    }
}

/// What one instance of a statement consists of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    /// A decorated space.
    Context,
    /// A decorated space plus an ordered pair of subsets.
    ContextPair,
    /// A point function between two decorated spaces.
    Map,
}

/// Registry entry: the statement in plain words plus which definitional
/// flags the audit fans out over.
#[derive(Clone, Copy, Debug)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub kind: InstanceKind,
    pub statement: &'static str,
    pub closed_axis: bool,
    pub open_axis: bool,
}

static REGISTRY: [TheoremSpec; 17] = [
    TheoremSpec {
        id: TheoremId::T1,
        kind: InstanceKind::Map,
        statement: "continuous injective images of compact subspaces are compact when the \
                    codomain operation is open",
        closed_axis: false,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T2,
        kind: InstanceKind::Map,
        statement: "a continuous injection from a compact space into a T2 space is a closed \
                    map when the domain operation is regular and open and the codomain \
                    operation is open",
        closed_axis: true,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T3,
        kind: InstanceKind::Map,
        statement: "a continuous bijection from a compact space onto a T2 space is a \
                    homeomorphism when the domain operation is regular and open and the \
                    codomain operation is open",
        closed_axis: true,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T4,
        kind: InstanceKind::ContextPair,
        statement: "if the closures of two compact sets cover the space and the operation is \
                    regular and open, the space is compact",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T5,
        kind: InstanceKind::Context,
        statement: "star-regularity is equivalent to point/closed-set separation by sets with \
                    disjoint closures",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T6,
        kind: InstanceKind::Context,
        statement: "every compact space is locally compact",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T7,
        kind: InstanceKind::Context,
        statement: "closed subspaces of locally compact spaces are locally compact when the \
                    operation is regular",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T8,
        kind: InstanceKind::Context,
        statement: "in a locally compact T2 space with a regular open operation, every \
                    neighborhood of a point contains a compact neighborhood of it",
        closed_axis: true,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T9,
        kind: InstanceKind::Context,
        statement: "in a locally compact space every point is an interior point of some \
                    compact subspace",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T10,
        kind: InstanceKind::Context,
        statement: "a T2 space where every point is an interior point of some compact \
                    subspace is locally compact when the operation is regular and open",
        closed_axis: true,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T11,
        kind: InstanceKind::Context,
        statement: "a T2 space with a regular open operation is locally compact exactly when \
                    every point is an interior point of some compact subspace",
        closed_axis: true,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T12,
        kind: InstanceKind::Map,
        statement: "open continuous surjections carry local compactness onto the codomain \
                    when the codomain operation is open",
        closed_axis: false,
        open_axis: true,
    },
    TheoremSpec {
        id: TheoremId::T13,
        kind: InstanceKind::Context,
        statement: "closed subspaces of locally compact spaces are locally compact when the \
                    operation is regular (restatement)",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T14,
        kind: InstanceKind::Context,
        statement: "normality is equivalent to separating disjoint closed pairs by sets with \
                    disjoint closures",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::TA,
        kind: InstanceKind::Context,
        statement: "normality is equivalent to shrinking: every closed set inside an open set \
                    admits an intermediate set with its closure still inside",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::L32,
        kind: InstanceKind::ContextPair,
        statement: "for an open set A, intersecting A with the closure of B stays inside the \
                    closure of the intersection",
        closed_axis: false,
        open_axis: false,
    },
    TheoremSpec {
        id: TheoremId::T413,
        kind: InstanceKind::Map,
        statement: "continuous maps send the closure of a set into the closure of its image",
        closed_axis: false,
        open_axis: false,
    },
];

pub fn theorem_registry() -> &'static [TheoremSpec] {
    &REGISTRY
}

pub fn spec_of(id: TheoremId) -> &'static TheoremSpec {
    REGISTRY
        .iter()
        .find(|spec| spec.id == id)
        .expect("every id is registered")
}

/// The definitional flags in force for one verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct VariantSet {
    pub closed: ClosedVariant,
    pub open_dir: OpenDirection,
    pub cover: CoverMode,
}

/// A reported violation, carrying everything needed to re-check it.
#[derive(Clone, Debug, PartialEq)]
pub enum FailureInstance {
    Context {
        space: FiniteSpace,
        gamma: GammaOperation,
    },
    ContextPair {
        space: FiniteSpace,
        gamma: GammaOperation,
        a: PointSet,
        b: PointSet,
    },
    Map {
        domain_space: FiniteSpace,
        domain_gamma: GammaOperation,
        codomain_space: FiniteSpace,
        codomain_gamma: GammaOperation,
        table: Vec<Point>,
    },
}

/// Violation lists are truncated to this many canonical-first instances;
/// `failure_total` keeps the true count.
pub const FAILURE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct AuditVerdict {
    pub theorem: TheoremId,
    pub variants: VariantSet,
    pub scanned: u64,
    pub hyp_held: u64,
    pub failures: Vec<FailureInstance>,
    pub failure_total: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct AuditConfig {
    pub n: usize,
    pub variants: VariantSet,
    pub pool: PoolSpec,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            n: 2,
            variants: VariantSet::default(),
            pool: PoolSpec::Exhaustive,
            seed: 1729,
        }
    }
}

pub fn max_size(kind: InstanceKind) -> usize {
    match kind {
        InstanceKind::Context | InstanceKind::ContextPair => 4,
        InstanceKind::Map => 3,
    }
}

/// The pool actually swept, after cost downgrades: exhaustive context
/// sweeps stop at n=3 (n=4 samples 10000 operations per topology), and
/// exhaustive map sweeps stop at n=2 (n=3 samples 10 per topology).
pub fn effective_pool(
    kind: InstanceKind,
    n: usize,
    requested: PoolSpec,
) -> Result<PoolSpec, AuditError> {
    let max = max_size(kind);
    if n == 0 || n > max {
        return Err(AuditError::SizeTooLarge {
            theorem: String::new(),
            n,
            max,
        });
    }
    let exhaustion_limit = match kind {
        InstanceKind::Context | InstanceKind::ContextPair => 3,
        InstanceKind::Map => 2,
    };
    let fallback = match kind {
        InstanceKind::Context | InstanceKind::ContextPair => PoolSpec::Sample { k: 10_000 },
        InstanceKind::Map => PoolSpec::Sample { k: 10 },
    };
    Ok(match requested {
        PoolSpec::Exhaustive if n > exhaustion_limit => fallback,
        other => other,
    })
}

/// Variant combinations a theorem is audited under: the product of its
/// axes, with non-axis flags taken from the configured set.
pub fn variant_combos(spec: &TheoremSpec, base: VariantSet) -> Vec<VariantSet> {
    let closed_choices: &[ClosedVariant] = if spec.closed_axis {
        &[ClosedVariant::Jankovic, ClosedVariant::Kasahara]
    } else {
        std::slice::from_ref(&base.closed)
    };
    let open_choices: &[OpenDirection] = if spec.open_axis {
        &[OpenDirection::Ogata, OpenDirection::Printed]
    } else {
        std::slice::from_ref(&base.open_dir)
    };
    let mut combos = Vec::new();
    for &closed in closed_choices {
        for &open_dir in open_choices {
            combos.push(VariantSet {
                closed,
                open_dir,
                cover: base.cover,
            });
        }
    }
    combos
}

/// Audits one theorem under every variant combination of its axes.
pub fn run_audit(id: TheoremId, config: &AuditConfig) -> Result<Vec<AuditVerdict>, AuditError> {
    let spec = spec_of(id);
    variant_combos(spec, config.variants)
        .into_iter()
        .map(|variants| {
            run_audit_single(
                id,
                &AuditConfig {
                    variants,
                    ..*config
                },
            )
        })
        .collect()
}

/// Audits one theorem under exactly the configured variants.
pub fn run_audit_single(id: TheoremId, config: &AuditConfig) -> Result<AuditVerdict, AuditError> {
    let spec = spec_of(id);
    let pool = effective_pool(spec.kind, config.n, config.pool).map_err(|e| match e {
        AuditError::SizeTooLarge { n, max, .. } => AuditError::SizeTooLarge {
            theorem: id.as_str().to_owned(),
            n,
            max,
        },
        other => other,
    })?;
    let v = config.variants;
    let part = match spec.kind {
        InstanceKind::Context => sweep_contexts(config.n, pool, config.seed, |ctx| {
            eval_context(id, ctx, v)
        }),
        InstanceKind::ContextPair => sweep_context_pairs(config.n, pool, config.seed, |ctx, a, b| {
            eval_context_pair(id, ctx, a, b, v)
        }),
        InstanceKind::Map => sweep_maps(config.n, pool, config.seed, |f| eval_map(id, f, v)),
    };
    Ok(AuditVerdict {
        theorem: id,
        variants: v,
        scanned: part.scanned,
        hyp_held: part.hyp_held,
        failures: part.failures,
        failure_total: part.failure_total,
    })
}

/// Re-evaluates a reported instance: true when it still satisfies the
/// hypothesis and violates the conclusion under the given variants.
pub fn recheck(id: TheoremId, instance: &FailureInstance, v: VariantSet) -> bool {
    match instance {
        FailureInstance::Context { space, gamma } => {
            let ctx = GammaContext::of(space.clone(), gamma.clone())
                .expect("reported instances carry a valid context");
            let (hyp, ok) = eval_context(id, &ctx, v);
            hyp && !ok
        }
        FailureInstance::ContextPair { space, gamma, a, b } => {
            let ctx = GammaContext::of(space.clone(), gamma.clone())
                .expect("reported instances carry a valid context");
            let (hyp, ok) = eval_context_pair(id, &ctx, *a, *b, v);
            hyp && !ok
        }
        FailureInstance::Map {
            domain_space,
            domain_gamma,
            codomain_space,
            codomain_gamma,
            table,
        } => {
            let dom = GammaContext::of(domain_space.clone(), domain_gamma.clone())
                .expect("reported instances carry a valid domain");
            let cod = GammaContext::of(codomain_space.clone(), codomain_gamma.clone())
                .expect("reported instances carry a valid codomain");
            let f = SpaceMap::new(&dom, &cod, table.clone())
                .expect("reported instances carry a valid map table");
            let (hyp, ok) = eval_map(id, &f, v);
            hyp && !ok
        }
    }
}

#[derive(Default)]
struct Partial {
    scanned: u64,
    hyp_held: u64,
    failures: Vec<FailureInstance>,
    failure_total: u64,
}

impl Partial {
    fn record(&mut self, hyp: bool, ok: bool, make: impl FnOnce() -> FailureInstance) {
        self.scanned += 1;
        if hyp {
            self.hyp_held += 1;
            if !ok {
                self.failure_total += 1;
                if self.failures.len() < FAILURE_CAP {
                    self.failures.push(make());
                }
            }
        }
    }
}

/// Merging in canonical partition order keeps the first-by-canonical-key
/// failures regardless of worker scheduling.
fn merge(parts: Vec<Partial>) -> Partial {
    let mut out = Partial::default();
    for p in parts {
        out.scanned += p.scanned;
        out.hyp_held += p.hyp_held;
        out.failure_total += p.failure_total;
        for f in p.failures {
            if out.failures.len() < FAILURE_CAP {
                out.failures.push(f);
            }
        }
    }
    out
}

fn topologies_for(n: usize) -> Vec<FiniteSpace> {
    enumerate_topologies(n).expect("size was gated by effective_pool")
}

fn sweep_contexts<F>(n: usize, pool: PoolSpec, seed: u64, eval: F) -> Partial
where
    F: Fn(&GammaContext) -> (bool, bool) + Sync,
{
    let topologies = topologies_for(n);
    let parts: Vec<Partial> = topologies
        .par_iter()
        .enumerate()
        .map(|(ti, space)| {
            let shared = Arc::new(space.clone());
            let mut part = Partial::default();
            for op in pool_operations(space, ti, pool, seed) {
                let ctx = GammaContext::new(Arc::clone(&shared), op)
                    .expect("pool operations are valid for their space");
                let (hyp, ok) = eval(&ctx);
                part.record(hyp, ok, || FailureInstance::Context {
                    space: space.clone(),
                    gamma: ctx.gamma().clone(),
                });
            }
            part
        })
        .collect();
    merge(parts)
}

fn sweep_context_pairs<F>(n: usize, pool: PoolSpec, seed: u64, eval: F) -> Partial
where
    F: Fn(&GammaContext, PointSet, PointSet) -> (bool, bool) + Sync,
{
    let topologies = topologies_for(n);
    let parts: Vec<Partial> = topologies
        .par_iter()
        .enumerate()
        .map(|(ti, space)| {
            let shared = Arc::new(space.clone());
            let mut part = Partial::default();
            for op in pool_operations(space, ti, pool, seed) {
                let ctx = GammaContext::new(Arc::clone(&shared), op)
                    .expect("pool operations are valid for their space");
                for a in space.subsets() {
                    for b in space.subsets() {
                        let (hyp, ok) = eval(&ctx, a, b);
                        part.record(hyp, ok, || FailureInstance::ContextPair {
                            space: space.clone(),
                            gamma: ctx.gamma().clone(),
                            a,
                            b,
                        });
                    }
                }
            }
            part
        })
        .collect();
    merge(parts)
}

fn sweep_maps<F>(n: usize, pool: PoolSpec, seed: u64, eval: F) -> Partial
where
    F: Fn(&SpaceMap) -> (bool, bool) + Sync,
{
    let topologies = topologies_for(n);
    // All contexts in canonical order, with shared spaces and memos.
    let contexts: Vec<GammaContext> = topologies
        .iter()
        .enumerate()
        .flat_map(|(ti, space)| {
            let shared = Arc::new(space.clone());
            pool_operations(space, ti, pool, seed)
                .into_iter()
                .map(move |op| {
                    GammaContext::new(Arc::clone(&shared), op)
                        .expect("pool operations are valid for their space")
                })
        })
        .collect();
    let parts: Vec<Partial> = contexts
        .par_iter()
        .map(|dom| {
            let mut part = Partial::default();
            for cod in &contexts {
                let maps = enumerate_maps(dom, cod, MapFilter::All)
                    .expect("map sweeps are gated to 3 points per side");
                for f in maps {
                    let (hyp, ok) = eval(&f);
                    part.record(hyp, ok, || FailureInstance::Map {
                        domain_space: dom.space().clone(),
                        domain_gamma: dom.gamma().clone(),
                        codomain_space: cod.space().clone(),
                        codomain_gamma: cod.gamma().clone(),
                        table: f.table().to_vec(),
                    });
                }
            }
            part
        })
        .collect();
    merge(parts)
}

/// Every point lies gamma-interior to some subset that is compact as a
/// subspace.
fn interior_point_cover(ctx: &GammaContext) -> bool {
    ctx.space().full().iter().all(|x| {
        ctx.space()
            .subsets()
            .any(|c| ctx.int_gamma(c).contains(x) && ctx.subspace_compact(c))
    })
}

/// Every nonempty gamma-closed subset is locally compact as a subspace.
fn closed_subspaces_locally_compact(ctx: &GammaContext, v: VariantSet) -> bool {
    ctx.gamma_closed_family(v.closed)
        .into_iter()
        .filter(|a| !a.is_empty())
        .all(|a| {
            let sub = subview(ctx, a).expect("carrier is nonempty");
            is_gamma_locally_compact(&sub, v.cover).compact
        })
}

fn eval_context(id: TheoremId, ctx: &GammaContext, v: VariantSet) -> (bool, bool) {
    match id {
        TheoremId::T5 => (
            true,
            is_gamma_star_regular(ctx, v.closed) == star_regular_strengthened(ctx, v.closed),
        ),
        TheoremId::T6 => {
            if !is_gamma0_compact(ctx, ctx.space().full(), v.cover) {
                return (false, true);
            }
            (true, is_root_locally_compact(ctx))
        }
        TheoremId::T7 | TheoremId::T13 => {
            if !(ctx.traits().regular && is_root_locally_compact(ctx)) {
                return (false, true);
            }
            (true, closed_subspaces_locally_compact(ctx, v))
        }
        TheoremId::T8 => {
            let t = *ctx.traits();
            if !(t.regular
                && t.open_in(v.open_dir)
                && is_gamma_t2(ctx)
                && is_root_locally_compact(ctx))
            {
                return (false, true);
            }
            let ok = ctx.space().full().iter().all(|x| {
                ctx.space()
                    .subsets()
                    .filter(|&u| ctx.is_gamma_nbd(u, x))
                    .all(|u| {
                        ctx.space().subsets().any(|w| {
                            w.is_subset(u) && ctx.is_gamma_nbd(w, x) && ctx.subspace_compact(w)
                        })
                    })
            });
            (true, ok)
        }
        TheoremId::T9 => {
            if !is_root_locally_compact(ctx) {
                return (false, true);
            }
            (true, interior_point_cover(ctx))
        }
        TheoremId::T10 => {
            let t = *ctx.traits();
            if !(t.regular
                && t.open_in(v.open_dir)
                && is_gamma_t2(ctx)
                && interior_point_cover(ctx))
            {
                return (false, true);
            }
            (true, is_root_locally_compact(ctx))
        }
        TheoremId::T11 => {
            let t = *ctx.traits();
            if !(t.regular && t.open_in(v.open_dir) && is_gamma_t2(ctx)) {
                return (false, true);
            }
            (
                true,
                is_root_locally_compact(ctx) == interior_point_cover(ctx),
            )
        }
        TheoremId::T14 => (
            true,
            is_gamma_normal(ctx, v.closed) == normal_strengthened(ctx, v.closed),
        ),
        TheoremId::TA => (
            true,
            is_gamma_normal(ctx, v.closed) == shrinkability(ctx, v.closed),
        ),
        _ => unreachable!("{id} is not a context-kind statement"),
    }
}

fn eval_context_pair(
    id: TheoremId,
    ctx: &GammaContext,
    a: PointSet,
    b: PointSet,
    v: VariantSet,
) -> (bool, bool) {
    match id {
        TheoremId::T4 => {
            let t = *ctx.traits();
            let full = ctx.space().full();
            let hyp = t.regular
                && t.open_in(v.open_dir)
                && ctx.cl_gamma(a).union(ctx.cl_gamma(b)) == full
                && is_gamma0_compact(ctx, a, v.cover)
                && is_gamma0_compact(ctx, b, v.cover);
            if !hyp {
                return (false, true);
            }
            (true, is_gamma0_compact(ctx, full, v.cover))
        }
        TheoremId::L32 => {
            if !ctx.is_gamma_open(a) {
                return (false, true);
            }
            (
                true,
                a.intersect(ctx.cl_gamma(b))
                    .is_subset(ctx.cl_gamma(a.intersect(b))),
            )
        }
        _ => unreachable!("{id} is not a pair-kind statement"),
    }
}

fn eval_map(id: TheoremId, f: &SpaceMap, v: VariantSet) -> (bool, bool) {
    match id {
        TheoremId::T1 => {
            if !(f.is_injective()
                && f.codomain().traits().open_in(v.open_dir)
                && f.is_gb_continuous())
            {
                return (false, true);
            }
            let ok = f
                .domain()
                .space()
                .subsets()
                .filter(|c| !c.is_empty())
                .all(|c| !f.domain().subspace_compact(c) || f.codomain().subspace_compact(f.image(c)));
            (true, ok)
        }
        TheoremId::T2 => {
            let dt = *f.domain().traits();
            let hyp = f.is_injective()
                && dt.regular
                && dt.open_in(v.open_dir)
                && f.codomain().traits().open_in(v.open_dir)
                && is_gamma_t2(f.codomain())
                && is_gamma0_compact(f.domain(), f.domain().space().full(), v.cover)
                && f.is_gb_continuous();
            if !hyp {
                return (false, true);
            }
            (true, f.is_gb_closed(v.closed))
        }
        TheoremId::T3 => {
            let dt = *f.domain().traits();
            let hyp = f.is_bijective()
                && dt.regular
                && dt.open_in(v.open_dir)
                && f.codomain().traits().open_in(v.open_dir)
                && is_gamma_t2(f.codomain())
                && is_gamma0_compact(f.domain(), f.domain().space().full(), v.cover)
                && f.is_gb_continuous();
            if !hyp {
                return (false, true);
            }
            (true, f.is_gb_homeomorphism())
        }
        TheoremId::T12 => {
            let hyp = f.is_surjective()
                && f.codomain().traits().open_in(v.open_dir)
                && is_root_locally_compact(f.domain())
                && f.is_gb_continuous()
                && f.is_gb_open();
            if !hyp {
                return (false, true);
            }
            (true, is_root_locally_compact(f.codomain()))
        }
        TheoremId::T413 => {
            if !f.is_gb_continuous() {
                return (false, true);
            }
            (
                true,
                f.closure_image_lemma()
                    .expect("continuity was just established"),
            )
        }
        _ => unreachable!("{id} is not a map-kind statement"),
    }
}
