//! Conjunctive property queries over enumerated contexts, answered by the
//! first witness in canonical order or a proof of exhaustion.

use crate::audit::{effective_pool, InstanceKind, VariantSet};
use crate::error::QueryError;
use crate::gamma::{GammaContext, GammaOperation};
use crate::pool::{pool_operations, PoolSpec};
use crate::props::{
    is_gamma_normal, is_gamma_star_regular, is_gamma_t2, is_root_locally_compact,
};
use crate::space::{enumerate_topologies, FiniteSpace};
use rayon::prelude::*;
use std::sync::Arc;

/// The decidable per-context properties a query may mention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyName {
    Normal,
    GammaNormal,
    Regular,
    GammaStarRegular,
    GammaT2,
    T2,
    OpRegular,
    OpOpen,
    GammaOpenOp,
    GammaLocallyCompact,
}

impl PropertyName {
    pub const ALL: [PropertyName; 10] = [
        PropertyName::Normal,
        PropertyName::GammaNormal,
        PropertyName::Regular,
        PropertyName::GammaStarRegular,
        PropertyName::GammaT2,
        PropertyName::T2,
        PropertyName::OpRegular,
        PropertyName::OpOpen,
        PropertyName::GammaOpenOp,
        PropertyName::GammaLocallyCompact,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyName::Normal => "normal",
            PropertyName::GammaNormal => "gamma_normal",
            PropertyName::Regular => "regular",
            PropertyName::GammaStarRegular => "gamma_star_regular",
            PropertyName::GammaT2 => "gamma_T2",
            PropertyName::T2 => "T2",
            PropertyName::OpRegular => "op_regular",
            PropertyName::OpOpen => "op_open",
            PropertyName::GammaOpenOp => "gamma_open_op",
            PropertyName::GammaLocallyCompact => "gamma_locally_compact",
        }
    }

    fn parse(word: &str) -> Option<PropertyName> {
        let normalized = word.replace('-', "_");
        PropertyName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(&normalized))
    }

    /// Evaluates the property on a context under the given variants.
    pub fn holds(self, ctx: &GammaContext, v: VariantSet) -> bool {
        match self {
            PropertyName::Normal => ctx.space().is_normal_space(),
            PropertyName::GammaNormal => is_gamma_normal(ctx, v.closed),
            PropertyName::Regular => ctx.space().is_regular_space(),
            PropertyName::GammaStarRegular => is_gamma_star_regular(ctx, v.closed),
            PropertyName::GammaT2 => is_gamma_t2(ctx),
            PropertyName::T2 => ctx.space().is_t2(),
            PropertyName::OpRegular => ctx.traits().regular,
            PropertyName::OpOpen => ctx.traits().open_in(v.open_dir),
            PropertyName::GammaOpenOp => ctx.traits().gamma_open_op,
            PropertyName::GammaLocallyCompact => is_root_locally_compact(ctx),
        }
    }
}

/// One conjunct: a property, possibly negated with a leading `!`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyLiteral {
    pub name: PropertyName,
    pub negated: bool,
}

impl PropertyLiteral {
    pub fn holds(self, ctx: &GammaContext, v: VariantSet) -> bool {
        self.name.holds(ctx, v) != self.negated
    }

    pub fn render(self) -> String {
        if self.negated {
            format!("!{}", self.name.as_str())
        } else {
            self.name.as_str().to_owned()
        }
    }
}

/// Parses the comma-separated literal grammar, e.g. "gamma_normal,!normal".
pub fn parse_query(text: &str) -> Result<Vec<PropertyLiteral>, QueryError> {
    let mut literals = Vec::new();
    for raw in text.split(',') {
        let word = raw.trim();
        if word.is_empty() {
            return Err(QueryError::Malformed(format!(
                "empty literal in {text:?}"
            )));
        }
        let (negated, name_part) = match word.strip_prefix('!') {
            Some(rest) => (true, rest.trim()),
            None => (false, word),
        };
        if name_part.is_empty() {
            return Err(QueryError::Malformed(format!(
                "negation without a property in {text:?}"
            )));
        }
        let name = PropertyName::parse(name_part)
            .ok_or_else(|| QueryError::UnknownProperty(name_part.to_owned()))?;
        literals.push(PropertyLiteral { name, negated });
    }
    if literals.is_empty() {
        return Err(QueryError::Malformed("no literals given".to_owned()));
    }
    Ok(literals)
}

/// A literal and its negation together can never be satisfied.
pub fn is_contradictory(literals: &[PropertyLiteral]) -> bool {
    literals.iter().any(|a| {
        literals
            .iter()
            .any(|b| a.name == b.name && a.negated != b.negated)
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchQuery {
    pub literals: Vec<PropertyLiteral>,
    pub n: usize,
    pub variants: VariantSet,
    pub pool: PoolSpec,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Witness {
        size: usize,
        space: FiniteSpace,
        gamma: GammaOperation,
    },
    Exhausted {
        scanned: u64,
    },
}

/// Scans sizes 1..=n in canonical order and returns the first context
/// satisfying every literal. Contradictory queries exhaust without
/// scanning.
pub fn find_counterexample(query: &SearchQuery) -> Result<SearchOutcome, QueryError> {
    if query.n == 0 || query.n > 4 {
        return Err(QueryError::SizeTooLarge(query.n));
    }
    if is_contradictory(&query.literals) {
        return Ok(SearchOutcome::Exhausted { scanned: 0 });
    }
    let mut scanned = 0u64;
    for size in 1..=query.n {
        let pool = effective_pool(InstanceKind::Context, size, query.pool)
            .expect("size is within the context gate");
        let topologies = enumerate_topologies(size).expect("size is within the context gate");
        // Per topology: instances scanned and the first witness, if any.
        let results: Vec<(u64, Option<GammaOperation>)> = topologies
            .par_iter()
            .enumerate()
            .map(|(ti, space)| {
                let shared = Arc::new(space.clone());
                let mut count = 0u64;
                for op in pool_operations(space, ti, pool, query.seed) {
                    count += 1;
                    let ctx = GammaContext::new(Arc::clone(&shared), op)
                        .expect("pool operations are valid for their space");
                    if query
                        .literals
                        .iter()
                        .all(|lit| lit.holds(&ctx, query.variants))
                    {
                        return (count, Some(ctx.gamma().clone()));
                    }
                }
                (count, None)
            })
            .collect();
        for (ti, (count, witness)) in results.iter().enumerate() {
            scanned += count;
            if let Some(gamma) = witness {
                return Ok(SearchOutcome::Witness {
                    size,
                    space: topologies[ti].clone(),
                    gamma: gamma.clone(),
                });
            }
        }
    }
    Ok(SearchOutcome::Exhausted { scanned })
}
