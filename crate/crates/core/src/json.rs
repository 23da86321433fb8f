//! JSON document shapes for every input and report the tool reads or
//! writes, with conversions to and from the core types. Sets are rendered
//! as alphabetically sorted label arrays; object key order is fixed by the
//! struct declarations, so serialization is byte-deterministic.

use crate::audit::{AuditVerdict, FailureInstance, InstanceKind, VariantSet};
use crate::error::DocError;
use crate::gamma::{ClosedVariant, GammaContext, GammaOperation, OpTag, OpenDirection};
use crate::props::{
    gamma_nbd_system, gamma_normal_failure, gamma_star_regular_failure, gamma_t2_failure,
    is_gamma0_compact, is_gamma_locally_compact, CoverMode,
};
use crate::query::{PropertyLiteral, SearchOutcome};
use crate::set::{Point, PointSet};
use crate::space::FiniteSpace;
use crate::worked::WorkedExamples;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

fn set_labels(space: &FiniteSpace, s: PointSet) -> Vec<String> {
    let mut labels: Vec<String> = s.iter().map(|p| space.label_of(p).to_owned()).collect();
    labels.sort();
    labels
}

fn labels_to_set(space: &FiniteSpace, labels: &[String]) -> Result<PointSet, DocError> {
    let mut s = PointSet::EMPTY;
    for label in labels {
        let p = space
            .point_of_label(label)
            .ok_or_else(|| DocError::UnknownLabel(label.clone()))?;
        s.insert(p);
    }
    Ok(s)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceDoc {
    pub fn from_space(space: &FiniteSpace) -> SpaceDoc {
        SpaceDoc {
            points: space.labels().to_vec(),
            opens: space.opens().iter().map(|&o| set_labels(space, o)).collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, DocError> {
        let mut opens = Vec::with_capacity(self.opens.len());
        for labels in &self.opens {
            let mut s = PointSet::EMPTY;
            for label in labels {
                let p = self
                    .points
                    .iter()
                    .position(|q| q == label)
                    .ok_or_else(|| DocError::UnknownLabel(label.clone()))?;
                s.insert(p as Point);
            }
            opens.push(s);
        }
        Ok(FiniteSpace::new(self.points.clone(), opens)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OperationDoc {
    Identity,
    Closure,
    IntClosure,
    Pivot { point: String },
    Table { entries: Vec<TableEntryDoc> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableEntryDoc {
    pub open: Vec<String>,
    pub image: Vec<String>,
}

impl OperationDoc {
    pub fn from_operation(space: &FiniteSpace, op: &GammaOperation) -> OperationDoc {
        match op.tag() {
            OpTag::Identity => OperationDoc::Identity,
            OpTag::Closure => OperationDoc::Closure,
            OpTag::IntClosure => OperationDoc::IntClosure,
            OpTag::Pivot(p) => OperationDoc::Pivot {
                point: space.label_of(p).to_owned(),
            },
            OpTag::Custom => OperationDoc::Table {
                entries: space
                    .opens()
                    .iter()
                    .zip(op.table())
                    .map(|(&open, &image)| TableEntryDoc {
                        open: set_labels(space, open),
                        image: set_labels(space, image),
                    })
                    .collect(),
            },
        }
    }

    pub fn to_operation(&self, space: &FiniteSpace) -> Result<GammaOperation, DocError> {
        match self {
            OperationDoc::Identity => Ok(GammaOperation::identity(space)),
            OperationDoc::Closure => Ok(GammaOperation::closure_op(space)),
            OperationDoc::IntClosure => Ok(GammaOperation::int_closure_op(space)),
            OperationDoc::Pivot { point } => {
                let p = space
                    .point_of_label(point)
                    .ok_or_else(|| DocError::UnknownLabel(point.clone()))?;
                Ok(GammaOperation::pivot(space, p)?)
            }
            OperationDoc::Table { entries } => {
                let mut pairs = Vec::with_capacity(entries.len());
                for entry in entries {
                    pairs.push((
                        labels_to_set(space, &entry.open)?,
                        labels_to_set(space, &entry.image)?,
                    ));
                }
                Ok(GammaOperation::from_table(space, &pairs)?)
            }
        }
    }
}

/// The loadable space+operation input, also the witness output format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ContextDoc {
    pub space: SpaceDoc,
    pub gamma: OperationDoc,
}

impl ContextDoc {
    pub fn from_context(ctx: &GammaContext) -> ContextDoc {
        ContextDoc {
            space: SpaceDoc::from_space(ctx.space()),
            gamma: OperationDoc::from_operation(ctx.space(), ctx.gamma()),
        }
    }

    pub fn from_parts(space: &FiniteSpace, gamma: &GammaOperation) -> ContextDoc {
        ContextDoc {
            space: SpaceDoc::from_space(space),
            gamma: OperationDoc::from_operation(space, gamma),
        }
    }

    pub fn to_context(&self) -> Result<GammaContext, DocError> {
        let space = Arc::new(self.space.to_space()?);
        let gamma = self.gamma.to_operation(&space)?;
        Ok(GammaContext::new(space, gamma)?)
    }
}

/// A map between two contexts, table keyed by domain point labels.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MapDoc {
    pub domain: ContextDoc,
    pub codomain: ContextDoc,
    pub table: BTreeMap<String, String>,
}

/// Owned halves of a parsed map document; borrow them to build a `SpaceMap`.
#[derive(Clone, Debug)]
pub struct MapParts {
    pub domain: GammaContext,
    pub codomain: GammaContext,
    pub table: Vec<Point>,
}

impl MapDoc {
    pub fn from_parts(
        domain_space: &FiniteSpace,
        domain_gamma: &GammaOperation,
        codomain_space: &FiniteSpace,
        codomain_gamma: &GammaOperation,
        table: &[Point],
    ) -> MapDoc {
        MapDoc {
            domain: ContextDoc::from_parts(domain_space, domain_gamma),
            codomain: ContextDoc::from_parts(codomain_space, codomain_gamma),
            table: table
                .iter()
                .enumerate()
                .map(|(x, &y)| {
                    (
                        domain_space.label_of(x as Point).to_owned(),
                        codomain_space.label_of(y).to_owned(),
                    )
                })
                .collect(),
        }
    }

    pub fn to_parts(&self) -> Result<MapParts, DocError> {
        let domain = self.domain.to_context()?;
        let codomain = self.codomain.to_context()?;
        for key in self.table.keys() {
            if domain.space().point_of_label(key).is_none() {
                return Err(crate::error::MapError::UnknownDomainPoint(key.clone()).into());
            }
        }
        let mut table = Vec::with_capacity(domain.space().n());
        for x in domain.space().full().iter() {
            let x_label = domain.space().label_of(x);
            let y_label = self
                .table
                .get(x_label)
                .ok_or_else(|| crate::error::MapError::MissingPoint(x_label.to_owned()))?;
            let y = codomain.space().point_of_label(y_label).ok_or_else(|| {
                crate::error::MapError::ImageOutOfSpace(x_label.to_owned(), y_label.clone())
            })?;
            table.push(y);
        }
        Ok(MapParts {
            domain,
            codomain,
            table,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VariantsDoc {
    pub closed: String,
    pub open_op: String,
    pub cover: String,
}

impl VariantsDoc {
    pub fn from_variants(v: VariantSet) -> VariantsDoc {
        VariantsDoc {
            closed: match v.closed {
                ClosedVariant::Jankovic => "jankovic",
                ClosedVariant::Kasahara => "kasahara",
            }
            .to_owned(),
            open_op: match v.open_dir {
                OpenDirection::Ogata => "ogata",
                OpenDirection::Printed => "printed",
            }
            .to_owned(),
            cover: match v.cover {
                CoverMode::X => "X",
                CoverMode::A => "A",
            }
            .to_owned(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PropertiesDoc {
    #[serde(rename = "T2")]
    pub t2: bool,
    pub regular: bool,
    pub normal: bool,
    #[serde(rename = "gamma_T2")]
    pub gamma_t2: bool,
    pub gamma_star_regular: bool,
    pub gamma_normal: bool,
    pub gamma0_compact: bool,
    pub gamma_locally_compact: bool,
    pub op_monotone: bool,
    pub op_regular: bool,
    pub op_open: bool,
    pub gamma_open_op: bool,
    pub closed_variants_agree: bool,
    pub nbd_readings_agree: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StarRegularWitnessDoc {
    pub point: String,
    pub closed_set: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NormalWitnessDoc {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LcWitnessDoc {
    pub point: String,
    pub nbd: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessesDoc {
    #[serde(rename = "gamma_T2_failure", skip_serializing_if = "Option::is_none")]
    pub gamma_t2_failure: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_star_regular_failure: Option<StarRegularWitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_normal_failure: Option<NormalWitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_compact_witnesses: Option<Vec<LcWitnessDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_compact_failure: Option<String>,
}

/// The full `analyze` report for one context under one variant selection.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PropertyReportDoc {
    pub space: SpaceDoc,
    pub gamma: OperationDoc,
    pub variants: VariantsDoc,
    pub gamma_open_family: Vec<Vec<String>>,
    pub gamma_nbd_systems: BTreeMap<String, Vec<Vec<String>>>,
    pub properties: PropertiesDoc,
    pub witnesses: WitnessesDoc,
}

pub fn build_property_report(ctx: &GammaContext, v: VariantSet) -> PropertyReportDoc {
    let space = ctx.space();
    let traits = *ctx.traits();
    let lc = is_gamma_locally_compact(ctx, v.cover);

    let gamma_nbd_systems = space
        .full()
        .iter()
        .map(|x| {
            let system = gamma_nbd_system(ctx, x);
            (
                space.label_of(x).to_owned(),
                system
                    .gamma_open_nbds
                    .iter()
                    .map(|&s| set_labels(space, s))
                    .collect(),
            )
        })
        .collect();

    let properties = PropertiesDoc {
        t2: space.is_t2(),
        regular: space.is_regular_space(),
        normal: space.is_normal_space(),
        gamma_t2: gamma_t2_failure(ctx).is_none(),
        gamma_star_regular: gamma_star_regular_failure(ctx, v.closed).is_none(),
        gamma_normal: gamma_normal_failure(ctx, v.closed).is_none(),
        gamma0_compact: is_gamma0_compact(ctx, space.full(), v.cover),
        gamma_locally_compact: lc.compact,
        op_monotone: traits.monotone,
        op_regular: traits.regular,
        op_open: traits.open_in(v.open_dir),
        gamma_open_op: traits.gamma_open_op,
        closed_variants_agree: ctx.closed_variants_agree(),
        nbd_readings_agree: ctx.nbd_readings_agree(),
    };

    let witnesses = WitnessesDoc {
        gamma_t2_failure: gamma_t2_failure(ctx).map(|(x, y)| {
            (space.label_of(x).to_owned(), space.label_of(y).to_owned())
        }),
        gamma_star_regular_failure: gamma_star_regular_failure(ctx, v.closed).map(|(x, a)| {
            StarRegularWitnessDoc {
                point: space.label_of(x).to_owned(),
                closed_set: set_labels(space, a),
            }
        }),
        gamma_normal_failure: gamma_normal_failure(ctx, v.closed).map(|(a, b)| NormalWitnessDoc {
            a: set_labels(space, a),
            b: set_labels(space, b),
        }),
        locally_compact_witnesses: if lc.compact {
            Some(
                lc.witnesses
                    .iter()
                    .map(|&(p, nbd)| LcWitnessDoc {
                        point: space.label_of(p).to_owned(),
                        nbd: set_labels(space, nbd),
                    })
                    .collect(),
            )
        } else {
            None
        },
        locally_compact_failure: lc.failing_point.map(|p| space.label_of(p).to_owned()),
    };

    PropertyReportDoc {
        space: SpaceDoc::from_space(space),
        gamma: OperationDoc::from_operation(space, ctx.gamma()),
        variants: VariantsDoc::from_variants(v),
        gamma_open_family: ctx
            .gamma_opens()
            .iter()
            .map(|&s| set_labels(space, s))
            .collect(),
        gamma_nbd_systems,
        properties,
        witnesses,
    }
}

/// One audited instance. Shapes are distinguished by their keys, so the
/// enum is untagged; the pair form must come before the plain context form.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum InstanceDoc {
    ContextPair {
        space: SpaceDoc,
        gamma: OperationDoc,
        a: Vec<String>,
        b: Vec<String>,
    },
    Map {
        domain: ContextDoc,
        codomain: ContextDoc,
        table: BTreeMap<String, String>,
    },
    Context {
        space: SpaceDoc,
        gamma: OperationDoc,
    },
}

impl InstanceDoc {
    pub fn from_failure(instance: &FailureInstance) -> InstanceDoc {
        match instance {
            FailureInstance::Context { space, gamma } => InstanceDoc::Context {
                space: SpaceDoc::from_space(space),
                gamma: OperationDoc::from_operation(space, gamma),
            },
            FailureInstance::ContextPair { space, gamma, a, b } => InstanceDoc::ContextPair {
                space: SpaceDoc::from_space(space),
                gamma: OperationDoc::from_operation(space, gamma),
                a: set_labels(space, *a),
                b: set_labels(space, *b),
            },
            FailureInstance::Map {
                domain_space,
                domain_gamma,
                codomain_space,
                codomain_gamma,
                table,
            } => {
                let doc = MapDoc::from_parts(
                    domain_space,
                    domain_gamma,
                    codomain_space,
                    codomain_gamma,
                    table,
                );
                InstanceDoc::Map {
                    domain: doc.domain,
                    codomain: doc.codomain,
                    table: doc.table,
                }
            }
        }
    }

    pub fn to_failure(&self) -> Result<FailureInstance, DocError> {
        match self {
            InstanceDoc::Context { space, gamma } => {
                let s = space.to_space()?;
                let g = gamma.to_operation(&s)?;
                Ok(FailureInstance::Context { space: s, gamma: g })
            }
            InstanceDoc::ContextPair { space, gamma, a, b } => {
                let s = space.to_space()?;
                let g = gamma.to_operation(&s)?;
                let a = labels_to_set(&s, a)?;
                let b = labels_to_set(&s, b)?;
                Ok(FailureInstance::ContextPair {
                    space: s,
                    gamma: g,
                    a,
                    b,
                })
            }
            InstanceDoc::Map {
                domain,
                codomain,
                table,
            } => {
                let doc = MapDoc {
                    domain: domain.clone(),
                    codomain: codomain.clone(),
                    table: table.clone(),
                };
                let parts = doc.to_parts()?;
                Ok(FailureInstance::Map {
                    domain_space: parts.domain.space().clone(),
                    domain_gamma: parts.domain.gamma().clone(),
                    codomain_space: parts.codomain.space().clone(),
                    codomain_gamma: parts.codomain.gamma().clone(),
                    table: parts.table,
                })
            }
        }
    }

    pub fn kind(&self) -> InstanceKind {
        match self {
            InstanceDoc::Context { .. } => InstanceKind::Context,
            InstanceDoc::ContextPair { .. } => InstanceKind::ContextPair,
            InstanceDoc::Map { .. } => InstanceKind::Map,
        }
    }
}

/// One theorem verdict: exactly these six fields.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerdictDoc {
    pub theorem: String,
    pub variants: VariantsDoc,
    pub scanned: u64,
    pub hyp_held: u64,
    pub failures: Vec<InstanceDoc>,
    pub failure_total: u64,
}

impl VerdictDoc {
    pub fn from_verdict(v: &AuditVerdict) -> VerdictDoc {
        VerdictDoc {
            theorem: v.theorem.as_str().to_owned(),
            variants: VariantsDoc::from_variants(v.variants),
            scanned: v.scanned,
            hyp_held: v.hyp_held,
            failures: v.failures.iter().map(InstanceDoc::from_failure).collect(),
            failure_total: v.failure_total,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AuditRunDoc {
    pub command: String,
    pub theorem: String,
    pub n: usize,
    pub seed: u64,
    pub pool: String,
    pub verdicts: Vec<VerdictDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum OutcomeDoc {
    Witness { size: usize, witness: ContextDoc },
    Exhausted { exhausted: bool, scanned: u64 },
}

impl OutcomeDoc {
    pub fn from_outcome(outcome: &SearchOutcome) -> OutcomeDoc {
        match outcome {
            SearchOutcome::Witness { size, space, gamma } => OutcomeDoc::Witness {
                size: *size,
                witness: ContextDoc::from_parts(space, gamma),
            },
            SearchOutcome::Exhausted { scanned } => OutcomeDoc::Exhausted {
                exhausted: true,
                scanned: *scanned,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CounterexampleRunDoc {
    pub command: String,
    pub query: Vec<String>,
    pub n: usize,
    pub seed: u64,
    pub pool: String,
    pub variants: VariantsDoc,
    pub outcome: OutcomeDoc,
}

pub fn render_query(literals: &[PropertyLiteral]) -> Vec<String> {
    literals.iter().map(|lit| lit.render()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClaimCheckDoc {
    pub source: String,
    pub claim: String,
    pub agrees: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaNormalVerdictDoc {
    pub jankovic: bool,
    pub kasahara: bool,
}

/// The `paper-examples` report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WorkedExamplesDoc {
    pub command: String,
    pub space: SpaceDoc,
    pub gamma: OperationDoc,
    pub gamma_open_family: Vec<Vec<String>>,
    pub printed_gamma_open_family: Vec<Vec<String>>,
    pub gamma_nbd_systems: BTreeMap<String, Vec<Vec<String>>>,
    pub printed_gamma_nbd_systems: BTreeMap<String, Vec<Vec<String>>>,
    pub gamma_locally_compact: bool,
    pub locally_compact_witnesses: Vec<LcWitnessDoc>,
    pub normal: bool,
    pub gamma_normal: GammaNormalVerdictDoc,
    pub claims: Vec<ClaimCheckDoc>,
    pub conflict: Option<String>,
}

pub fn build_worked_examples_doc(report: &WorkedExamples) -> WorkedExamplesDoc {
    let ctx = &report.context;
    let space = ctx.space();
    WorkedExamplesDoc {
        command: "paper-examples".to_owned(),
        space: SpaceDoc::from_space(space),
        gamma: OperationDoc::from_operation(space, ctx.gamma()),
        gamma_open_family: report
            .gamma_open_family
            .iter()
            .map(|&s| set_labels(space, s))
            .collect(),
        printed_gamma_open_family: report
            .printed_gamma_open_family
            .iter()
            .map(|&s| set_labels(space, s))
            .collect(),
        gamma_nbd_systems: report
            .nbd_systems
            .iter()
            .map(|sys| {
                (
                    space.label_of(sys.point).to_owned(),
                    sys.gamma_open_nbds
                        .iter()
                        .map(|&s| set_labels(space, s))
                        .collect(),
                )
            })
            .collect(),
        printed_gamma_nbd_systems: report
            .printed_nbd_systems
            .iter()
            .map(|(p, sets)| {
                (
                    space.label_of(*p).to_owned(),
                    sets.iter().map(|&s| set_labels(space, s)).collect(),
                )
            })
            .collect(),
        gamma_locally_compact: report.local_compactness.compact,
        locally_compact_witnesses: report
            .local_compactness
            .witnesses
            .iter()
            .map(|&(p, nbd)| LcWitnessDoc {
                point: space.label_of(p).to_owned(),
                nbd: set_labels(space, nbd),
            })
            .collect(),
        normal: report.classically_normal,
        gamma_normal: GammaNormalVerdictDoc {
            jankovic: report.gamma_normal_jankovic,
            kasahara: report.gamma_normal_kasahara,
        },
        claims: report
            .claims
            .iter()
            .map(|c| ClaimCheckDoc {
                source: c.source.to_owned(),
                claim: c.claim.to_owned(),
                agrees: c.agrees,
                note: c.note.clone(),
            })
            .collect(),
        conflict: report.conflict.clone(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TopologyCountDoc {
    pub opens: usize,
    pub operations: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EnumerateDoc {
    pub command: String,
    pub n: usize,
    pub topologies: usize,
    pub operations_total: u64,
    pub per_topology: Vec<TopologyCountDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::PointSet;
    use crate::worked::worked_examples;

    fn sets(masks: &[u32]) -> Vec<PointSet> {
        masks.iter().copied().map(PointSet::from_mask).collect()
    }

    fn s1_context() -> GammaContext {
        crate::worked::example_context()
    }

    #[test]
    fn space_docs_round_trip() {
        let space = s1_context().space().clone();
        let doc = SpaceDoc::from_space(&space);
        assert_eq!(doc.points, vec!["a", "b", "c"]);
        assert_eq!(doc.opens[0], Vec::<String>::new());
        assert_eq!(doc.opens[5], vec!["a", "b", "c"]);
        let back = doc.to_space().unwrap();
        assert_eq!(back, space);
    }

    #[test]
    fn unknown_labels_are_rejected() {
        let doc = SpaceDoc {
            points: vec!["a".into(), "b".into()],
            opens: vec![vec![], vec!["a".into(), "z".into()], vec!["a".into(), "b".into()]],
        };
        assert_eq!(
            doc.to_space().unwrap_err(),
            DocError::UnknownLabel("z".into())
        );
    }

    #[test]
    fn operation_docs_round_trip_through_every_kind() {
        let ctx = s1_context();
        let space = ctx.space();

        let pivot_doc = OperationDoc::from_operation(space, ctx.gamma());
        assert_eq!(
            pivot_doc,
            OperationDoc::Pivot {
                point: "b".to_owned()
            }
        );
        assert_eq!(&pivot_doc.to_operation(space).unwrap(), ctx.gamma());

        let custom = GammaOperation::from_table(
            space,
            &space
                .opens()
                .iter()
                .map(|&o| (o, space.full()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let doc = OperationDoc::from_operation(space, &custom);
        assert!(matches!(doc, OperationDoc::Table { .. }));
        assert_eq!(doc.to_operation(space).unwrap().table(), custom.table());
    }

    #[test]
    fn the_example_report_prints_the_documented_family() {
        let ctx = s1_context();
        let report = build_property_report(&ctx, VariantSet::default());
        let family_json = serde_json::to_string(&report.gamma_open_family).unwrap();
        assert_eq!(
            family_json,
            r#"[[],["b"],["a","b"],["a","c"],["a","b","c"]]"#
        );
        assert_eq!(report.variants.closed, "jankovic");
        assert_eq!(report.variants.open_op, "ogata");
        assert_eq!(report.variants.cover, "X");
        assert!(report.properties.gamma_normal);
        assert!(report.properties.normal);
        assert!(report.properties.gamma_locally_compact);
        assert!(!report.properties.gamma_t2);
        assert_eq!(
            report.witnesses.locally_compact_witnesses.as_ref().unwrap()[0],
            LcWitnessDoc {
                point: "a".to_owned(),
                nbd: vec!["a".to_owned(), "b".to_owned()]
            }
        );
    }

    #[test]
    fn one_point_reports_make_every_separation_property_true() {
        let space = FiniteSpace::with_default_labels(1, sets(&[0b0, 0b1])).unwrap();
        let gamma = GammaOperation::identity(&space);
        let ctx = GammaContext::of(space, gamma).unwrap();
        let report = build_property_report(&ctx, VariantSet::default());
        assert!(report.properties.t2);
        assert!(report.properties.regular);
        assert!(report.properties.normal);
        assert!(report.properties.gamma_t2);
        assert!(report.properties.gamma_star_regular);
        assert!(report.properties.gamma_normal);
    }

    #[test]
    fn instance_docs_round_trip_and_classify() {
        let ctx = s1_context();
        let context = FailureInstance::Context {
            space: ctx.space().clone(),
            gamma: ctx.gamma().clone(),
        };
        let pair = FailureInstance::ContextPair {
            space: ctx.space().clone(),
            gamma: ctx.gamma().clone(),
            a: PointSet::from_mask(0b010),
            b: PointSet::from_mask(0b101),
        };
        let map = FailureInstance::Map {
            domain_space: ctx.space().clone(),
            domain_gamma: ctx.gamma().clone(),
            codomain_space: ctx.space().clone(),
            codomain_gamma: ctx.gamma().clone(),
            table: vec![0, 1, 2],
        };
        for instance in [context, pair, map] {
            let doc = InstanceDoc::from_failure(&instance);
            let json = serde_json::to_string(&doc).unwrap();
            let parsed: InstanceDoc = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, doc);
            let back = parsed.to_failure().unwrap();
            assert_eq!(format!("{back:?}"), format!("{instance:?}"));
        }
    }

    #[test]
    fn verdict_docs_carry_exactly_six_keys() {
        let verdict = AuditVerdict {
            theorem: crate::audit::TheoremId::T6,
            variants: VariantSet::default(),
            scanned: 36,
            hyp_held: 36,
            failures: vec![],
            failure_total: 0,
        };
        let doc = VerdictDoc::from_verdict(&verdict);
        // Serialized text preserves the declared field order.
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            r#"{"theorem":"T6","variants":{"closed":"jankovic","open_op":"ogata","cover":"X"},"scanned":36,"hyp_held":36,"failures":[],"failure_total":0}"#
        );
    }

    #[test]
    fn worked_examples_doc_flags_survive_serialization() {
        let doc = build_worked_examples_doc(&worked_examples());
        let json = serde_json::to_string_pretty(&doc).unwrap();
        assert!(json.contains("conflict: identical space and operation"));
        assert!(json.contains("{d}"));
        assert_eq!(doc.gamma_open_family, doc.printed_gamma_open_family);
        assert_eq!(doc.gamma_nbd_systems, doc.printed_gamma_nbd_systems);
        let parsed: WorkedExamplesDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn map_docs_resolve_labels_and_reject_strays() {
        let ctx = s1_context();
        let doc = MapDoc::from_parts(
            ctx.space(),
            ctx.gamma(),
            ctx.space(),
            ctx.gamma(),
            &[1, 1, 2],
        );
        assert_eq!(doc.table["a"], "b");
        let parts = doc.to_parts().unwrap();
        assert_eq!(parts.table, vec![1, 1, 2]);

        let mut missing = doc.clone();
        missing.table.remove("a");
        assert!(matches!(
            missing.to_parts().unwrap_err(),
            DocError::Map(crate::error::MapError::MissingPoint(_))
        ));

        let mut stray = doc.clone();
        stray.table.insert("z".to_owned(), "a".to_owned());
        assert!(matches!(
            stray.to_parts().unwrap_err(),
            DocError::Map(crate::error::MapError::UnknownDomainPoint(_))
        ));

        let mut bad_image = doc;
        bad_image.table.insert("a".to_owned(), "z".to_owned());
        assert!(matches!(
            bad_image.to_parts().unwrap_err(),
            DocError::Map(crate::error::MapError::ImageOutOfSpace(_, _))
        ));
    }

    #[test]
    fn outcome_docs_distinguish_witness_and_exhaustion() {
        let ctx = s1_context();
        let witness = OutcomeDoc::from_outcome(&SearchOutcome::Witness {
            size: 3,
            space: ctx.space().clone(),
            gamma: ctx.gamma().clone(),
        });
        let json = serde_json::to_string(&witness).unwrap();
        let parsed: OutcomeDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, witness);

        let exhausted = OutcomeDoc::from_outcome(&SearchOutcome::Exhausted { scanned: 38 });
        let json = serde_json::to_string(&exhausted).unwrap();
        assert_eq!(json, r#"{"exhausted":true,"scanned":38}"#);
    }
}
