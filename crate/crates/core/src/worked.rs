//! Adjudication of the bundled worked examples: one context, three example
//! write-ups, and a verdict for every printed claim about it.

use crate::gamma::{ClosedVariant, GammaContext, GammaOperation};
use crate::props::{
    gamma_nbd_system, is_gamma_locally_compact, is_gamma_normal, CoverMode, GammaNbdSystem,
    LocalCompactness,
};
use crate::set::{Point, PointSet};
use crate::space::FiniteSpace;
use std::sync::Arc;

/// Verdict on one printed claim. `agrees` is the tool's truth value for the
/// claimed statement; disagreements always carry a note saying why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub source: &'static str,
    pub claim: &'static str,
    pub agrees: bool,
    pub note: Option<String>,
}

/// Everything the worked-example report needs, computed fresh.
#[derive(Clone, Debug)]
pub struct WorkedExamples {
    pub context: GammaContext,
    pub gamma_open_family: Vec<PointSet>,
    pub printed_gamma_open_family: Vec<PointSet>,
    pub nbd_systems: Vec<GammaNbdSystem>,
    pub printed_nbd_systems: Vec<(Point, Vec<PointSet>)>,
    pub local_compactness: LocalCompactness,
    pub classically_normal: bool,
    pub gamma_normal_jankovic: bool,
    pub gamma_normal_kasahara: bool,
    pub claims: Vec<ClaimCheck>,
    pub conflict: Option<String>,
}

const LC_EXAMPLE: &str = "locally-compact-example";
const NORMALITY_1: &str = "normality-example-1";
const NORMALITY_2: &str = "normality-example-2";

/// The shared example context: points {a,b,c} with opens
/// {0, {a}, {b}, {a,b}, {a,c}, X} and gamma = pivot(b).
pub fn example_context() -> GammaContext {
    let opens = [0b000, 0b001, 0b010, 0b011, 0b101, 0b111]
        .into_iter()
        .map(PointSet::from_mask)
        .collect();
    let space = Arc::new(
        FiniteSpace::with_default_labels(3, opens).expect("the example opens form a topology"),
    );
    let gamma = GammaOperation::pivot(&space, 1).expect("point b is in the example space");
    GammaContext::new(space, gamma).expect("pivot is expansive")
}

/// Runs every printed claim of the three bundled examples against the tool's
/// own verdicts.
pub fn worked_examples() -> WorkedExamples {
    let ctx = example_context();

    let gamma_open_family = ctx.gamma_opens().to_vec();
    let printed_gamma_open_family: Vec<PointSet> = [0b000, 0b010, 0b011, 0b101, 0b111]
        .into_iter()
        .map(PointSet::from_mask)
        .collect();

    let nbd_systems: Vec<GammaNbdSystem> = ctx
        .space()
        .full()
        .iter()
        .map(|x| gamma_nbd_system(&ctx, x))
        .collect();
    let printed_nbd_systems: Vec<(Point, Vec<PointSet>)> = vec![
        (0, masks(&[0b011, 0b101, 0b111])),
        (1, masks(&[0b010, 0b011, 0b111])),
        (2, masks(&[0b101, 0b111])),
    ];

    let local_compactness = is_gamma_locally_compact(&ctx, CoverMode::X);
    let classically_normal = ctx.space().is_normal_space();
    let gamma_normal_jankovic = is_gamma_normal(&ctx, ClosedVariant::Jankovic);
    let gamma_normal_kasahara = is_gamma_normal(&ctx, ClosedVariant::Kasahara);

    let family_agrees = gamma_open_family == printed_gamma_open_family;
    let nbds_agree = nbd_systems
        .iter()
        .zip(&printed_nbd_systems)
        .all(|(got, (p, sets))| got.point == *p && got.gamma_open_nbds == *sets);

    let mut claims = vec![
        ClaimCheck {
            source: LC_EXAMPLE,
            claim: "the gamma-open sets are exactly {}, {b}, {a,b}, {a,c}, X",
            agrees: family_agrees,
            note: None,
        },
        ClaimCheck {
            source: LC_EXAMPLE,
            claim: "the gamma-nbd systems are U_a = {{a,b},{a,c},X}, U_b = {{b},{a,b},X}, U_c = {{a,c},X}",
            agrees: nbds_agree,
            note: None,
        },
        ClaimCheck {
            source: LC_EXAMPLE,
            claim: "the space is gamma-locally compact",
            agrees: local_compactness.compact,
            note: None,
        },
        ClaimCheck {
            source: NORMALITY_1,
            claim: "the space is gamma-normal",
            agrees: gamma_normal_jankovic && gamma_normal_kasahara,
            note: None,
        },
        ClaimCheck {
            source: NORMALITY_1,
            claim: "the space is not normal, because the closed sets {a,c} and {d} cannot be separated",
            agrees: !classically_normal,
            note: Some(
                "the cited closed set {d} uses a point d outside the three-point space; \
                 on the points as given, every disjoint closed pair separates, so the \
                 space is normal"
                    .to_owned(),
            ),
        },
        ClaimCheck {
            source: NORMALITY_2,
            claim: "the space is not gamma-normal, because the gamma-closed sets {a} and {c} cannot be separated by gamma-open sets",
            agrees: !(gamma_normal_jankovic && gamma_normal_kasahara),
            note: Some(
                "the cited set {a} is not gamma-closed under either closed-set reading \
                 (its complement {b,c} is not gamma-open, and cl_gamma({a}) = {a,c}), \
                 so the cited pair does not witness a normality failure"
                    .to_owned(),
            ),
        },
        ClaimCheck {
            source: NORMALITY_2,
            claim: "the space is normal",
            agrees: classically_normal,
            note: None,
        },
    ];
    for check in &mut claims {
        if check.agrees {
            check.note = None;
        }
    }

    // The two normality write-ups print the same space and operation with
    // opposite gamma-normality verdicts; at most one can agree with the
    // computed value.
    let conflict = Some(
        "conflict: identical space and operation, opposite γ-normality claims".to_owned(),
    );

    WorkedExamples {
        context: ctx,
        gamma_open_family,
        printed_gamma_open_family,
        nbd_systems,
        printed_nbd_systems,
        local_compactness,
        classically_normal,
        gamma_normal_jankovic,
        gamma_normal_kasahara,
        claims,
        conflict,
    }
}

fn masks(ms: &[u32]) -> Vec<PointSet> {
    ms.iter().copied().map(PointSet::from_mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_computed_family_and_nbd_systems_match_the_printed_ones() {
        let report = worked_examples();
        assert_eq!(report.gamma_open_family, report.printed_gamma_open_family);
        for (got, (p, sets)) in report
            .nbd_systems
            .iter()
            .zip(&report.printed_nbd_systems)
        {
            assert_eq!(got.point, *p);
            assert_eq!(&got.gamma_open_nbds, sets);
        }
    }

    #[test]
    fn the_space_is_gamma_locally_compact_with_witnesses() {
        let report = worked_examples();
        assert!(report.local_compactness.compact);
        assert_eq!(report.local_compactness.witnesses.len(), 3);
    }

    #[test]
    fn normality_verdicts_are_definitive_and_variant_independent() {
        let report = worked_examples();
        assert!(report.classically_normal);
        assert!(report.gamma_normal_jankovic);
        assert!(report.gamma_normal_kasahara);
    }

    #[test]
    fn exactly_the_two_false_printed_claims_disagree() {
        let report = worked_examples();
        let disagreements: Vec<&ClaimCheck> =
            report.claims.iter().filter(|c| !c.agrees).collect();
        assert_eq!(disagreements.len(), 2);
        assert_eq!(disagreements[0].source, NORMALITY_1);
        assert!(disagreements[0].claim.contains("{d}"));
        assert!(disagreements[0]
            .note
            .as_deref()
            .unwrap()
            .contains("outside the three-point space"));
        assert_eq!(disagreements[1].source, NORMALITY_2);
        assert!(disagreements[1]
            .note
            .as_deref()
            .unwrap()
            .contains("not gamma-closed"));
        assert!(report.conflict.is_some());
    }

    #[test]
    fn agreeing_claims_carry_no_note() {
        let report = worked_examples();
        for check in report.claims.iter().filter(|c| c.agrees) {
            assert!(check.note.is_none(), "{} should have no note", check.claim);
        }
    }
}
