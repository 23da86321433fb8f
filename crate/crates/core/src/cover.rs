//! Exact minimum subcover extraction: given gamma-open sets covering the
//! carrier, pick the fewest whose gamma-closures cover a target region.

use crate::error::CoverError;
use crate::set::PointSet;
use crate::subspace::GammaView;

/// A certified solution: `chosen` indexes into the input cover, ascending,
/// and the closures of the chosen members jointly cover the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcoverCertificate {
    pub chosen: Vec<usize>,
    pub covered: PointSet,
}

/// Minimum-cardinality subfamily of `cover` whose gamma-closures cover
/// `target`. Among optimal answers the lexicographically first index set is
/// returned. Every member must belong to the view's gamma-open family and
/// the members must jointly cover the carrier.
pub fn minimal_gamma0_subcover<V: GammaView + ?Sized>(
    view: &V,
    cover: &[PointSet],
    target: PointSet,
) -> Result<SubcoverCertificate, CoverError> {
    let family = view.family();
    for (i, member) in cover.iter().enumerate() {
        if !family.contains(member) {
            return Err(CoverError::MemberNotGammaOpen(i));
        }
    }
    let union_all = cover
        .iter()
        .fold(PointSet::EMPTY, |acc, &v| acc.union(v));
    if !view.carrier().is_subset(union_all) {
        return Err(CoverError::NotACoverOfX);
    }

    // Only target points matter; each member contributes the part of its
    // closure lying inside the target.
    let closures: Vec<PointSet> = cover.iter().map(|&v| view.closure_of(v)).collect();
    let gains: Vec<PointSet> = closures.iter().map(|c| c.intersect(target)).collect();
    let reachable = gains.iter().fold(PointSet::EMPTY, |acc, &g| acc.union(g));
    if !target.is_subset(reachable) {
        return Err(CoverError::Uncoverable);
    }

    let optimum = optimal_size(&gains, target);
    let chosen = lex_first_of_size(&gains, target, optimum)
        .expect("a subfamily of the certified optimal size exists");
    let covered = chosen
        .iter()
        .fold(PointSet::EMPTY, |acc, &i| acc.union(closures[i]));
    Ok(SubcoverCertificate { chosen, covered })
}

/// Exact minimum number of members needed, by branch and bound seeded with
/// the greedy bound and pruned by coverage dominance.
fn optimal_size(gains: &[PointSet], target: PointSet) -> usize {
    if target.is_empty() {
        return 0;
    }
    // Dominated members (closure contribution contained in an earlier kept
    // member's) can never improve the optimum.
    let mut kept: Vec<PointSet> = Vec::new();
    for &g in gains {
        if g.is_empty() || kept.iter().any(|&k| g.is_subset(k)) {
            continue;
        }
        kept.retain(|&k| !k.is_subset(g));
        kept.push(g);
    }

    let mut best = greedy_size(&kept, target);
    branch(&kept, target, 0, &mut best);
    best
}

fn greedy_size(gains: &[PointSet], target: PointSet) -> usize {
    let mut uncovered = target;
    let mut count = 0;
    while !uncovered.is_empty() {
        let pick = gains
            .iter()
            .map(|&g| g.intersect(uncovered).len())
            .enumerate()
            .max_by_key(|&(i, len)| (len, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .expect("reachability was verified");
        uncovered = uncovered.minus(gains[pick]);
        count += 1;
    }
    count
}

fn branch(gains: &[PointSet], uncovered: PointSet, depth: usize, best: &mut usize) {
    if uncovered.is_empty() {
        *best = (*best).min(depth);
        return;
    }
    if depth + 1 >= *best {
        return;
    }
    let max_gain = gains
        .iter()
        .map(|&g| g.intersect(uncovered).len())
        .max()
        .unwrap_or(0);
    if max_gain == 0 {
        return;
    }
    if depth + uncovered.len().div_ceil(max_gain) >= *best {
        return;
    }
    // Branch on the hardest uncovered point: try each member containing it.
    let point = uncovered
        .iter()
        .min_by_key(|&p| gains.iter().filter(|g| g.contains(p)).count())
        .expect("uncovered is nonempty");
    for &g in gains.iter().filter(|g| g.contains(point)) {
        branch(gains, uncovered.minus(g), depth + 1, best);
    }
}

/// First index set of exactly `size` members covering the target, in
/// lexicographic order over ascending index sequences.
fn lex_first_of_size(gains: &[PointSet], target: PointSet, size: usize) -> Option<Vec<usize>> {
    // Suffix unions let the search abandon prefixes that can no longer
    // reach the target with the remaining members.
    let mut suffix = vec![PointSet::EMPTY; gains.len() + 1];
    for i in (0..gains.len()).rev() {
        suffix[i] = suffix[i + 1].union(gains[i]);
    }
    let mut chosen = Vec::with_capacity(size);
    fn go(
        gains: &[PointSet],
        suffix: &[PointSet],
        uncovered: PointSet,
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if uncovered.is_empty() && left == 0 {
            return true;
        }
        if left == 0 || !uncovered.is_subset(suffix[start]) {
            return false;
        }
        for i in start..gains.len() {
            chosen.push(i);
            if go(gains, suffix, uncovered.minus(gains[i]), i + 1, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if go(gains, &suffix, target, 0, size, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Brute-force optimum over every subfamily, for certification in tests.
pub fn brute_force_optimum<V: GammaView + ?Sized>(
    view: &V,
    cover: &[PointSet],
    target: PointSet,
) -> Option<usize> {
    let gains: Vec<PointSet> = cover
        .iter()
        .map(|&v| view.closure_of(v).intersect(target))
        .collect();
    let mut best: Option<usize> = None;
    for bits in 0u32..1 << cover.len() {
        let mut union = PointSet::EMPTY;
        for (i, &g) in gains.iter().enumerate() {
            if bits >> i & 1 == 1 {
                union = union.union(g);
            }
        }
        if target.is_subset(union) {
            let k = bits.count_ones() as usize;
            best = Some(best.map_or(k, |b: usize| b.min(k)));
        }
    }
    best
}
