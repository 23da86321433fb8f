//! Operation pools for sweeps: the named builtin operations, the full
//! expansive-table enumeration, and seeded random sampling for sizes where
//! exhaustion is impossible.

use crate::gamma::GammaOperation;
use crate::set::PointSet;
use crate::space::FiniteSpace;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::HashSet;

/// How to populate the operation pool for one topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoolSpec {
    Exhaustive,
    Builtins,
    Sample { k: usize },
}

impl PoolSpec {
    pub fn describe(&self) -> String {
        match self {
            PoolSpec::Exhaustive => "exhaustive".to_owned(),
            PoolSpec::Builtins => "builtins".to_owned(),
            PoolSpec::Sample { k } => format!("sample({k})"),
        }
    }
}

/// The named operations, deduplicated by table with the first name kept:
/// identity, closure, interior-of-closure, then one pivot per point.
pub fn builtin_operations(space: &FiniteSpace) -> Vec<GammaOperation> {
    let mut ops = vec![
        GammaOperation::identity(space),
        GammaOperation::closure_op(space),
        GammaOperation::int_closure_op(space),
    ];
    for p in 0..space.n() {
        ops.push(GammaOperation::pivot(space, p as u8).expect("point is in range"));
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    ops.retain(|op| seen.insert(table_key(op)));
    ops
}

fn table_key(op: &GammaOperation) -> Vec<u32> {
    op.table().iter().map(|s| s.mask()).collect()
}

/// Number of expansive operation tables on the space: the product over
/// opens V of 2^(n - |V|).
pub fn exhaustive_count(space: &FiniteSpace) -> u64 {
    space
        .opens()
        .iter()
        .map(|v| 1u64 << (space.n() - v.len()))
        .product()
}

/// Every expansive operation table, in table-lexicographic order. The
/// identity comes first. Intended for n <= 3 (the 3-point discrete
/// topology already yields 4096 tables).
pub fn exhaustive_operations(space: &FiniteSpace) -> Vec<GammaOperation> {
    let full = space.full();
    // Per open set, its possible values ascending; indices into these lists
    // run through a mixed-radix odometer with the last open fastest.
    let choices: Vec<Vec<PointSet>> = space
        .opens()
        .iter()
        .map(|&v| {
            PointSet::subsets_of(full.minus(v))
                .map(|extra| v.union(extra))
                .collect()
        })
        .collect();
    let mut digits = vec![0usize; choices.len()];
    let mut out = Vec::with_capacity(exhaustive_count(space) as usize);
    loop {
        let table: Vec<PointSet> = digits
            .iter()
            .zip(&choices)
            .map(|(&d, options)| options[d])
            .collect();
        out.push(GammaOperation::from_aligned(table));
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < choices[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Mixing constant for deriving per-topology sampling streams.
const SEED_STRIDE: u64 = 0x9E3779B97F4A7C15;

/// Builtins followed by up to `k` distinct random expansive tables. The
/// stream depends only on (seed, topo_index), never on scheduling. When
/// the exhaustive pool is no bigger than the request, it is returned
/// instead.
pub fn sample_operations(
    space: &FiniteSpace,
    topo_index: usize,
    k: usize,
    seed: u64,
) -> Vec<GammaOperation> {
    let builtins = builtin_operations(space);
    if exhaustive_count(space) <= (builtins.len() + k) as u64 {
        return exhaustive_operations(space);
    }
    let mut rng = ChaCha20Rng::seed_from_u64(
        seed ^ (topo_index as u64).wrapping_mul(SEED_STRIDE),
    );
    let mut seen: HashSet<Vec<u32>> = builtins.iter().map(table_key).collect();
    let mut pool = builtins;
    let full = space.full();
    let mut attempts = 0usize;
    let attempt_cap = k.saturating_mul(20).max(64);
    let mut drawn = 0usize;
    while drawn < k && attempts < attempt_cap {
        attempts += 1;
        let table: Vec<PointSet> = space
            .opens()
            .iter()
            .map(|&v| {
                let extra = PointSet::from_mask(rng.next_u32() & full.minus(v).mask());
                v.union(extra)
            })
            .collect();
        let op = GammaOperation::from_aligned(table);
        if seen.insert(table_key(&op)) {
            pool.push(op);
            drawn += 1;
        }
    }
    pool
}

/// Dispatch on the pool spec for one topology.
pub fn pool_operations(
    space: &FiniteSpace,
    topo_index: usize,
    spec: PoolSpec,
    seed: u64,
) -> Vec<GammaOperation> {
    match spec {
        PoolSpec::Exhaustive => exhaustive_operations(space),
        PoolSpec::Builtins => builtin_operations(space),
        PoolSpec::Sample { k } => sample_operations(space, topo_index, k, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::OpTag;
    use crate::space::enumerate_topologies;

    fn sets(masks: &[u32]) -> Vec<PointSet> {
        masks.iter().map(|&m| PointSet::from_mask(m)).collect()
    }

    fn s1() -> FiniteSpace {
        FiniteSpace::with_default_labels(3, sets(&[0b000, 0b001, 0b010, 0b011, 0b101, 0b111]))
            .unwrap()
    }

    #[test]
    fn builtins_collapse_to_identity_on_discrete_spaces() {
        let discrete = FiniteSpace::with_default_labels(
            3,
            (0u32..8).map(PointSet::from_mask).collect(),
        )
        .unwrap();
        let ops = builtin_operations(&discrete);
        assert_eq!(ops.len(), 1);
        assert_eq!(ops[0].tag(), OpTag::Identity);
    }

    #[test]
    fn builtins_keep_three_distinct_tables_on_the_example_space() {
        let ops = builtin_operations(&s1());
        let tags: Vec<OpTag> = ops.iter().map(|o| o.tag()).collect();
        assert_eq!(tags, vec![OpTag::Identity, OpTag::Closure, OpTag::Pivot(1)]);
    }

    #[test]
    fn exhaustive_counts_match_the_closed_form() {
        assert_eq!(exhaustive_count(&s1()), 512);
        let discrete = FiniteSpace::with_default_labels(
            3,
            (0u32..8).map(PointSet::from_mask).collect(),
        )
        .unwrap();
        assert_eq!(exhaustive_count(&discrete), 4096);

        let total: u64 = enumerate_topologies(2)
            .unwrap()
            .iter()
            .map(exhaustive_count)
            .sum();
        assert_eq!(total, 36);
    }

    #[test]
    fn exhaustive_enumeration_is_complete_distinct_and_identity_first() {
        let space = s1();
        let ops = exhaustive_operations(&space);
        assert_eq!(ops.len(), 512);
        assert_eq!(ops[0].table(), space.opens());
        let mut seen = HashSet::new();
        for op in &ops {
            op.validate(&space).unwrap();
            assert!(seen.insert(table_key(op)));
        }
    }

    #[test]
    fn exhaustive_enumeration_is_table_lexicographic() {
        let space = FiniteSpace::with_default_labels(2, sets(&[0b00, 0b01, 0b11])).unwrap();
        let ops = exhaustive_operations(&space);
        let tables: Vec<Vec<u32>> = ops.iter().map(table_key).collect();
        assert_eq!(
            tables,
            vec![
                vec![0b00, 0b01, 0b11],
                vec![0b00, 0b11, 0b11],
                vec![0b01, 0b01, 0b11],
                vec![0b01, 0b11, 0b11],
                vec![0b10, 0b01, 0b11],
                vec![0b10, 0b11, 0b11],
                vec![0b11, 0b01, 0b11],
                vec![0b11, 0b11, 0b11],
            ]
        );
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        let space = s1();
        let a = sample_operations(&space, 3, 40, 1729);
        let b = sample_operations(&space, 3, 40, 1729);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.table(), y.table());
        }
        let mut seen = HashSet::new();
        for op in &a {
            op.validate(&space).unwrap();
            assert!(seen.insert(table_key(op)));
        }
        let builtin_count = builtin_operations(&space).len();
        assert_eq!(a.len(), builtin_count + 40);

        let other_seed = sample_operations(&space, 3, 40, 1730);
        assert_ne!(
            a.iter().map(table_key).collect::<Vec<_>>(),
            other_seed.iter().map(table_key).collect::<Vec<_>>()
        );
    }

    #[test]
    fn small_sample_requests_fall_back_to_exhaustion() {
        let indiscrete = FiniteSpace::with_default_labels(2, sets(&[0b00, 0b11])).unwrap();
        let pool = sample_operations(&indiscrete, 0, 100, 7);
        assert_eq!(pool.len() as u64, exhaustive_count(&indiscrete));
        assert_eq!(pool.len(), 4);
    }
}
