//! Laws every driver must satisfy, on random representable sets.

use ctopo_core::maps_covers::{image_of_set, preimage, PiecewiseAffineMap};
use ctopo_core::random::Gen;
use ctopo_core::{rat, IdealKind, IdealTopology, RealIdealSpace, RealSet, Topology, TopologySpec};
use proptest::prelude::*;

fn case(seed: u64) -> (TopologySpec, RealSet, RealSet) {
    let mut g = Gen::new(seed);
    let t = g.topology();
    let (a, b) = if matches!(t.kind(), ctopo_core::TopologyKind::OverlappingInterval) {
        let mut u = Gen::unit(seed ^ 0x9e37);
        (u.realset_in(&t, 3), u.realset_in(&t, 3))
    } else {
        (g.realset_in(&t, 3), g.realset_in(&t, 3))
    };
    (t, a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn boolean_algebra(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (a, b, c) = (g.realset(3), g.realset(3), g.realset(3));
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b.union(&c)), a.intersect(&b).union(&a.intersect(&c)));
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
        prop_assert_eq!(a.union(&a.intersect(&b)), a.clone());
        prop_assert_eq!(a.difference(&b), a.intersect(&b.complement()));
        prop_assert!(a.intersect(&a.complement()).is_empty());
        prop_assert!(a.union(&a.complement()).is_full());
        prop_assert_eq!(a.is_subset(&b), a.union(&b) == b);
    }

    #[test]
    fn kuratowski_axioms(seed in any::<u64>()) {
        let (t, a, b) = case(seed);
        let x = t.universe_set().clone();
        prop_assert!(t.closure(&RealSet::empty()).is_empty());
        prop_assert!(a.is_subset(&t.closure(&a)));
        prop_assert_eq!(t.closure(&t.closure(&a)), t.closure(&a));
        prop_assert_eq!(t.closure(&a.union(&b)), t.closure(&a).union(&t.closure(&b)));
        prop_assert_eq!(t.interior(&x), x.clone());
        prop_assert_eq!(t.interior(&a), x.difference(&t.closure(&x.difference(&a))), "in {}", t);
        prop_assert_eq!(t.closure(&a), a.union(&t.derived(&a)), "derived law in {}", t);
        prop_assert_eq!(t.is_open(&a), t.interior(&a) == a);
        prop_assert!(t.is_open(&t.interior(&a)));
    }

    #[test]
    fn ideal_layer(seed in any::<u64>(), countable in any::<bool>()) {
        let (t, a, b) = case(seed);
        let ideal = if countable { IdealKind::Countable } else { IdealKind::Finite };
        let sp = RealIdealSpace::new(t.clone(), ideal);
        let x = t.universe_set().clone();
        let (ia, ca) = (sp.ideal_interior(&a), sp.ideal_closure(&a));
        prop_assert!(ia.is_subset(&t.interior(&a)), "intI ⊆ int in {}", t);
        prop_assert!(t.closure(&a).is_subset(&ca));
        prop_assert!(t.derived(&a).is_subset(&sp.ideal_derived(&a)));
        prop_assert_eq!(sp.ideal_interior(&ia), ia.clone());
        prop_assert_eq!(sp.ideal_interior(&a.intersect(&b)), ia.intersect(&sp.ideal_interior(&b)));
        prop_assert_eq!(sp.ideal_derived(&a.union(&b)), sp.ideal_derived(&a).union(&sp.ideal_derived(&b)));
        let (i, e, f) = sp.decomposition(&a);
        prop_assert_eq!(i.union(&e).union(&f), x.clone());
        prop_assert!(i.is_disjoint(&e) && i.is_disjoint(&f) && e.is_disjoint(&f));
        let c = sp.ideal_classify(&a);
        prop_assert_eq!(c.is_ideal_open, sp.ideal_classify(&x.difference(&a)).is_ideal_closed);
        if c.is_ideal_open {
            prop_assert!(t.is_open(&a));
            prop_assert_eq!(ia, a.clone());
        }
        let finer = RealIdealSpace::new(t.clone(), IdealKind::Finite);
        let coarser = RealIdealSpace::new(t, IdealKind::Countable);
        if finer.is_ideal_open(&a) {
            prop_assert!(coarser.is_ideal_open(&a));
        }
    }

    #[test]
    fn preimage_is_a_homomorphism(seed in any::<u64>(), which in 0usize..4) {
        let mut g = Gen::new(seed);
        let h = [
            PiecewiseAffineMap::identity(),
            PiecewiseAffineMap::affine(rat(-3, 2), rat(1, 2)),
            PiecewiseAffineMap::step(rat(1, 2), rat(0, 1), rat(1, 1)),
            PiecewiseAffineMap::constant(rat(1, 2)),
        ][which].clone();
        let (a, b) = (g.realset(3), g.realset(3));
        prop_assert_eq!(preimage(&h, &a.union(&b)), preimage(&h, &a).union(&preimage(&h, &b)));
        prop_assert_eq!(preimage(&h, &a.intersect(&b)), preimage(&h, &a).intersect(&preimage(&h, &b)));
        prop_assert_eq!(preimage(&h, &a.complement()), h.domain().difference(&preimage(&h, &a)));
        prop_assert!(a.is_subset(&preimage(&h, &image_of_set(&h, &a))));
        let within = a.intersect(&image_of_set(&h, &RealSet::reals()));
        prop_assert!(within.is_subset(&image_of_set(&h, &preimage(&h, &within))));
    }
}
