//! Property tests for the soft set algebra over assorted ground shapes.

use std::sync::Arc;

use proptest::prelude::*;
use softtop::ground::Ground;
use softtop::parse::parse_soft_set;
use softtop::set::SoftSet;

const SHAPES: [(usize, usize); 7] = [(1, 2), (2, 1), (1, 3), (2, 2), (3, 2), (2, 4), (1, 8)];

fn ground_for(shape_ix: usize) -> Arc<Ground> {
    let (m, k) = SHAPES[shape_ix % SHAPES.len()];
    Ground::canonical(m, k)
}

fn set_on(ground: &Arc<Ground>, raw: u64) -> SoftSet {
    SoftSet::from_mask(ground, raw & ((1u64 << ground.cells()) - 1))
}

proptest! {
    #[test]
    fn de_morgan(shape in 0usize..SHAPES.len(), a in any::<u64>(), b in any::<u64>()) {
        let g = ground_for(shape);
        let (a, b) = (set_on(&g, a), set_on(&g, b));
        prop_assert_eq!(
            a.union(&b).unwrap().complement(),
            a.complement().intersection(&b.complement()).unwrap()
        );
        prop_assert_eq!(
            a.intersection(&b).unwrap().complement(),
            a.complement().union(&b.complement()).unwrap()
        );
    }

    #[test]
    fn lattice_laws(
        shape in 0usize..SHAPES.len(),
        a in any::<u64>(),
        b in any::<u64>(),
        c in any::<u64>(),
    ) {
        let g = ground_for(shape);
        let (a, b, c) = (set_on(&g, a), set_on(&g, b), set_on(&g, c));
        // Associativity.
        prop_assert_eq!(
            a.union(&b).unwrap().union(&c).unwrap(),
            a.union(&b.union(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap()
        );
        // Commutativity.
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
        // Idempotence.
        prop_assert_eq!(a.union(&a).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&a).unwrap(), a.clone());
        // Absorption.
        prop_assert_eq!(a.union(&a.intersection(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&a.union(&b).unwrap()).unwrap(), a.clone());
    }

    #[test]
    fn complement_is_involution(shape in 0usize..SHAPES.len(), a in any::<u64>()) {
        let g = ground_for(shape);
        let a = set_on(&g, a);
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert!(a.is_disjoint(&a.complement()).unwrap());
        prop_assert!(a.union(&a.complement()).unwrap().is_absolute());
    }

    #[test]
    fn subset_order(shape in 0usize..SHAPES.len(), a in any::<u64>(), b in any::<u64>()) {
        let g = ground_for(shape);
        let (a, b) = (set_on(&g, a), set_on(&g, b));
        prop_assert!(a.intersection(&b).unwrap().is_subset(&a).unwrap());
        prop_assert!(a.is_subset(&a.union(&b).unwrap()).unwrap());
        if a.is_subset(&b).unwrap() && b.is_subset(&a).unwrap() {
            prop_assert_eq!(a.clone(), b.clone());
        }
    }

    #[test]
    fn sets_are_unions_of_their_points(shape in 0usize..SHAPES.len(), a in any::<u64>()) {
        let g = ground_for(shape);
        let a = set_on(&g, a);
        let points: Vec<SoftSet> = a.points().iter().map(|p| p.to_set()).collect();
        prop_assert_eq!(SoftSet::union_all(&g, points.iter()).unwrap(), a);
    }

    #[test]
    fn stability_is_closed_under_boolean_ops(
        shape in 0usize..SHAPES.len(),
        elems_a in any::<u64>(),
        elems_b in any::<u64>(),
    ) {
        let g = ground_for(shape);
        // Build stable sets by repeating one element pattern per parameter.
        let stable = |elems: u64| {
            let mut acc = SoftSet::from_mask(&g, 0);
            for z in 0..g.n_elems() {
                if elems & (1 << z) != 0 {
                    let name = g.universe()[z].clone();
                    acc = acc.union(&g.soft_element(&name).unwrap()).unwrap();
                }
            }
            acc
        };
        let (a, b) = (stable(elems_a), stable(elems_b));
        prop_assert!(a.is_stable());
        prop_assert!(a.union(&b).unwrap().is_stable());
        prop_assert!(a.intersection(&b).unwrap().is_stable());
        prop_assert!(a.complement().is_stable());
    }

    #[test]
    fn literal_round_trip(shape in 0usize..SHAPES.len(), a in any::<u64>()) {
        let g = ground_for(shape);
        let a = set_on(&g, a);
        prop_assert_eq!(parse_soft_set(&g, &a.to_string()).unwrap(), a);
    }
}
