mod common;

use colfan_core::{Cone, RatMat, RatVec};
use proptest::prelude::*;

fn generators() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-5i64..=5, n), 1..=6),
        )
    })
}

fn cone_of(n: usize, gens: &[Vec<i64>]) -> Cone {
    let gens: Vec<RatVec> = gens.iter().map(|g| RatVec::from_ints(g)).collect();
    Cone::from_generators(&gens, n).unwrap()
}

fn same_dim_cones(k: usize) -> impl Strategy<Value = (usize, Vec<Vec<Vec<i64>>>)> {
    (1usize..=3).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(
                prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=4),
                k,
            ),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_and_inequalities_round_trip((n, gens) in generators()) {
        let c = cone_of(n, &gens);
        let back = Cone::from_inequalities(c.inequalities(), n).unwrap();
        prop_assert_eq!(&back, &c);
        let again = Cone::from_generators(&c.generators(), n).unwrap();
        prop_assert_eq!(&again, &c);
    }

    #[test]
    fn membership_matches_multiplier_oracle(
        (n, gens, v) in generators().prop_flat_map(|(n, g)| {
            (Just(n), Just(g), prop::collection::vec(-5i64..=5, n))
        })
    ) {
        let c = cone_of(n, &gens);
        let gens: Vec<RatVec> = gens.iter().map(|g| RatVec::from_ints(g)).collect();
        let v = RatVec::from_ints(&v);
        prop_assert_eq!(c.contains(&v).unwrap(), common::fm_member(&gens, &v));
    }

    #[test]
    fn every_generator_is_contained((n, gens) in generators()) {
        let c = cone_of(n, &gens);
        for g in &gens {
            prop_assert!(c.contains(&RatVec::from_ints(g)).unwrap());
        }
    }

    #[test]
    fn interior_point_is_in_relative_interior((n, gens) in generators()) {
        let c = cone_of(n, &gens);
        prop_assert!(c.in_relative_interior(&c.interior_point()).unwrap());
    }

    #[test]
    fn faces_are_faces_and_closed_under_intersection((n, gens) in generators()) {
        let c = cone_of(n, &gens);
        let faces = c.faces();
        prop_assert!(faces.contains(&c));
        for f in &faces {
            prop_assert!(f.is_face_of(&c).unwrap());
        }
        for f in &faces {
            for g in &faces {
                prop_assert!(faces.contains(&f.intersect(g).unwrap()));
            }
        }
    }

    #[test]
    fn simplicial_cones_have_two_to_the_k_faces(
        (n, gens) in (1usize..=4).prop_flat_map(|n| {
            (Just(n), (1..=n).prop_flat_map(move |k| {
                prop::collection::vec(prop::collection::vec(-5i64..=5, n), k)
            }))
        })
    ) {
        let m = RatMat::new(gens.iter().map(|g| RatVec::from_ints(g)).collect(), n).unwrap();
        prop_assume!(m.rank() == gens.len());
        let c = cone_of(n, &gens);
        prop_assert_eq!(c.faces().len(), 1 << gens.len());
    }

    #[test]
    fn intersection_laws((n, cs) in same_dim_cones(3)) {
        let a = cone_of(n, &cs[0]);
        let b = cone_of(n, &cs[1]);
        let c = cone_of(n, &cs[2]);
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        let ab = a.intersect(&b).unwrap();
        prop_assert!(ab.is_subset_of(&a).unwrap() && ab.is_subset_of(&b).unwrap());
    }

    #[test]
    fn image_under_unimodular_map(seed in any::<u64>(), (n, gens) in generators()) {
        let mut rng = common::rng(seed);
        let m = common::random_unimodular(&mut rng, n);
        let inv = m.inverse().unwrap();
        let c = cone_of(n, &gens);
        let img = c.image(&m).unwrap();
        let mapped: Vec<RatVec> = gens
            .iter()
            .map(|g| m.mul_vec(&RatVec::from_ints(g)).unwrap())
            .collect();
        prop_assert_eq!(&img, &Cone::from_generators(&mapped, n).unwrap());
        prop_assert_eq!(img.image(&inv).unwrap(), c.clone());
        prop_assert_eq!(img.faces().len(), c.faces().len());
        prop_assert_eq!(img.dim(), c.dim());
    }
}

#[test]
fn square_pyramid_face_lattice() {
    let c = Cone::from_int_generators(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]], 3)
        .unwrap();
    let by_dim: Vec<usize> = (0..=3)
        .map(|d| c.faces().iter().filter(|f| f.dim() == d).count())
        .collect();
    assert_eq!(by_dim, vec![1, 4, 4, 1]);
}
