mod common;

use std::collections::BTreeMap;

use colfan_core::{
    has_k_form, is_fan_invariant, is_quasiprojective, validate_action, ColoredCone, ColoredFan,
    Cone, GroupAction, GroupElement, RatMat, SphericalDatum,
};

fn swap() -> RatMat {
    RatMat::from_ints(&[&[0, 1], &[1, 0]])
}

fn action(d: &SphericalDatum, ms: &[RatMat]) -> GroupAction {
    let gens = ms
        .iter()
        .map(|m| GroupElement::new(m.clone(), BTreeMap::new()))
        .collect();
    GroupAction::new(d, gens).unwrap()
}

#[test]
fn conjugation_covariance() {
    let mut rng = common::rng(23);
    let mut seen = [0usize; 2];
    for _ in 0..20 {
        let (d, fan) = common::random_symmetric_fan(&mut rng);
        let a = action(&d, &[swap()]);
        let m = common::random_unimodular(&mut rng, 2);
        let cd = common::conjugate_datum(&d, &m);
        let cf = common::conjugate_fan(&fan, &m);
        let ca = common::conjugate_action(&cd, &a, &m);
        assert!(validate_action(&cd, &ca).unwrap().passed());
        let before = has_k_form(&d, &a, &fan).unwrap();
        let after = has_k_form(&cd, &ca, &cf).unwrap();
        assert_eq!(before.verdict, after.verdict);
        assert_eq!(before.invariant, after.invariant);
        seen[usize::from(before.verdict)] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn identity_action_reduces_to_simple_fans() {
    let mut rng = common::rng(29);
    for _ in 0..10 {
        let (d, fan) = common::random_symmetric_fan(&mut rng);
        let r = has_k_form(&d, &GroupAction::trivial(&d), &fan).unwrap();
        assert!(r.verdict);
        for cc in fan.iter() {
            let simple = ColoredFan::from_maximal(&d, vec![cc.clone()]).unwrap();
            assert!(is_quasiprojective(&d, &simple).unwrap().verdict);
        }
    }
    // the twisted prism is not projective, yet every simple subfan is
    let (d, fan) = common::twisted_prism();
    assert!(
        has_k_form(&d, &GroupAction::trivial(&d), &fan)
            .unwrap()
            .verdict
    );
}

#[test]
fn invariance_is_preserved_by_group_elements() {
    let d = SphericalDatum::toric(2);
    let rot = RatMat::from_ints(&[&[0, -1], &[1, 0]]);
    let a = action(&d, &[rot]);
    assert_eq!(a.order(), 4);
    let rays = vec![
        vec![1, 0],
        vec![1, 1],
        vec![0, 1],
        vec![-1, 1],
        vec![-1, 0],
        vec![-1, -1],
        vec![0, -1],
        vec![1, -1],
    ];
    let (d, fan) = common::complete_fan_2d(&rays);
    assert!(is_fan_invariant(&d, &a, &fan).unwrap());
    let r = has_k_form(&d, &a, &fan).unwrap();
    assert!(r.verdict);

    let lopsided = ColoredFan::from_maximal(
        &d,
        vec![ColoredCone::colorless(
            Cone::from_int_generators(&[&[1, 0], &[1, 1]], 2).unwrap(),
        )],
    )
    .unwrap();
    let r = has_k_form(&d, &a, &lopsided).unwrap();
    assert!(!r.verdict && !r.invariant);
    assert!(r.reasons[0].starts_with("(a) fan not Γ-invariant, offending cone: "));
}
