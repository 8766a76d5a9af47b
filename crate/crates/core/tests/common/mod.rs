//! Random instance generators and brute-force oracles shared by the
//! integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use colfan_core::lp::DEFAULT_FM_CAP;
use colfan_core::{
    fourier_motzkin_with_cap, rat, ColoredCone, ColoredFan, Cone, GroupAction, GroupElement,
    LpProblem, RatMat, RatVec, SphericalDatum,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn int_vec(rng: &mut StdRng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.random_range(-bound..=bound)).collect()
}

/// Dimension in 1..=4, 1..=6 generators with entries in [-5, 5].
pub fn random_generators(rng: &mut StdRng) -> (usize, Vec<RatVec>) {
    let n = rng.random_range(1..=4);
    let k = rng.random_range(1..=6);
    let gens = (0..k)
        .map(|_| RatVec::from_ints(&int_vec(rng, n, 5)))
        .collect();
    (n, gens)
}

/// At most 6 variables and 12 constraints, mixing equalities and
/// inequalities with small integer data.
pub fn random_lp(rng: &mut StdRng) -> LpProblem {
    let n = rng.random_range(1..=6);
    let m = rng.random_range(0..=12);
    let mut lp = LpProblem::new(n);
    for _ in 0..m {
        let coeffs = RatVec::from_ints(&int_vec(rng, n, 4));
        let rhs = rat(rng.random_range(-6..=6));
        if rng.random_bool(0.2) {
            lp.add_eq(coeffs, rhs).unwrap();
        } else {
            lp.add_ge(coeffs, rhs).unwrap();
        }
    }
    lp
}

/// Fourier-Motzkin with a cap large enough for every generated instance.
pub fn fm(lp: &LpProblem) -> bool {
    fourier_motzkin_with_cap(lp, DEFAULT_FM_CAP.max(lp.num_vars())).unwrap()
}

/// `v ∈ cone(gens)` decided by Fourier-Motzkin on the multipliers.
pub fn fm_member(gens: &[RatVec], v: &RatVec) -> bool {
    let k = gens.len();
    let mut lp = LpProblem::new(k);
    for (i, target) in v.iter().enumerate() {
        let row = RatVec::new(gens.iter().map(|g| g[i].clone()).collect());
        lp.add_eq(row, target.clone()).unwrap();
    }
    for j in 0..k {
        lp.add_ge(RatVec::unit(k, j), rat(0)).unwrap();
    }
    fm(&lp)
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rays of a complete simplicial fan in the plane, in angular order.
pub fn random_complete_rays_2d(rng: &mut StdRng) -> Vec<Vec<i64>> {
    loop {
        let k = rng.random_range(3..=7);
        let mut rays: Vec<Vec<i64>> = Vec::new();
        while rays.len() < k {
            let v = int_vec(rng, 2, 5);
            let g = gcd(v[0], v[1]);
            if g == 0 {
                continue;
            }
            let v = vec![v[0] / g, v[1] / g];
            if !rays.contains(&v) {
                rays.push(v);
            }
        }
        sort_by_angle(&mut rays);
        // consecutive rays must turn strictly left by less than a half-turn
        if (0..k).all(|i| cross(&rays[i], &rays[(i + 1) % k]) > 0) {
            return rays;
        }
    }
}

fn sort_by_angle(rays: &mut [Vec<i64>]) {
    rays.sort_by(|a, b| {
        let ta = (a[1] as f64).atan2(a[0] as f64);
        let tb = (b[1] as f64).atan2(b[0] as f64);
        ta.partial_cmp(&tb).unwrap()
    });
}

/// Complete plane fan whose ray set is closed under the swap about the
/// diagonal, or not, at random.
pub fn random_symmetric_fan(rng: &mut StdRng) -> (SphericalDatum, ColoredFan) {
    loop {
        let mut rays = random_complete_rays_2d(rng);
        if rng.random_bool(0.5) {
            let swapped: Vec<Vec<i64>> = rays.iter().map(|r| vec![r[1], r[0]]).collect();
            for r in swapped {
                if !rays.contains(&r) {
                    rays.push(r);
                }
            }
            sort_by_angle(&mut rays);
        }
        if rays.len() <= 10 {
            return complete_fan_2d(&rays);
        }
    }
}

pub fn swap_action(d: &SphericalDatum) -> GroupAction {
    let m = RatMat::from_ints(&[&[0, 1], &[1, 0]]);
    GroupAction::new(d, vec![GroupElement::new(m, BTreeMap::new())]).unwrap()
}

pub fn conjugate_action(d: &SphericalDatum, a: &GroupAction, m: &RatMat) -> GroupAction {
    let inv = m.inverse().unwrap();
    let gens = a
        .generators()
        .iter()
        .map(|g| {
            GroupElement::new(
                m.mul(&g.matrix).unwrap().mul(&inv).unwrap(),
                g.color_perm.clone(),
            )
        })
        .collect();
    GroupAction::new(d, gens).unwrap()
}

pub fn complete_fan_2d(rays: &[Vec<i64>]) -> (SphericalDatum, ColoredFan) {
    let d = SphericalDatum::toric(2);
    let k = rays.len();
    let maximal = (0..k)
        .map(|i| {
            ColoredCone::colorless(
                Cone::from_int_generators(&[&rays[i], &rays[(i + 1) % k]], 2).unwrap(),
            )
        })
        .collect();
    let fan = ColoredFan::from_maximal(&d, maximal).unwrap();
    (d, fan)
}

/// A complete simplicial fan over a triangular prism whose square sides
/// are split by diagonals turning the same way around the axis.
pub fn twisted_prism() -> (SphericalDatum, ColoredFan) {
    let b: [&[i64]; 3] = [&[1, 0, -1], &[0, 1, -1], &[-1, -1, -1]];
    let t: [&[i64]; 3] = [&[1, 0, 1], &[0, 1, 1], &[-1, -1, 1]];
    let mut maximal: Vec<Vec<&[i64]>> = vec![b.to_vec(), t.to_vec()];
    for i in 0..3 {
        let j = (i + 1) % 3;
        maximal.push(vec![b[i], b[j], t[j]]);
        maximal.push(vec![b[i], t[j], t[i]]);
    }
    let d = SphericalDatum::toric(3);
    let cones = maximal
        .iter()
        .map(|g| ColoredCone::colorless(Cone::from_int_generators(g, 3).unwrap()))
        .collect();
    (d.clone(), ColoredFan::from_maximal(&d, cones).unwrap())
}

/// A product of random elementary matrices and coordinate sign flips.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> RatMat {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..rng.random_range(1..=6) {
        if n == 1 {
            rows[0][0] = -rows[0][0];
            continue;
        }
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        match rng.random_range(0..3) {
            0 => {
                let f = rng.random_range(-2..=2);
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += f * y;
                }
            }
            1 => rows.swap(i, j),
            _ => {
                for x in rows[i].iter_mut() {
                    *x = -*x;
                }
            }
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    RatMat::from_ints(&refs)
}

pub fn conjugate_datum(d: &SphericalDatum, m: &RatMat) -> SphericalDatum {
    let colors = d
        .colors()
        .iter()
        .map(|c| colfan_core::Color {
            name: c.name.clone(),
            rho: m.mul_vec(&c.rho).unwrap(),
        })
        .collect();
    SphericalDatum::new(d.dim(), d.valuation_cone().image(m).unwrap(), colors).unwrap()
}

pub fn conjugate_fan(fan: &ColoredFan, m: &RatMat) -> ColoredFan {
    ColoredFan::new(
        fan.iter()
            .map(|cc| ColoredCone::new(cc.cone.image(m).unwrap(), cc.colors.iter().cloned()))
            .collect(),
    )
}
