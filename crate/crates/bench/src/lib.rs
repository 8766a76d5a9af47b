//! Seeded workloads shared by the benchmarks.

use colfan_core::{rat, ColoredCone, ColoredFan, Cone, LpProblem, RatVec, SphericalDatum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ints(rng: &mut StdRng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.random_range(-bound..=bound)).collect()
}

/// `count` generator sets of `k` vectors in dimension `n`.
pub fn generator_sets(seed: u64, count: usize, n: usize, k: usize) -> Vec<Vec<RatVec>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..k)
                .map(|_| RatVec::from_ints(&ints(&mut rng, n, 5)))
                .collect()
        })
        .collect()
}

/// Inequality systems with `n` variables and `m` rows.
pub fn lp_problems(seed: u64, count: usize, n: usize, m: usize) -> Vec<LpProblem> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut lp = LpProblem::new(n);
            for _ in 0..m {
                let rhs = rat(rng.random_range(-6..=6));
                lp.add_ge(RatVec::from_ints(&ints(&mut rng, n, 4)), rhs)
                    .unwrap();
            }
            lp
        })
        .collect()
}

/// The complete fan in the plane spanned by `k` rays at roughly equal
/// angles.
pub fn polygon_fan(k: usize) -> (SphericalDatum, ColoredFan) {
    let rays: Vec<[i64; 2]> = (0..k)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / k as f64;
            [
                (8.0 * t.cos()).round() as i64,
                (8.0 * t.sin()).round() as i64,
            ]
        })
        .collect();
    let d = SphericalDatum::toric(2);
    let maximal = (0..k)
        .map(|i| {
            let (a, b) = (rays[i], rays[(i + 1) % k]);
            ColoredCone::colorless(Cone::from_int_generators(&[&a, &b], 2).unwrap())
        })
        .collect();
    let fan = ColoredFan::from_maximal(&d, maximal).unwrap();
    (d, fan)
}

/// The fan over the faces of the cube `[-1, 1]^3`, a projective 3-d fan.
pub fn cube_fan() -> (SphericalDatum, ColoredFan) {
    let d = SphericalDatum::toric(3);
    let mut maximal = Vec::new();
    for axis in 0..3 {
        for s in [-1, 1] {
            let mut gens = Vec::new();
            for a in [-1, 1] {
                for b in [-1, 1] {
                    let mut out = [0i64; 3];
                    out[axis] = s;
                    out[(axis + 1) % 3] = a;
                    out[(axis + 2) % 3] = b;
                    gens.push(RatVec::from_ints(&out));
                }
            }
            maximal.push(ColoredCone::colorless(
                Cone::from_generators(&gens, 3).unwrap(),
            ));
        }
    }
    let fan = ColoredFan::from_maximal(&d, maximal).unwrap();
    (d, fan)
}
