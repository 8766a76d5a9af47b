//! Quasiprojectivity of colored fans as an exact LP.
//!
//! A fan is quasiprojective iff there are linear forms `l_Z`, one per
//! maximal colored cone, that agree on pairwise intersections and such that
//! `l_Z > l_Z'` on `relint(C_Z) ∩ 𝒱` for distinct maximal cones.
//!
//! The strict condition is reduced to finitely many linear constraints.
//! With `K = C_Z ∩ 𝒱` and `d = l_Z - l_Z'`, the set `relint(C_Z) ∩ 𝒱` is the
//! disjoint union of `relint(G)` over the faces `G` of `K` whose relative
//! interior lies in `relint(C_Z)`. So `d > 0` there iff `d >= 0` on the rays
//! of `K` and `d(w_G) >= 1` at the interior point `w_G` of each such face
//! (homogeneity lets `> 0` become `>= 1`). When `C_Z ⊆ 𝒱` the only such face
//! is `K` itself.

use crate::colored::{validate_colored_fan, ColoredCone, ColoredFan, SphericalDatum};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{rat, RatVec, Rational};
use crate::lp::{lp_feasible, LpProblem};

/// Emitted with every verdict so the interpretation is visible in output.
pub const QUASIPROJ_NOTES: [&str; 2] = [
    "linear forms are attached to maximal colored cones only; faces inherit restrictions",
    "the strict separation condition uses relative interiors",
];

/// LP over the coordinates of a point `v` asking for `v` in the relative
/// interior of every cone in `relints` and in every cone in `closed`.
pub fn relint_lp(relints: &[&Cone], closed: &[&Cone], n: usize) -> Result<LpProblem> {
    let mut lp = LpProblem::new(n);
    for c in relints {
        for f in c.facets() {
            lp.add_ge(f.clone(), rat(1))?;
        }
        for a in c.inequalities().iter().filter(|a| !c.facets().contains(a)) {
            lp.add_ge(a.clone(), rat(0))?;
        }
    }
    for c in closed {
        for a in c.inequalities() {
            lp.add_ge(a.clone(), rat(0))?;
        }
    }
    Ok(lp)
}

/// Whether the relative interiors in `relints` and the closed cones in
/// `closed` have a common point. All cones must share one ambient space.
pub fn relint_meets(relints: &[&Cone], closed: &[&Cone]) -> bool {
    let n = relints
        .iter()
        .chain(closed)
        .next()
        .map_or(0, |c| c.ambient_dim());
    let lp = relint_lp(relints, closed, n).expect("cones share the ambient space");
    lp_feasible(&lp).is_some()
}

/// The linear form attached to one maximal colored cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportForm {
    /// Index of the cone in the fan's member list.
    pub cone_index: usize,
    pub cone: ColoredCone,
    pub coefficients: RatVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportLp {
    pub problem: LpProblem,
    /// Member indices of the maximal cones, in variable-block order.
    pub maximal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiprojectiveVerdict {
    pub verdict: bool,
    pub witness: Option<Vec<SupportForm>>,
    pub notes: Vec<String>,
}

/// Indices of members that are not proper faces of another member.
pub fn maximal_cones(fan: &ColoredFan) -> Vec<usize> {
    let cones = fan.cones();
    (0..cones.len())
        .filter(|&i| {
            !cones.iter().enumerate().any(|(j, other)| {
                j != i
                    && other.cone != cones[i].cone
                    && cones[i].cone.is_subset_of(&other.cone).unwrap_or(false)
                    && cones[i].cone.is_face_of(&other.cone).unwrap_or(false)
            })
        })
        .collect()
}

fn ensure_valid(datum: &SphericalDatum, fan: &ColoredFan) -> Result<()> {
    let report = validate_colored_fan(datum, fan)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidFan(report.summary()))
    }
}

fn difference_row(n: usize, blocks: usize, z: usize, z2: usize, g: &RatVec) -> RatVec {
    let mut coeffs = vec![Rational::from_integer(0.into()); n * blocks];
    for k in 0..n {
        coeffs[z * n + k] = g[k].clone();
        coeffs[z2 * n + k] = -&g[k];
    }
    RatVec::new(coeffs)
}

pub(crate) fn build_support_lp_unchecked(
    datum: &SphericalDatum,
    fan: &ColoredFan,
) -> Result<SupportLp> {
    let n = datum.dim();
    let maximal = maximal_cones(fan);
    let blocks = maximal.len();
    let cones: Vec<&Cone> = maximal.iter().map(|&i| &fan.cones()[i].cone).collect();
    let mut lp = LpProblem::new(n * blocks);

    // forms agree on pairwise intersections
    for a in 0..blocks {
        for b in a + 1..blocks {
            let common = cones[a].intersect(cones[b])?;
            for g in common.generators() {
                lp.add_eq(difference_row(n, blocks, a, b, &g), rat(0))?;
            }
        }
    }

    // strict separation on relint(C_Z) ∩ 𝒱
    let mut witnesses: Vec<(Vec<RatVec>, Vec<RatVec>)> = Vec::with_capacity(blocks);
    for c in &cones {
        let k = c.intersect(datum.valuation_cone())?;
        let mut points = vec![k.interior_point()];
        for g in k.faces() {
            if g != k {
                let w = g.interior_point();
                if c.in_relative_interior_unchecked(&w) {
                    points.push(w);
                }
            }
        }
        witnesses.push((k.generators(), points));
    }
    for (a, (gens, points)) in witnesses.iter().enumerate() {
        for b in 0..blocks {
            if a == b {
                continue;
            }
            for g in gens {
                lp.add_ge(difference_row(n, blocks, a, b, g), rat(0))?;
            }
            for w in points {
                lp.add_ge(difference_row(n, blocks, a, b, w), rat(1))?;
            }
        }
    }
    Ok(SupportLp {
        problem: lp,
        maximal,
    })
}

/// Assembles the support-function LP for a valid fan.
pub fn build_support_lp(datum: &SphericalDatum, fan: &ColoredFan) -> Result<SupportLp> {
    ensure_valid(datum, fan)?;
    build_support_lp_unchecked(datum, fan)
}

pub(crate) fn is_quasiprojective_unchecked(
    datum: &SphericalDatum,
    fan: &ColoredFan,
) -> Result<QuasiprojectiveVerdict> {
    let n = datum.dim();
    let SupportLp { problem, maximal } = build_support_lp_unchecked(datum, fan)?;
    let notes = QUASIPROJ_NOTES.iter().map(|s| s.to_string()).collect();
    let Some(x) = lp_feasible(&problem) else {
        return Ok(QuasiprojectiveVerdict {
            verdict: false,
            witness: None,
            notes,
        });
    };
    if !problem.is_satisfied_by(&x) {
        return Err(Error::Internal(
            "simplex returned a point violating the support LP".into(),
        ));
    }
    let witness = maximal
        .iter()
        .enumerate()
        .map(|(block, &idx)| SupportForm {
            cone_index: idx,
            cone: fan.cones()[idx].clone(),
            coefficients: RatVec::new(x.coords()[block * n..(block + 1) * n].to_vec()),
        })
        .collect();
    Ok(QuasiprojectiveVerdict {
        verdict: true,
        witness: Some(witness),
        notes,
    })
}

/// Decides quasiprojectivity; on success the returned forms have been
/// checked against every constraint.
pub fn is_quasiprojective(
    datum: &SphericalDatum,
    fan: &ColoredFan,
) -> Result<QuasiprojectiveVerdict> {
    ensure_valid(datum, fan)?;
    is_quasiprojective_unchecked(datum, fan)
}
