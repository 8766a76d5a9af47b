//! Reductive monoids: monoid cones, their k-forms, morphisms of colored
//! fans and the real-form test for lined closures.

use std::collections::{BTreeMap, BTreeSet};

use crate::colored::{
    generation_check, relint_meets_valuation, ColoredCone, ColoredFan, SphericalDatum,
    ValidationReport,
};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::galois::{has_k_form, is_fan_invariant, GroupAction};
use crate::linalg::{RatMat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidReport {
    pub verdict: bool,
    pub checks: ValidationReport,
}

/// A monoid cone carries every color of the datum and satisfies C1-C4.
pub fn is_monoid_cone(datum: &SphericalDatum, cc: &ColoredCone) -> Result<MonoidReport> {
    datum.check_colored(cc)?;
    let subject = cc.to_string();
    let mut checks = ValidationReport::default();

    let missing: Vec<&str> = datum
        .color_names()
        .filter(|c| !cc.colors.contains(*c))
        .collect();
    checks.push(
        "all colors",
        &subject,
        missing.is_empty(),
        if missing.is_empty() {
            "carries every color".to_string()
        } else {
            format!("missing colors {}", missing.join(","))
        },
    );

    let (c1, detail) = generation_check(datum, cc)?;
    checks.push("C1", &subject, c1, detail);
    let c2 = relint_meets_valuation(datum, &cc.cone);
    checks.push(
        "C2",
        &subject,
        c2,
        if c2 {
            "relative interior meets 𝒱"
        } else {
            "relative interior misses 𝒱"
        },
    );
    let c3 = cc.cone.is_strictly_convex();
    checks.push(
        "C3",
        &subject,
        c3,
        if c3 {
            "strictly convex"
        } else {
            "contains a line"
        },
    );
    let zero: Vec<&str> = cc
        .colors
        .iter()
        .filter(|c| datum.rho(c).map(RatVec::is_zero).unwrap_or(false))
        .map(String::as_str)
        .collect();
    checks.push(
        "C4",
        &subject,
        zero.is_empty(),
        if zero.is_empty() {
            "no color maps to 0".to_string()
        } else {
            format!("colors mapping to 0: {}", zero.join(","))
        },
    );
    Ok(MonoidReport {
        verdict: checks.passed(),
        checks,
    })
}

/// The monoid cone generated by all color images and `vs ⊆ 𝒱`.
pub fn monoid_cone_from_valuations(datum: &SphericalDatum, vs: &[RatVec]) -> Result<ColoredCone> {
    for v in vs {
        if !datum.valuation_cone().contains(v)? {
            return Err(Error::NotInValuationCone(v.to_string()));
        }
    }
    let mut gens: Vec<RatVec> = datum.colors().iter().map(|c| c.rho.clone()).collect();
    gens.extend(vs.iter().cloned());
    let cc = ColoredCone::new(
        Cone::from_generators(&gens, datum.dim())?,
        datum.color_names(),
    );
    let report = is_monoid_cone(datum, &cc)?;
    // report strict convexity first: a line makes the other axioms moot
    for axiom in ["C3", "C4", "C2", "C1"] {
        if let Some(c) = report.checks.failures().find(|c| c.axiom == axiom) {
            return Err(Error::MonoidAxiom {
                axiom: axiom.to_string(),
                detail: c.detail.clone(),
            });
        }
    }
    Ok(cc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidKForm {
    pub verdict: bool,
    /// Full k-form check including the orbit-fan LP, when requested.
    pub lp_cross_check: Option<bool>,
}

/// A monoid cone has a k-form iff its face closure is invariant. Affine
/// embeddings are quasiprojective, so no LP is needed; `force_lp` runs the
/// full k-form check as a cross-validation.
pub fn monoid_has_k_form(
    datum: &SphericalDatum,
    action: &GroupAction,
    cc: &ColoredCone,
    force_lp: bool,
) -> Result<MonoidKForm> {
    let report = is_monoid_cone(datum, cc)?;
    if !report.verdict {
        return Err(Error::NotMonoidCone(report.checks.summary()));
    }
    let fan = ColoredFan::from_maximal(datum, vec![cc.clone()])?;
    let verdict = is_fan_invariant(datum, action, &fan)?;
    let lp_cross_check = if force_lp {
        Some(has_k_form(datum, action, &fan)?.verdict)
    } else {
        None
    };
    Ok(MonoidKForm {
        verdict,
        lp_cross_check,
    })
}

/// A G-equivariant map of homogeneous spaces, seen on valuation spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismData {
    /// The surjective linear map from the source to the target space.
    pub matrix: RatMat,
    /// Defined exactly on the non-dominant source colors.
    pub color_map: BTreeMap<String, String>,
    /// Source colors mapped dominantly; ignored by the cone conditions.
    pub dominant_colors: BTreeSet<String>,
}

impl MorphismData {
    /// Checks surjectivity, the color map's domain and codomain, and
    /// `matrix(𝒱_Y) = 𝒱_Z`.
    pub fn validate(&self, source: &SphericalDatum, target: &SphericalDatum) -> Result<()> {
        let m = &self.matrix;
        if m.ncols() != source.dim() || m.nrows() != target.dim() {
            return Err(Error::InvalidMorphism(format!(
                "matrix is {}x{}, expected {}x{}",
                m.nrows(),
                m.ncols(),
                target.dim(),
                source.dim()
            )));
        }
        if m.rank() != target.dim() {
            return Err(Error::InvalidMorphism("matrix is not surjective".into()));
        }
        let source_colors: BTreeSet<&str> = source.color_names().collect();
        for d in &self.dominant_colors {
            if !source_colors.contains(d.as_str()) {
                return Err(Error::UnknownColor(d.clone()));
            }
        }
        let expected: BTreeSet<&str> = source_colors
            .iter()
            .copied()
            .filter(|c| !self.dominant_colors.contains(*c))
            .collect();
        let domain: BTreeSet<&str> = self.color_map.keys().map(String::as_str).collect();
        if domain != expected {
            return Err(Error::InvalidMorphism(
                "color map must be defined exactly on the non-dominant colors".into(),
            ));
        }
        for t in self.color_map.values() {
            target.rho(t)?;
        }
        if source.valuation_cone().image(m)? != *target.valuation_cone() {
            return Err(Error::InvalidMorphism(
                "image of the source valuation cone is not the target valuation cone".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismVerdict {
    pub verdict: bool,
    /// For each source member, the index of the first target member it maps
    /// into, if any.
    pub assignment: Vec<Option<usize>>,
}

fn maps_into(
    m: &MorphismData,
    source: &ColoredCone,
    target: &ColoredCone,
    image: &Cone,
) -> Result<bool> {
    if !image.is_subset_of(&target.cone)? {
        return Ok(false);
    }
    Ok(source
        .colors
        .iter()
        .filter_map(|d| m.color_map.get(d))
        .all(|t| target.colors.contains(t)))
}

/// Every source member must map into some target member: cone image
/// contained in the target cone, non-dominant colors sent into its colors.
pub fn check_fan_morphism(
    source: &SphericalDatum,
    target: &SphericalDatum,
    m: &MorphismData,
    source_fan: &ColoredFan,
    target_fan: &ColoredFan,
) -> Result<MorphismVerdict> {
    m.validate(source, target)?;
    let mut assignment = Vec::with_capacity(source_fan.len());
    for cc in source_fan.iter() {
        source.check_colored(cc)?;
        let image = cc.cone.image(&m.matrix)?;
        let mut hit = None;
        for (j, t) in target_fan.iter().enumerate() {
            if maps_into(m, cc, t, &image)? {
                hit = Some(j);
                break;
            }
        }
        assignment.push(hit);
    }
    Ok(MorphismVerdict {
        verdict: assignment.iter().all(Option::is_some),
        assignment,
    })
}

/// A dominant weight in a chosen basis of the character lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub RatVec);

/// Checks a candidate involution `theta` against `theta · λ = -λ`.
pub fn lined_closure_real_form(lambda: &Weight, theta: &RatMat) -> Result<bool> {
    let n = lambda.0.len();
    if theta.nrows() != n || theta.ncols() != n {
        return Err(Error::ShapeMismatch(format!(
            "theta is {}x{}, weight has length {n}",
            theta.nrows(),
            theta.ncols()
        )));
    }
    if theta.mul(theta)? != RatMat::identity(n) {
        return Err(Error::NotInvolution);
    }
    Ok(theta.apply(&lambda.0) == -&lambda.0)
}

/// Composite of two morphisms, `second ∘ first`. Dominant colors of the
/// composite are those dominant for `first` plus those whose image is
/// dominant for `second`.
pub fn compose_morphisms(first: &MorphismData, second: &MorphismData) -> Result<MorphismData> {
    let matrix = second.matrix.mul(&first.matrix)?;
    let mut color_map = BTreeMap::new();
    let mut dominant: BTreeSet<String> = first.dominant_colors.clone();
    for (d, mid) in &first.color_map {
        match second.color_map.get(mid) {
            Some(t) => {
                color_map.insert(d.clone(), t.clone());
            }
            None => {
                dominant.insert(d.clone());
            }
        }
    }
    Ok(MorphismData {
        matrix,
        color_map,
        dominant_colors: dominant,
    })
}
