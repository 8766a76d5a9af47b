//! Spherical data, colored cones and colored fans.
//!
//! A [`SphericalDatum`] is the combinatorial quadruple: an ambient rational
//! space of dimension `dim`, a polyhedral valuation cone, a finite list of
//! color labels and the placement of each color in the ambient space.
//! Colored cones and fans over a datum are validated against the axioms
//! C1-C4 and F1-F2.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::RatVec;
use crate::quasiproj::relint_meets;

/// Convention used for colored faces, stated in every cone/fan report.
pub const FACE_CONVENTION: &str =
    "colored faces: a face F of the cone qualifies iff relint(F) meets \
the valuation cone; it carries exactly the colors whose images lie in F";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Color {
    pub name: String,
    pub rho: RatVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalDatum {
    dim: usize,
    valuation_cone: Cone,
    colors: Vec<Color>,
}

impl SphericalDatum {
    pub fn new(dim: usize, valuation_cone: Cone, colors: Vec<Color>) -> Result<Self> {
        if valuation_cone.ambient_dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: valuation_cone.ambient_dim(),
            });
        }
        let mut seen = HashSet::new();
        for c in &colors {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::DuplicateColor(c.name.clone()));
            }
            if c.rho.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.rho.len(),
                });
            }
        }
        Ok(SphericalDatum {
            dim,
            valuation_cone,
            colors,
        })
    }

    /// Datum of a split torus: no colors, valuation cone the whole space.
    pub fn toric(dim: usize) -> Self {
        SphericalDatum {
            dim,
            valuation_cone: Cone::whole_space(dim),
            colors: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation_cone
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_names(&self) -> impl Iterator<Item = &str> {
        self.colors.iter().map(|c| c.name.as_str())
    }

    pub fn rho(&self, name: &str) -> Result<&RatVec> {
        self.colors
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.rho)
            .ok_or_else(|| Error::UnknownColor(name.to_string()))
    }

    pub(crate) fn check_cone(&self, cone: &Cone) -> Result<()> {
        if cone.ambient_dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: cone.ambient_dim(),
            })
        }
    }

    pub(crate) fn check_colored(&self, cc: &ColoredCone) -> Result<()> {
        self.check_cone(&cc.cone)?;
        for name in &cc.colors {
            self.rho(name)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCone {
    pub cone: Cone,
    pub colors: BTreeSet<String>,
}

impl ColoredCone {
    pub fn new<I, S>(cone: Cone, colors: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ColoredCone {
            cone,
            colors: colors.into_iter().map(Into::into).collect(),
        }
    }

    pub fn colorless(cone: Cone) -> Self {
        ColoredCone {
            cone,
            colors: BTreeSet::new(),
        }
    }
}

impl fmt::Display for ColoredCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.cone)?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ColoredFan {
    cones: Vec<ColoredCone>,
}

impl ColoredFan {
    /// A fan from an explicit member list, kept as given.
    pub fn new(cones: Vec<ColoredCone>) -> Self {
        ColoredFan { cones }
    }

    /// Closes the given cones under colored faces. Members are sorted by
    /// dimension, then canonically, so every cone precedes the cones
    /// containing it.
    pub fn from_maximal(datum: &SphericalDatum, maximal: Vec<ColoredCone>) -> Result<Self> {
        let mut seen: HashSet<ColoredCone> = HashSet::new();
        let mut cones = Vec::new();
        for cc in &maximal {
            datum.check_colored(cc)?;
            if seen.insert(cc.clone()) {
                cones.push(cc.clone());
            }
        }
        for cc in &maximal {
            for face in colored_faces_unchecked(datum, cc)? {
                if seen.insert(face.clone()) {
                    cones.push(face);
                }
            }
        }
        cones.sort_by(|a, b| (a.cone.dim(), a).cmp(&(b.cone.dim(), b)));
        Ok(ColoredFan { cones })
    }

    pub fn cones(&self) -> &[ColoredCone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains(&self, cc: &ColoredCone) -> bool {
        self.cones.contains(cc)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ColoredCone> {
        self.cones.iter()
    }
}

/// One named check in a [`ValidationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub axiom: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn push(
        &mut self,
        axiom: impl Into<String>,
        subject: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            axiom: axiom.into(),
            subject: subject.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Whether every check under `axiom` passed; `None` if none was run.
    pub fn axiom(&self, axiom: &str) -> Option<bool> {
        let mut it = self.checks.iter().filter(|c| c.axiom == axiom).peekable();
        it.peek()?;
        Some(it.all(|c| c.passed))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        self.checks.extend(other.checks);
    }

    pub(crate) fn summary(&self) -> String {
        self.failures()
            .map(|c| format!("{} {}: {}", c.axiom, c.subject, c.detail))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn color_images(datum: &SphericalDatum, colors: &BTreeSet<String>) -> Result<Vec<RatVec>> {
    colors.iter().map(|c| datum.rho(c).cloned()).collect()
}

pub(crate) fn relint_meets_valuation(datum: &SphericalDatum, cone: &Cone) -> bool {
    relint_meets(&[cone], &[datum.valuation_cone()])
}

/// C1 with the canonical witness set: the cone must be generated by the
/// images of its colors together with the generators of `cone ∩ 𝒱`.
pub(crate) fn generation_check(datum: &SphericalDatum, cc: &ColoredCone) -> Result<(bool, String)> {
    let inside = cc.cone.intersect(datum.valuation_cone())?;
    let mut gens = color_images(datum, &cc.colors)?;
    gens.extend(inside.generators());
    let generated = Cone::from_generators(&gens, datum.dim())?;
    let ok = generated == cc.cone;
    let detail = if ok {
        "generated by color images and valuation-cone elements".to_string()
    } else {
        format!("color images and cone ∩ 𝒱 generate {generated} instead")
    };
    Ok((ok, detail))
}

/// Checks C1-C4 for one colored cone.
pub fn validate_colored_cone(datum: &SphericalDatum, cc: &ColoredCone) -> Result<ValidationReport> {
    datum.check_colored(cc)?;
    let subject = cc.to_string();
    let mut report = ValidationReport {
        notes: vec![FACE_CONVENTION.to_string()],
        checks: Vec::new(),
    };

    let (c1, detail) = generation_check(datum, cc)?;
    report.push("C1", &subject, c1, detail);

    let c2 = relint_meets_valuation(datum, &cc.cone);
    report.push(
        "C2",
        &subject,
        c2,
        if c2 {
            "relative interior meets the valuation cone"
        } else {
            "relative interior misses the valuation cone"
        },
    );

    let c3 = cc.cone.is_strictly_convex();
    report.push(
        "C3",
        &subject,
        c3,
        if c3 {
            "strictly convex".to_string()
        } else {
            format!(
                "contains the line spanned by {}",
                cc.cone.lineality_basis()[0]
            )
        },
    );

    let zero_colors: Vec<&str> = cc
        .colors
        .iter()
        .filter(|c| datum.rho(c).map(RatVec::is_zero).unwrap_or(false))
        .map(String::as_str)
        .collect();
    report.push(
        "C4",
        &subject,
        zero_colors.is_empty(),
        if zero_colors.is_empty() {
            "no color maps to 0".to_string()
        } else {
            format!("colors mapping to 0: {}", zero_colors.join(","))
        },
    );
    Ok(report)
}

/// Colored faces computed without validating `cc` first.
pub(crate) fn colored_faces_unchecked(
    datum: &SphericalDatum,
    cc: &ColoredCone,
) -> Result<Vec<ColoredCone>> {
    datum.check_colored(cc)?;
    let mut out = Vec::new();
    for face in cc.cone.faces() {
        if !relint_meets_valuation(datum, &face) {
            continue;
        }
        let mut colors = BTreeSet::new();
        for name in &cc.colors {
            if face.contains_unchecked(datum.rho(name)?) {
                colors.insert(name.clone());
            }
        }
        out.push(ColoredCone { cone: face, colors });
    }
    Ok(out)
}

/// The colored faces of a valid colored cone, `cc` itself included.
pub fn colored_faces(datum: &SphericalDatum, cc: &ColoredCone) -> Result<Vec<ColoredCone>> {
    let report = validate_colored_cone(datum, cc)?;
    if !report.passed() {
        return Err(Error::InvalidColoredCone(report.summary()));
    }
    colored_faces_unchecked(datum, cc)
}

/// Checks C1-C4 on every member, F1 (closure under colored faces) and F2
/// (pairwise disjointness of relative interiors inside 𝒱).
pub fn validate_colored_fan(datum: &SphericalDatum, fan: &ColoredFan) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        notes: vec![FACE_CONVENTION.to_string()],
        checks: Vec::new(),
    };
    for cc in fan.iter() {
        report.merge(validate_colored_cone(datum, cc)?);
    }

    let members: HashSet<&ColoredCone> = fan.iter().collect();
    let mut f1_ok = true;
    for cc in fan.iter() {
        for face in colored_faces_unchecked(datum, cc)? {
            if !members.contains(&face) {
                f1_ok = false;
                report.push(
                    "F1",
                    cc.to_string(),
                    false,
                    format!("missing colored face {face}"),
                );
            }
        }
    }
    if f1_ok {
        report.push("F1", "fan", true, "closed under colored faces");
    }

    let mut f2_ok = true;
    let cones = fan.cones();
    for (i, a) in cones.iter().enumerate() {
        for b in &cones[i + 1..] {
            if relint_meets(&[&a.cone, &b.cone], &[datum.valuation_cone()]) {
                f2_ok = false;
                report.push(
                    "F2",
                    format!("{a} / {b}"),
                    false,
                    "relative interiors overlap inside the valuation cone",
                );
            }
        }
    }
    if f2_ok {
        report.push("F2", "fan", true, "relative interiors are disjoint on 𝒱");
    }
    Ok(report)
}

/// The member whose cone has `v` in its relative interior.
pub fn locate<'a>(
    datum: &SphericalDatum,
    fan: &'a ColoredFan,
    v: &RatVec,
) -> Result<Option<&'a ColoredCone>> {
    if !datum.valuation_cone().contains(v)? {
        return Err(Error::NotInValuationCone(v.to_string()));
    }
    Ok(fan
        .iter()
        .find(|cc| cc.cone.in_relative_interior_unchecked(v)))
}
