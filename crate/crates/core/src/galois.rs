//! Finite Galois actions on spherical data and k-form checks.
//!
//! The Galois group is given through a finite quotient: a list of
//! generators, each a lattice automorphism of the ambient space together
//! with a permutation of the color labels. The closure under composition
//! is materialized up to a cap.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::colored::{
    validate_colored_fan, ColoredCone, ColoredFan, SphericalDatum, ValidationReport,
};
use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::quasiproj::is_quasiprojective_unchecked;

pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// Emitted by [`has_k_form`] alongside the verdict.
pub const KFORM_NOTES: [&str; 2] = [
    "invariance alone classifies spherical spaces over k; orbit-fan quasiprojectivity \
is the additional condition for a k-form that is a variety",
    "the quasiprojectivity condition is stated for perfect base fields",
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub matrix: RatMat,
    pub color_perm: BTreeMap<String, String>,
}

impl GroupElement {
    pub fn new(matrix: RatMat, color_perm: BTreeMap<String, String>) -> Self {
        GroupElement { matrix, color_perm }
    }

    pub fn identity(datum: &SphericalDatum) -> Self {
        GroupElement {
            matrix: RatMat::identity(datum.dim()),
            color_perm: datum
                .color_names()
                .map(|c| (c.to_string(), c.to_string()))
                .collect(),
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: self
                .matrix
                .mul(&other.matrix)
                .expect("square matrices of one size"),
            color_perm: other
                .color_perm
                .iter()
                .map(|(k, v)| (k.clone(), self.color_perm[v].clone()))
                .collect(),
        }
    }

    /// Image of a colored cone.
    pub fn apply(&self, cc: &ColoredCone) -> Result<ColoredCone> {
        let cone = cc.cone.image(&self.matrix)?;
        let colors = cc
            .colors
            .iter()
            .map(|c| {
                self.color_perm
                    .get(c)
                    .cloned()
                    .ok_or_else(|| Error::UnknownColor(c.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(ColoredCone { cone, colors })
    }

    fn check_structure(&self, datum: &SphericalDatum, index: usize) -> Result<()> {
        let n = datum.dim();
        let m = &self.matrix;
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::ShapeMismatch(format!(
                "generator {index}: matrix is {}x{}, expected {n}x{n}",
                m.nrows(),
                m.ncols()
            )));
        }
        let unimodular = m.is_integral() && m.inverse().is_some_and(|inv| inv.is_integral());
        if !unimodular {
            return Err(Error::NotLatticeAutomorphism(format!(
                "generator {index}: matrix {m}"
            )));
        }
        let domain: HashSet<&str> = self.color_perm.keys().map(String::as_str).collect();
        let image: HashSet<&str> = self.color_perm.values().map(String::as_str).collect();
        let colors: HashSet<&str> = datum.color_names().collect();
        if domain != colors || image != colors {
            return Err(Error::InvalidAction(format!(
                "generator {index}: color permutation is not a bijection of the datum's colors"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
}

impl GroupAction {
    pub fn new(datum: &SphericalDatum, generators: Vec<GroupElement>) -> Result<Self> {
        Self::with_cap(datum, generators, DEFAULT_GROUP_CAP)
    }

    /// Checks that every generator is a lattice automorphism with a color
    /// bijection, then computes the closure (at most `cap` elements).
    pub fn with_cap(
        datum: &SphericalDatum,
        generators: Vec<GroupElement>,
        cap: usize,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            g.check_structure(datum, i)?;
        }
        let id = GroupElement::identity(datum);
        let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if elements.len() == cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(GroupAction {
            generators,
            elements,
        })
    }

    pub fn trivial(datum: &SphericalDatum) -> Self {
        Self::new(datum, Vec::new()).expect("trivial group")
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Checks ρ̃-equivariance and stability of 𝒱 for every generator and
/// reports the group order.
pub fn validate_action(datum: &SphericalDatum, action: &GroupAction) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    for (i, g) in action.generators().iter().enumerate() {
        g.check_structure(datum, i)?;
        let subject = format!("generator {i}");
        report.push(
            "lattice automorphism",
            &subject,
            true,
            format!("matrix {}", g.matrix),
        );

        let mut broken = Vec::new();
        for c in datum.colors() {
            let image = g.matrix.apply(&c.rho);
            if &image != datum.rho(&g.color_perm[&c.name])? {
                broken.push(c.name.clone());
            }
        }
        report.push(
            "equivariance",
            &subject,
            broken.is_empty(),
            if broken.is_empty() {
                "matrix · rho(D) = rho(perm(D)) for every color".to_string()
            } else {
                format!("fails for colors {}", broken.join(","))
            },
        );

        let stable = datum.valuation_cone().image(&g.matrix)? == *datum.valuation_cone();
        report.push(
            "valuation cone stable",
            &subject,
            stable,
            if stable {
                "image of 𝒱 is 𝒱"
            } else {
                "image of 𝒱 differs from 𝒱"
            },
        );
    }
    report.notes.push(format!("group order {}", action.order()));
    Ok(report)
}

fn ensure_valid_action(datum: &SphericalDatum, action: &GroupAction) -> Result<()> {
    let report = validate_action(datum, action)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidAction(report.summary()))
    }
}

/// The first member whose image under some group element is missing from
/// the fan, together with that image.
pub fn invariance_violation(
    action: &GroupAction,
    fan: &ColoredFan,
) -> Result<Option<(ColoredCone, ColoredCone)>> {
    let members: HashSet<&ColoredCone> = fan.iter().collect();
    for cc in fan.iter() {
        for g in action.elements() {
            let image = g.apply(cc)?;
            if !members.contains(&image) {
                return Ok(Some((cc.clone(), image)));
            }
        }
    }
    Ok(None)
}

/// True iff every group element permutes the members of the fan.
pub fn is_fan_invariant(
    datum: &SphericalDatum,
    action: &GroupAction,
    fan: &ColoredFan,
) -> Result<bool> {
    for cc in fan.iter() {
        datum.check_colored(cc)?;
    }
    Ok(invariance_violation(action, fan)?.is_none())
}

pub(crate) fn orbit(action: &GroupAction, cc: &ColoredCone) -> Result<Vec<ColoredCone>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in action.elements() {
        let image = g.apply(cc)?;
        if seen.insert(image.clone()) {
            out.push(image);
        }
    }
    Ok(out)
}

/// The fan formed by the orbit of `cc` and all colored faces. Fails with
/// [`Error::OrbitOverlap`] when orbit cones overlap inside 𝒱.
pub fn orbit_subfan(
    datum: &SphericalDatum,
    action: &GroupAction,
    cc: &ColoredCone,
) -> Result<ColoredFan> {
    datum.check_colored(cc)?;
    let fan = ColoredFan::from_maximal(datum, orbit(action, cc)?)?;
    let report = validate_colored_fan(datum, &fan)?;
    if report.axiom("F2") == Some(false) {
        return Err(Error::OrbitOverlap(format!("orbit of {cc}")));
    }
    if !report.passed() {
        return Err(Error::InvalidColoredCone(report.summary()));
    }
    Ok(fan)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFormReport {
    pub verdict: bool,
    /// Outcome of the invariance condition (a).
    pub invariant: bool,
    /// Number of orbit fans whose quasiprojectivity was decided.
    pub orbit_fans_checked: usize,
    pub reasons: Vec<String>,
    pub notes: Vec<String>,
}

/// Decides whether the fan admits a k-form: (a) the fan is invariant and
/// (b) the orbit fan of every member is quasiprojective.
pub fn has_k_form(
    datum: &SphericalDatum,
    action: &GroupAction,
    fan: &ColoredFan,
) -> Result<KFormReport> {
    ensure_valid_action(datum, action)?;
    let fan_report = validate_colored_fan(datum, fan)?;
    if !fan_report.passed() {
        return Err(Error::InvalidFan(fan_report.summary()));
    }
    let notes: Vec<String> = KFORM_NOTES.iter().map(|s| s.to_string()).collect();

    if let Some((cc, image)) = invariance_violation(action, fan)? {
        return Ok(KFormReport {
            verdict: false,
            invariant: false,
            orbit_fans_checked: 0,
            reasons: vec![format!(
                "(a) fan not Γ-invariant, offending cone: {cc} (image {image} is not a member)"
            )],
            notes,
        });
    }

    // Larger cones first, so faces are usually covered by a parent's
    // orbit fan and need no LP of their own.
    let mut order: Vec<&ColoredCone> = fan.iter().collect();
    order.sort_by_key(|c| std::cmp::Reverse(c.cone.dim()));
    let mut covered: Vec<HashSet<ColoredCone>> = Vec::new();
    let mut reasons = Vec::new();
    let mut checked = 0;
    for cc in order {
        if covered.iter().any(|f| f.contains(cc)) {
            continue;
        }
        let sub = match orbit_subfan(datum, action, cc) {
            Ok(sub) => sub,
            Err(Error::OrbitOverlap(msg)) => {
                reasons.push(format!("(b) {msg}: orbit cones overlap, no Γ-stable fan"));
                continue;
            }
            Err(e) => return Err(e),
        };
        checked += 1;
        if !is_quasiprojective_unchecked(datum, &sub)?.verdict {
            reasons.push(format!("(b) orbit fan of {cc} is not quasiprojective"));
        }
        covered.push(sub.cones().iter().cloned().collect());
    }
    Ok(KFormReport {
        verdict: reasons.is_empty(),
        invariant: true,
        orbit_fans_checked: checked,
        reasons,
        notes,
    })
}
