//! Exact convex geometry for colored fans of spherical embeddings:
//! quasiprojectivity, Galois descent and reductive monoids.

pub mod colored;
pub mod cone;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod lp;
pub mod monoid;
pub mod quasiproj;

pub use colored::{
    colored_faces, locate, validate_colored_cone, validate_colored_fan, Check, Color, ColoredCone,
    ColoredFan, SphericalDatum, ValidationReport,
};
pub use cone::Cone;
pub use error::{Error, Result};
pub use galois::{
    has_k_form, invariance_violation, is_fan_invariant, orbit_subfan, validate_action, GroupAction,
    GroupElement, KFormReport,
};
pub use linalg::{format_rational, rat, ratio, RatMat, RatVec, Rational};
pub use lp::{fourier_motzkin, fourier_motzkin_with_cap, lp_feasible, Constraint, LpProblem};
pub use monoid::{
    check_fan_morphism, compose_morphisms, is_monoid_cone, lined_closure_real_form,
    monoid_cone_from_valuations, monoid_has_k_form, MonoidKForm, MonoidReport, MorphismData,
    MorphismVerdict, Weight,
};
pub use quasiproj::{
    build_support_lp, is_quasiprojective, maximal_cones, QuasiprojectiveVerdict, SupportForm,
    SupportLp,
};
