use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown color label `{0}`")]
    UnknownColor(String),

    #[error("duplicate color label `{0}`")]
    DuplicateColor(String),

    #[error("colored cone fails validation: {0}")]
    InvalidColoredCone(String),

    #[error("colored fan fails validation: {0}")]
    InvalidFan(String),

    #[error("vector {0} is not in the valuation cone")]
    NotInValuationCone(String),

    #[error("not a lattice automorphism: {0}")]
    NotLatticeAutomorphism(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("orbit cones overlap in the valuation cone: {0}")]
    OrbitOverlap(String),

    #[error("Fourier-Motzkin oracle limited to {cap} free variables, system has {vars}")]
    FmCapExceeded { vars: usize, cap: usize },

    #[error("monoid cone rejected by axiom {axiom}: {detail}")]
    MonoidAxiom { axiom: String, detail: String },

    #[error("not a monoid cone: {0}")]
    NotMonoidCone(String),

    #[error("theta is not an involution")]
    NotInvolution,

    #[error("invalid morphism data: {0}")]
    InvalidMorphism(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
