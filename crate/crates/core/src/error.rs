use thiserror::Error;

use crate::cone::Polycone;
use crate::linalg::IntVec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone {0} contains a line")]
    NonPointed(Box<Polycone>),

    #[error("face {face} of cone {cone} is missing from the fan")]
    MissingFace {
        cone: Box<Polycone>,
        face: Box<Polycone>,
    },

    #[error("the intersection of {first} and {second} is not a face of both")]
    BadIntersection {
        first: Box<Polycone>,
        second: Box<Polycone>,
    },

    #[error("{face} is not a face of {cone}")]
    NotAFace {
        face: Box<Polycone>,
        cone: Box<Polycone>,
    },

    #[error("{} is not an element of the monoid", fmt_vec(.0))]
    NotInMonoid(IntVec),

    #[error("the monoid is not saturated: {} is missing", fmt_vec(.0))]
    NotSaturated(IntVec),

    #[error("the source monoid is not contained in the target: {} is missing", fmt_vec(.0))]
    NotIncluded(IntVec),

    #[error("coefficient rings differ")]
    RingMismatch,

    #[error("elements live over different monoids")]
    MonoidMismatch,

    #[error("coefficient {0} does not lie in the coefficient ring")]
    InvalidCoefficient(String),

    #[error("invalid modulus {0}; must be at least 2")]
    InvalidModulus(u64),

    #[error("unsupported coefficient morphism: {0}")]
    UnsupportedMorphism(String),

    #[error("invalid monoid system: {0}")]
    InvalidSystem(String),

    #[error("the monoid system is not openly immersive ({0})")]
    NotOpenlyImmersive(String),

    #[error("inconsistent base descriptor: {0}")]
    InconsistentBase(String),

    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
}

pub(crate) fn fmt_vec(v: &[num_bigint::BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}
