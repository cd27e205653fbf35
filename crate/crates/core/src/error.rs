use thiserror::Error;

use crate::geometry::Flavor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} requires {expected} flavor")]
    FlavorMismatch { op: &'static str, expected: Flavor },

    #[error("{op}: both arguments must have the same flavor")]
    MixedFlavors { op: &'static str },

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid direction ({a},{b}): need coprime nonnegative integers, not both zero")]
    InvalidDirection { a: u64, b: u64 },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid orbit set: {0}")]
    InvalidOrbitSet(String),

    #[error("self-linking requires trivialization; use q_tau")]
    SelfLinking,

    #[error("concave orbit-layer index not supported")]
    ConcaveOrbitIndex,

    #[error("theorem hypothesis {0} violated")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("witness construction failed; boundary contact suspected")]
    WitnessFailed,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
