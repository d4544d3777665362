use thiserror::Error;

use crate::hamming::HammingScheme;

/// Errors raised by the library.
///
/// `LemmaViolation` is special: it is never expected to fire and signals that
/// a checked mathematical statement was falsified on concrete input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scheme H({m},{q}): {reason}")]
    InvalidScheme { m: usize, q: usize, reason: String },

    #[error("scheme mismatch: {left} vs {right}")]
    SchemeMismatch {
        left: HammingScheme,
        right: HammingScheme,
    },

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("{what} is infeasible: needs {required} but the cap is {cap}")]
    Feasibility {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("closure exceeded cap {cap} (reached {partial} elements)")]
    ClosureCap { cap: usize, partial: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("common neighbours of a vertex with itself are not defined")]
    DegenerateIntersection,

    #[error("shell radius {radius} exceeds word length {m}")]
    ShellRadius { radius: usize, m: usize },

    #[error("operation requires a binary scheme, got {0}")]
    NotBinary(HammingScheme),

    #[error("code is not a binary linear code")]
    NotLinear,

    #[error("vertex {0} is not a codeword")]
    NotACodeword(String),

    #[error("vertex {0} is a codeword")]
    IsACodeword(String),

    #[error("vertex {0} is not adjacent to alpha")]
    NotANeighbour(String),

    #[error("automorphism does not stabilize the neighbour set of the code")]
    NotNeighbourStabilizer,

    #[error("automorphism maps alpha into the code")]
    CodewordFixedIntoCode,

    #[error("minimum distance {found} is below the required {required}")]
    MinDistanceTooSmall { found: String, required: usize },

    #[error("neighbour set is empty")]
    EmptyNeighbourSet,

    #[error("a generator does not stabilize the neighbour set")]
    GeneratorMovesNeighbours,

    #[error("family length m={0} must be even and at least 4")]
    InvalidFamilyLength(usize),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
