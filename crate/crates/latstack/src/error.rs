//! Error types shared across the crate.

use num_bigint::BigUint;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The reflexive-transitive closure of the generating pairs relates two
    /// distinct elements in both directions.
    #[error("antisymmetry violated: {a} <= {b} and {b} <= {a} with {a} != {b}")]
    Cycle { a: usize, b: usize },

    #[error("element id {id} out of range for poset of size {size}")]
    Range { id: usize, size: usize },

    #[error("poset has no unique {what}")]
    NoExtremum { what: &'static str },

    #[error("not a lattice: pair ({x}, {y}) has no unique {what}")]
    NotLattice {
        x: usize,
        y: usize,
        what: &'static str,
    },

    #[error("map is not monotone: {x} <= {y} in the source but images are unrelated")]
    NotMonotone { x: usize, y: usize },

    #[error("maps do not compose: {0}")]
    Composition(String),

    #[error("lattice series axiom failed: {0}")]
    SeriesAxiom(String),

    #[error("element {element} of stage {stage} is not in the image of the composite down to stage {to}")]
    NotInImage {
        element: usize,
        stage: usize,
        to: usize,
    },

    #[error("size {required} exceeds the element budget {limit}")]
    Size { required: u128, limit: usize },

    #[error("chain count {count} exceeds cap {cap}")]
    CapExceeded { count: BigUint, cap: usize },

    #[error("chain is not maximal: {0}")]
    NotMaximal(String),

    #[error("invalid word: prefix of length {prefix_len} violates the occurrence condition")]
    InvalidWord { prefix_len: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid walk at step {step}: {reason}")]
    InvalidWalk { step: usize, reason: String },

    #[error("choice {choice} at up-step position {position} exceeds the weight bound {bound}")]
    ChoiceOutOfRange {
        position: usize,
        choice: usize,
        bound: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
