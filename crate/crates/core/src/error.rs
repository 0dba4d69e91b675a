//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while validating input data or assembling
/// character formulas.  Indices in column errors refer to zero-based
/// positions in the column list as supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Column sizes must be weakly decreasing; `index` is the first position
    /// whose entry exceeds its predecessor.
    #[error("column list is not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },

    /// A column pair that is required to have even sum does not.  `index` is
    /// the zero-based position of the first column of the offending pair.
    #[error("columns at indices {index} and {} have odd sum", index + 1)]
    ParityPairViolation { index: usize },

    /// The total size of the columns is incompatible with the group family
    /// (e.g. odd total for an even orthogonal group).
    #[error("column total {total} is incompatible with group family {family}")]
    SizeMismatch { family: String, total: u32 },

    /// The four columns handed to `fundamental_degeneration` do not satisfy
    /// its shape requirements.
    #[error("quadruple is not degenerable: {reason}")]
    NotDegenerable { reason: String },

    /// Column-lemma input whose shape does not match the requested lemma.
    #[error("lemma input has the wrong shape: {reason}")]
    ShapeMismatch { reason: String },

    /// An operation that requires an even generic orbit was given something
    /// else.
    #[error("orbit is not even and generic")]
    NotEvenGeneric,

    /// A sign vector does not belong to the character list of the orbit's
    /// parameter group.
    #[error("sign vector is incompatible with the parameter group (position {index})")]
    IncompatibleSign { index: usize },

    /// A torus-character combination came out with a non-integral
    /// coefficient, indicating corrupt input data.
    #[error("non-integral coefficient {num}/{den} in torus character combination")]
    NonIntegralResult { num: i64, den: i64 },

    /// Weight lengths or subgroup ranks do not add up.
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// No stored unipotent character formula for the requested parameter.
    #[error("no fixture available for unipotent parameter {label}")]
    MissingFixture { label: String },

    /// A K-type multiplicity query for a group family the character-formula
    /// engine does not cover.
    #[error("K-type multiplicity queries are not supported for family {family}")]
    UnsupportedFamily { family: String },

    /// Malformed fixture data (bad JSON structure or failed validation).
    #[error("invalid fixture data: {0}")]
    BadFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
