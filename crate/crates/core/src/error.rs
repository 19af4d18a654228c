use thiserror::Error;

use crate::grading::Bidegree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coaction is not available for {0}")]
    UnsupportedCoaction(String),

    #[error("invalid comodule: {0}")]
    InvalidComodule(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty window")]
    EmptyWindow,

    #[error("comodule has an element in non-zero Chow-Novikov degree at {0}")]
    NonZeroChowNovikov(Bidegree),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("inconsistent presentation: {0}")]
    PresentationInconsistent(String),

    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),

    #[error("checkpoint version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: String, found: String },

    #[error("checkpoint was produced for a different module")]
    ModuleMismatch,

    #[error("generator set is not of isotropically finite type (witness {witness})")]
    NotIsotropicallyFiniteType { witness: Bidegree },

    #[error("Chow-Novikov hypothesis violated: {0}")]
    ChowNovikovHypothesisViolated(String),

    #[error("vanishing range violated at {0}")]
    VanishingRangeViolated(crate::grading::Tridegree),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
