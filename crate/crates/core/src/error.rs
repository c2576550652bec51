use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown algebra identifier `{0}` (expected one of G2, F4, E6, E7, E8, D21A, G3, F4S)")]
    UnknownAlgebra(String),

    #[error("vector is not a root of {0}")]
    NotARoot(String),

    #[error("inconsistent or non-integral expansion of {root} over the simple roots of {system}")]
    Expansion { system: String, root: String },

    #[error("{0} is only defined for the five exceptional Lie algebras")]
    LieOnly(&'static str),

    #[error("{0} is only defined for the exceptional Lie superalgebras")]
    SuperOnly(&'static str),

    #[error("marks vector has length {got}, expected rank {expected}")]
    MarksLength { expected: usize, got: usize },

    #[error("mark {0} outside the range [-2, 2]")]
    MarkRange(i32),

    #[error("root set is not closed under negation")]
    NotNegationClosed,

    #[error("no catalog entry for subalgebra fingerprint {0}")]
    UnknownFingerprint(String),

    #[error("dominance walk did not terminate after {0} reflections")]
    NonTermination(usize),

    #[error("invalid D(2,1;alpha) parameter {0}: alpha must not be 0 or -1")]
    InvalidAlpha(String),

    #[error("could not normalize the creation/annihilation basis: {0}")]
    Normalization(String),

    #[error("cannot parse root expression `{input}`: {reason}")]
    Notation { input: String, reason: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
