use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The polynomial has no Gotzmann representation.
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// An internal consistency check failed; indicates a bug.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    /// The requested Hilbert function is not the Hilbert function of a quotient of the free module.
    #[error("not achievable: {0}")]
    NotAchievable(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial is not integer-valued: {0}")]
    NotNumerical(String),
    #[error("recursion cap of {0} nodes exceeded")]
    RecursionCap(usize),
    #[error("representation exceeds the cap of {0} terms")]
    TooManyTerms(usize),
    #[error("regularity of the zero module is undefined")]
    ZeroModule,
    #[error("ideal is not stable")]
    NotStable,
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("non-integral Chern class: {0}")]
    NonIntegralChern(String),
    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
