use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: usize, limit: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported family parameter: {0}")]
    UnsupportedParameter(String),

    #[error("sign assignment does not extend to a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("sign homomorphism is not surjective onto {{+1, -1}}")]
    NotSurjective,

    #[error("element {0} is not in the group")]
    ElementOutOfRange(usize),

    #[error("operands live on different groups or tables")]
    MismatchedGroups,

    #[error("operands belong to different presentations")]
    MismatchedPresentations,

    #[error("invalid group specification at `{field}`: {message}")]
    InvalidSpec { field: String, message: String },

    /// An exactness invariant failed; this is a bug, never a valid outcome.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn spec(field: impl Into<String>, message: impl Into<String>) -> Error {
        Error::InvalidSpec {
            field: field.into(),
            message: message.into(),
        }
    }
}
