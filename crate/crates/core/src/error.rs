use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Parse and input-shape problems are kept apart from domain failures
/// (asking for the null root of a wild quiver, say) so that front ends can
/// map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("duplicate vertex {id:?} at {location}")]
    DuplicateVertex { id: String, location: String },

    #[error("unknown vertex {id:?} at {location}")]
    UnknownVertex { id: String, location: String },

    #[error("arrow #{0} does not exist")]
    NoSuchArrow(usize),

    #[error("dimension mismatch: expected {expected} entries, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("vector has non-integral entries")]
    NotIntegral,

    #[error("vector has negative entries")]
    Negative,

    #[error("vertex {0:?} carries a loop; reflection undefined")]
    LoopAtVertex(String),

    #[error("quiver has loops")]
    HasLoops,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("quiver is not connected")]
    NotConnected,

    #[error("quiver is wild; {0}")]
    Wild(&'static str),

    #[error("quiver is not wild")]
    NotWild,

    #[error("quiver is not tame")]
    NotTame,

    #[error("component {0} is not wild")]
    ComponentNotWild(String),

    #[error("Cartan matrix is singular")]
    Singular,

    #[error("subquiver is not effective")]
    NotEffective,

    #[error("quiver has {actual} vertices, enumeration cap is {cap}")]
    TooManyVertices { actual: usize, cap: usize },

    #[error("grid search exceeded its budget of {0} nodes")]
    GridBudget(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed input rather than a violated
    /// mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::DuplicateVertex { .. } | Error::UnknownVertex { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
