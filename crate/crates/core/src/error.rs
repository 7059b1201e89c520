use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid two-factor: {0}")]
    InvalidTwoFactor(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image sequence is not a bijection on 0..{0}")]
    NotAPermutation(usize),
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("automorphism cycles are not all of one odd length greater than 1")]
    NotUniformOdd,
    #[error("{what} exceeds the configured bound of {bound} (got {actual})")]
    Capability {
        what: &'static str,
        bound: usize,
        actual: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate and quotient cycle disagree: {0}")]
    CertificateMismatch(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid graph spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            message: err.to_string(),
        }
    }
}
