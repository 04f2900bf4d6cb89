use thiserror::Error;

/// Errors raised by graph construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not a vertex of the graph")]
    InvalidVertex(usize),
    #[error("edge {0} is not an edge of the graph")]
    InvalidEdge(usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("parse error at byte {offset}: {kind}")]
    Parse { offset: usize, kind: ParseErrorKind },
    #[error("input set must not be empty")]
    EmptySet,
    #[error("graph has {0} vertices, at least 2 are required")]
    TooFewVertices(usize),
    #[error("girth bound is defined for g >= 3, got {0}")]
    GirthTooSmall(usize),
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("graphs have different base graphs")]
    BaseMismatch,
    #[error("{0} is not bipartite")]
    NotBipartite(&'static str),
    #[error("symmetric difference is not an edge cut")]
    NotACut,
    #[error("graph has {n} vertices, above the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypotheses not met: {0}")]
    Hypothesis(String),
    #[error("LM certificate replay failed at step {step}: {reason}")]
    LmReplay { step: usize, reason: String },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("no qualifying 2-factor found: {0}")]
    NotFound(String),
}

/// What went wrong while decoding a graph6, sparse6 or edge-list line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("truncated")]
    Truncated,
    #[error("malformed header")]
    MalformedHeader,
    #[error("byte outside the printable range 63..=126")]
    InvalidByte,
    #[error("vertex index out of range")]
    VertexOutOfRange,
    #[error("trailing data after payload")]
    TrailingData,
    #[error("expected two vertex ids")]
    BadEdgeLine,
    #[error("self-loop")]
    SelfLoop,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
