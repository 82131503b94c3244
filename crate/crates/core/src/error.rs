use thiserror::Error;

/// Errors raised when building or reading a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Precondition violations reported by the structural and constructive operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph has a bridge ({0}, {1})")]
    HasBridge(usize, usize),
    #[error("maximum degree {found} exceeds the allowed {allowed}")]
    DegreeTooLarge { found: usize, allowed: usize },
    #[error("edges ({0}, {1}) and ({2}, {3}) of the matching share a vertex")]
    NotAMatching(usize, usize, usize, usize),
    #[error("matching does not cover vertex {0}")]
    NotPerfect(usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    ForeignEdge(usize, usize),
    #[error("component containing vertex {0} is not a cycle")]
    NotACycle(usize),
    #[error("{found} single-ADM vertices given but the grooming factor allows at most {allowed}")]
    TooManySingles { found: usize, allowed: usize },
    #[error("grooming factor {0} is below the minimum {1} for this method")]
    GroomingTooSmall(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no perfect matching exists")]
    NoPerfectMatching,
}

/// Errors from the exhaustive solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("instance too large: {what} is {value}, limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("search exhausted without a solution: {0}")]
    Exhausted(String),
    #[error("search timed out after {nodes} nodes")]
    TimedOut { nodes: u64 },
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
}

/// Errors from reading or re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("evidence does not hold: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
