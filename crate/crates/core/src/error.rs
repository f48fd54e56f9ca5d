use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("graph of order {order} exceeds the exact-solver limit of {limit} vertices")]
    SizeLimit { order: usize, limit: usize },
    #[error("input is not a tree")]
    NotATree,
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("vertex set is not a maximal independent set")]
    NotMaximalIndependent,
    #[error("labeling has {labeling} entries but graph has order {graph}")]
    OrderMismatch { labeling: usize, graph: usize },
    #[error("label value {value} not allowed at vertex {vertex}")]
    InvalidLabel { vertex: usize, value: u8 },
    #[error("unknown invariant name `{0}`")]
    UnknownInvariant(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("no closed form for family `{0}`")]
    NoClosedForm(String),
    #[error("pair ({a}, {b}) is not realizable; need 1 <= a and {lo} <= b <= {hi}")]
    NotRealizable { a: i64, b: i64, lo: i64, hi: i64 },
    #[error("invalid fuzz parameters: {0}")]
    InvalidFuzz(String),
}
