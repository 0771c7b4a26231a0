use thiserror::Error;

/// Errors produced by the graph constructors, parsers and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("operation needs a graph with at least one vertex")]
    EmptyGraph,

    #[error("identified vertices do not induce a clique: {0}")]
    NotAClique(String),

    #[error("state budget exceeded: {needed} states needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid forcing record: {0}")]
    InvalidForcingRecord(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
