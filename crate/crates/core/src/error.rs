use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    /// The determining index is only defined for graphs with at most one
    /// isolated vertex and no `K_2` component.
    #[error("determining index undefined: {0}")]
    UndefinedDeterminingIndex(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("set is not determining")]
    NotDetermining,
    #[error("search budget of {limit} nodes exhausted; result unknown")]
    BudgetExhausted { limit: u64 },
    /// A self-check failed. This always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
