use thiserror::Error;

/// Errors raised by graph validation, the face oracle and the enumerators.
///
/// Vertices in messages are 1-based, matching the edge-list file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph contains a directed cycle through vertex {0}")]
    DirectedCycle(usize),
    #[error("edge ({0}, {1}) is not an edge of the parent graph")]
    EdgeNotInParent(usize, usize),
    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
    #[error("graph is not alternating: vertex {0} is both a sink and a source")]
    NotAlternating(usize),
    #[error("vertex {0} appears in both parts")]
    OverlappingParts(usize),
    #[error("graph is not transitively closed")]
    NotTransitivelyClosed,
    #[error("underlying undirected graph is not connected")]
    NotConnected,
    #[error("graph is not a complete graph K_n")]
    NotComplete,
    #[error("subgraph does not define a face")]
    NotAFace,
    #[error("subgraph is not admissible: H_comp has a cycle with weight-decrease total {total} over {length} edges")]
    NotAdmissible { total: i64, length: usize },
    #[error("point is not a vertex of the polytope")]
    NotASubsetOfVertices,
    #[error("dimension of the empty set is undefined")]
    EmptySet,
    #[error("instance too large: {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
