use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graphs with more than {max} vertices are not supported (got {got})")]
    TooManyVertices { got: usize, max: usize },
    #[error("vertex set is not hereditary")]
    NotHereditary,
    #[error("vertex {0} lies in the removed set")]
    VertexInRemovedSet(usize),
    #[error("vertex {0} is not eligible for W: it must lie outside H and keep exactly one out-edge in E\\H")]
    IneligibleW(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid cycle function: {0}")]
    InvalidCycleFunction(String),
    #[error("cycle function values must be positive")]
    ZeroValue,
    #[error("triples belong to different graphs")]
    GraphMismatch,
    #[error("triples are not strictly comparable")]
    NotComparable,
    #[error("pair is not a cover of case (iii)")]
    NotCaseIII,
    #[error("graph contains a cycle")]
    Cyclic,
    #[error("graph is not simple (it has a cycle or parallel edges)")]
    NotSimple,
    #[error("graph has forked vertices")]
    Forked,
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("element does not belong to the lattice")]
    ForeignElement,
    #[error("relation is not a lattice order: {0}")]
    NotALattice(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Format(String),
}
