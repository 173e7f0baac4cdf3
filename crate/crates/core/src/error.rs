use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // input validation
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertexLabel(String),
    #[error("too many vertices: {0} (bitmask representation supports at most 64)")]
    TooManyVertices(usize),
    #[error("edge {edge:?} refers to unknown vertex label {label:?}")]
    UnknownVertexLabel { edge: Vec<String>, label: String },
    #[error("empty edge at position {0}")]
    EmptyEdge(usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<String>),
    #[error("edge {smaller:?} is contained in edge {larger:?} (edges must form an antichain)")]
    AntichainViolation { smaller: Vec<String>, larger: Vec<String> },
    #[error("vertex index or set {0:#x} is outside the vertex range")]
    UnknownVertex(u64),
    #[error("edge index {0} is out of range")]
    UnknownEdge(usize),
    #[error("index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("limit exceeded: {actual} {what}, configured limit is {limit}")]
    LimitExceeded { what: &'static str, limit: usize, actual: usize },

    // polynomial algebra
    #[error("x-degree {degree} exceeds n = {n}")]
    DegreeExceedsN { degree: usize, n: usize },
    #[error("f-vector has length {len}, expected {expected}")]
    LengthMismatch { len: usize, expected: usize },
    #[error("internal consistency failure: {0}")]
    InternalMismatch(&'static str),

    // reconstruction
    #[error("reconstruction needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("hypergraph has no edges and is not reconstructible")]
    NoEdges,
    #[error("hypergraph is a single edge spanning all {0} vertices and is not reconstructible")]
    SingleSpanningEdge(usize),
    #[error("every card is edgeless: the parent is either edgeless or a single spanning edge")]
    EdgelessDeck,
    #[error("deck has {cards} cards, expected {n}")]
    DeckSizeMismatch { cards: usize, n: usize },
    #[error("invalid deck: {0}")]
    InvalidDeck(String),
    #[error("coefficient ({i}, {j}): card sum {sum} is not divisible by {divisor}; not a genuine deck")]
    NonIntegerCoefficient { i: usize, j: usize, sum: String, divisor: usize },
    #[error("top coefficient ({i}, {j}) completes to {value} < 0; inconsistent deck")]
    NegativeTopCoefficient { i: usize, j: usize, value: String },
    #[error("independent reconstruction paths disagree for {0}")]
    PathsDisagree(&'static str),
}
