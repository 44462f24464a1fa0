use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("vertex {vertex} is out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("{what} = {value} exceeds the bound {bound}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("{0} is not a basis label of this algebra")]
    UnknownBasisLabel(String),

    #[error("invalid graph isomorphism: {0}")]
    InvalidGraphIso(String),

    #[error("matrix is {found_rows}x{found_cols}, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("invalid serialized data: {0}")]
    Decode(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
