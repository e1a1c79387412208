use thiserror::Error;

/// Errors produced by parsing, product construction, and factorization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("vertex id {id} out of range (n = {n})")]
    IdOutOfRange { id: usize, n: usize },

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("duplicate loop at {0}")]
    DuplicateLoop(usize),

    #[error("arc {0} -> {0} is a loop and must be declared with `l`")]
    SelfArc(usize),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("every vertex carries a loop, the factorization is not unique")]
    NoUnloopedVertex,

    #[error("root {0} carries a loop")]
    LoopedRoot(usize),

    #[error("graph has loops where a loopless graph is required")]
    UnexpectedLoops,

    #[error("empty factor list")]
    EmptyFactorList,

    #[error("factor {0} has no vertices")]
    EmptyFactor(usize),

    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("unknown color class {0}")]
    UnknownClass(usize),

    #[error("invalid product coloring: {0}")]
    InvalidColoring(String),

    #[error("no product square through {v}, {u}, {w}")]
    NoProductSquare { v: usize, u: usize, w: usize },

    #[error("more than one square through {v}, {u}, {w}")]
    AmbiguousProductSquare { v: usize, u: usize, w: usize },

    #[error("invalid coordinatization: {0}")]
    InvalidCoordinates(String),

    #[error("factorization does not match the graph: {0}")]
    Mismatch(String),

    #[error("loop mismatch at vertex {0} cannot be resolved by merging its down-edge classes")]
    UnresolvedLoopMismatch(usize),

    #[error("oracle bound exceeded: {what} = {value} > {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
