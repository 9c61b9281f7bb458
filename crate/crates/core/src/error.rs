use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("order is not a single-block reverse lexicographic order")]
    NotRevlex,

    #[error("variable `{0}` is not the least variable of the order")]
    WrongLastVariable(String),

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("not a linear form: {0}")]
    NotLinear(String),

    #[error("base ideal is not contained in the given ideal")]
    NotContained,

    #[error("division is not exact")]
    InexactDivision,

    #[error("graph is not closed: edges {{{i},{j}}} and {{{i},{k}}} without {{{j},{k}}}")]
    NotClosed { i: usize, j: usize, k: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("S-pair limit of {limit} exceeded")]
    SpairLimit { limit: usize },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("not a poset ideal: {0}")]
    NotPosetIdeal(String),

    #[error("not a lattice: {0}")]
    NotLattice(String),

    #[error("quotient rings differ")]
    HostMismatch,

    #[error("no cyclic witness: the quotient needs {0} generators")]
    NotCyclic(usize),

    #[error("{0}")]
    Io(String),
}
