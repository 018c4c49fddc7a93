use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph text, line {line}: {msg}")]
    GraphParse { line: usize, msg: String },

    #[error("cannot parse monomial `{0}`")]
    MonomialParse(String),

    #[error("monomials over {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("generator set is not squarefree")]
    NotSquarefree,

    #[error("generators do not all have the same degree")]
    NotEquigenerated,

    #[error("power {q} of {s} generators has {multisets} edge multisets, over the cap of {cap}")]
    CapExceeded {
        s: usize,
        q: usize,
        multisets: u128,
        cap: u128,
    },

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("`{0}` is not a minimal generator of the ideal")]
    NotAGenerator(String),

    #[error("ordering is not a permutation of the generators: {0}")]
    NotAPermutation(String),

    #[error("input ordering fails linear quotients at position {t} against position {i}")]
    OrderFailsVerification { t: usize, i: usize },

    #[error("expansion at vertex {vertex} is not gapfree: the vertices outside its closed neighborhood are not independent")]
    ExpansionNotGapfree { vertex: usize },

    #[error("order on the exterior set must be a permutation of {expected:?}")]
    BadExteriorOrder { expected: Vec<usize> },

    #[error("pure power of base generator {0} is missing from the ordering")]
    MissingPurePower(usize),

    #[error("target power {target} is below the base power {base}")]
    TargetBelowBase { target: usize, base: usize },

    #[error(
        "edge ordering is not admissible: {{{a}, {b}}} precedes the disjoint edge {{{c}, {d}}}"
    )]
    InadmissibleEdgeOrder {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },

    #[error("edge ordering must be a permutation of the {0} edges")]
    BadEdgeOrdering(usize),

    #[error("expected an ordering of power {expected}, got power {found}")]
    WrongPower { expected: usize, found: usize },

    #[error("ordering is over a different ideal than the graph's edge ideal")]
    BaseMismatch,

    #[error("matching number is computed exactly only up to {max} vertices, got {n}")]
    MatchingTooLarge { n: usize, max: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("order text, line {line}: {msg}")]
    OrderParse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
