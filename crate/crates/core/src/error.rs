use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair ({i}, {j}) is out of range for a graph on vertices 1..={n}")]
    VertexOutOfRange { i: usize, j: usize, n: usize },

    #[error("pair ({i}, {j}) is a loop")]
    Loop { i: usize, j: usize },

    #[error("graph must have at least one vertex")]
    EmptyVertexSet,

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}` is not defined for n = {n}: {reason}")]
    IncompatibleSize {
        family: String,
        n: usize,
        reason: &'static str,
    },

    #[error("graph enumeration is limited to {limit} vertices, got {requested}")]
    EnumerationBudget { requested: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6 position {position}: {message}")]
    Graph6 { position: usize, message: String },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("expected a homogeneous polynomial of degree {expected}, found a term of degree {found}")]
    Inhomogeneous { expected: usize, found: usize },

    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    #[error("letter {letter} is not part of an alphabet of size {size}")]
    UnknownLetter { letter: usize, size: usize },

    #[error("graph is outside the overlapping-triangle-free class: {0}")]
    ClassViolation(String),

    #[error("graph has a triangle: {0}")]
    HasTriangle(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("power series must have constant term 1 to be inverted, found {0}")]
    NonUnitConstant(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("series has no nonzero coefficient")]
    DegenerateSeries,

    #[error("series truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
}
