use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    AntisymmetryViolation(String, String),
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("unsupported simplex dimension {0} (at most 3)")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range for a {dim}-simplex")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("endpoints do not match: {0}")]
    EndpointMismatch(String),
    #[error("poset is not pathwise connected")]
    NotConnected,
    #[error("search limit exceeded: {0}")]
    SearchLimitExceeded(String),

    #[error("operation is not associative: ({0}{1}){2} != {0}({1}{2})")]
    NotAssociative(String, String, String),
    #[error("first listed element `{0}` is not a two-sided identity")]
    NoIdentity(String),
    #[error("element `{0}` has no inverse")]
    NoInverse(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("diamond composition undefined: side condition fails")]
    DiamondUndefined,
    #[error("dot composition undefined: side condition fails")]
    DotUndefined,
    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("2-cochain violates the intertwining relation on {0}")]
    IntertwiningViolation(String),
    #[error("coboundary component is not central on {0}")]
    CentralityViolation(String),
    #[error("cochain is not a connection: {0}")]
    NotAConnection(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no 1-simplex b with both b and its reverse noninflating")]
    NoSuchSimplex,
    #[error("coefficient group is trivial")]
    TrivialGroup,
    #[error("connection is not central")]
    NotCentral,
    #[error("connections induce different cocycles")]
    MixedCocycles,
    #[error("connection does not induce the cocycle of the gauge transformation")]
    WrongCocycle,

    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
