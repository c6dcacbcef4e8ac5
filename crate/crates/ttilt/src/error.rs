use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bound exceeded: {0} (algebra may be infinite-dimensional; raise bounds)")]
    BoundExceeded(String),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("relation mixes endpoints: {0}")]
    MixedEndpoints(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("{line}:{col}: syntax error near `{token}`: {msg}")]
    Syntax { line: usize, col: usize, token: String, msg: String },
    #[error("{line}:{col}: unknown arrow `{name}`")]
    UnknownArrow { line: usize, col: usize, name: String },
    #[error("{line}:{col}: unbound parameter `{name}`")]
    UnboundParameter { line: usize, col: usize, name: String },
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("complex is not two-term")]
    ThreeTerm,
    #[error("not silting: {0}")]
    NotSilting(String),
    #[error("verdict is not finite")]
    NotFinite,
    #[error("matrix is not unimodular")]
    NonUnimodular,
    #[error("enumeration undecided within bounds: {0}")]
    UndecidedEither(String),
}

pub type Result<T> = std::result::Result<T, Error>;
