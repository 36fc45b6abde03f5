use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (must be prime and below 2^32)")]
    ModulusOutOfRange(u64),
    #[error("invalid scalar literal `{0}`")]
    BadScalar(String),
    #[error("invalid quiver: {0}")]
    BadQuiver(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("arrows `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("relation is not homogeneous: terms have different endpoints")]
    MixedEndpoints,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("admissibility not certified at headroom {headroom}: {detail}")]
    NotCertified { headroom: usize, detail: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("form check failed: {0}")]
    BadForm(String),
    #[error("zero module has no projective cover")]
    ZeroModule,
    #[error("module check failed: {0}")]
    BadModule(String),
    #[error("{0} requires a path presentation")]
    NoPresentation(&'static str),
    #[error("relation assignment mismatch: {0}")]
    BadAssignment(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
