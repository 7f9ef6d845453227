use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator {0} is not a bijection")]
    NonBijective(usize),
    #[error("group order exceeds the bound {0}")]
    OrderBoundExceeded(usize),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("field characteristic {0} divides {1}")]
    NonCoprime(u64, u64),
    #[error("zero input")]
    ZeroInput,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("division by zero")]
    DivisionByZero,
    #[error("character table lift failed: {0}")]
    LiftVerificationFailed(String),
    #[error("count mismatch: {0}")]
    CountMismatch(String),
    #[error("coercion into the base field failed: {0}")]
    CoercionFailed(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("not a scalar multiple: {0}")]
    NotScalarMultiple(String),
    #[error("primitive element search exhausted after {0} candidates")]
    PrimitiveElementSearchExhausted(usize),
    #[error("search budget exhausted: {0}")]
    SearchBudgetExhausted(String),
    #[error("not a primitive central idempotent: {0}")]
    NotAPci(String),
    #[error("element is not in the center: {0}")]
    NotInCenter(String),
    #[error("consistency check failed: {0}")]
    ConsistencyCheckFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonBijective(_) => "NonBijective",
            Error::OrderBoundExceeded(_) => "OrderBoundExceeded",
            Error::UnknownName(_) => "UnknownName",
            Error::BadParams(_) => "BadParams",
            Error::NonCoprime(..) => "NonCoprime",
            Error::ZeroInput => "ZeroInput",
            Error::NotMonic => "NotMonic",
            Error::DivisionByZero => "DivisionByZero",
            Error::LiftVerificationFailed(_) => "LiftVerificationFailed",
            Error::CountMismatch(_) => "CountMismatch",
            Error::CoercionFailed(_) => "CoercionFailed",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::NotScalarMultiple(_) => "NotScalarMultiple",
            Error::PrimitiveElementSearchExhausted(_) => "PrimitiveElementSearchExhausted",
            Error::SearchBudgetExhausted(_) => "SearchBudgetExhausted",
            Error::NotAPci(_) => "NotAPci",
            Error::NotInCenter(_) => "NotInCenter",
            Error::ConsistencyCheckFailed(_) => "ConsistencyCheckFailed",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
