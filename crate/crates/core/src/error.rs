use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspace vectors are linearly dependent")]
    DependentBasis,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid simple type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },
    #[error("pairing against the zero vector")]
    ZeroVector,
    #[error("extended diagram of a rank-one system has no simple-node neighbor set")]
    RankTooSmall,
    #[error("weighted diagram has non-integral weights")]
    NonIntegralWeights,
    #[error("parameters out of range for {form}: {bound}")]
    OutOfRangeParams { form: String, bound: String },
    #[error("inconsistent Satake diagram {form}: {reason}")]
    InconsistentDiagram { form: String, reason: String },
    #[error("unrecognized root system: {0}")]
    UnrecognizedSystem(String),
    #[error("diagram types differ: {0}")]
    TypeMismatch(String),
    #[error("cannot parse real form name: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
