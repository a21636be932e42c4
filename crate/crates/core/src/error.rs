use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is not in the alphabet ({alphabet})")]
    UnknownLetter { letter: String, alphabet: String },

    #[error("parse error at byte {pos} in {input:?}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },

    #[error("structure constants are not associative at (i,j,k,s) = ({i},{j},{k},{s})")]
    NonAssociative {
        i: usize,
        j: usize,
        k: usize,
        s: usize,
    },

    #[error("structure constant index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket rule violates twisted antisymmetry on ({a}, {b})")]
    TwistedAntisymmetry { a: String, b: String },

    #[error("Poisson table is not antisymmetric at ({a}, {b})")]
    TableAntisymmetry { a: String, b: String },

    #[error("Poisson table violates Jacobi on ({a}, {b}, {c})")]
    Jacobi { a: String, b: String, c: String },

    #[error("Poisson table shape mismatch: {0}")]
    TableShape(String),

    #[error("degree {requested} exceeds the configured bound {bound}")]
    DegreeBound { requested: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("independent computations disagree: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            pos,
            msg: msg.into(),
        }
    }
}
