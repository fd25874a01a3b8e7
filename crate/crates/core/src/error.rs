use thiserror::Error;

use crate::word::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in {input:?} at offset {offset}: {message}")]
    Parse {
        input: String,
        offset: usize,
        message: String,
    },

    #[error("generator {0:?} is not in the alphabet")]
    UnknownGenerator(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("the identity has no primitive root")]
    EmptyWord,

    #[error("{0} is not in the subgroup")]
    NotInSubgroup(Word),

    #[error("the generators are not freely independent")]
    NotFree,

    #[error("the image pair ({0}, {1}) is not a basis of F(x,y)")]
    NotABasis(Word, Word),

    #[error("expected a rank 2 pair, got rank {0}")]
    RankTooLow(usize),

    #[error("({0}, {1}) is not a solution")]
    NotASolution(Word, Word),

    #[error("one-variable equation {0} is out of scope")]
    OneVariable(Word),

    #[error("invalid equation: {0}")]
    InvalidEquation(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("classification unresolved: {0}")]
    Unresolved(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
