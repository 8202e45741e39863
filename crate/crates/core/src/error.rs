use crate::coxeter::{CoxeterType, Family};

/// Errors produced across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is too small for type {family} (minimum {min})")]
    RankTooSmall { family: Family, rank: u8, min: u8 },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(CoxeterType, CoxeterType),

    #[error("operation is only defined for type {expected}, got {found}")]
    WrongFamily { expected: Family, found: CoxeterType },

    #[error("letter {letter} out of range for {ctype}")]
    LetterOutOfRange { letter: u8, ctype: CoxeterType },

    #[error("word is not reduced")]
    NotReduced,

    #[error("no move at position {position} of the requested shape")]
    InvalidSite { position: usize },

    #[error("enumeration cap exceeded after {partial} reduced words")]
    CapExceeded { partial: usize },

    #[error("search budget exhausted before a conclusive answer")]
    BudgetExceeded,

    #[error("words are reduced words of different group elements")]
    DifferentElements,

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("recomputed coefficients for pattern {pattern} disagree with the built-in table")]
    TableMismatch { pattern: String },

    #[error("graph cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
