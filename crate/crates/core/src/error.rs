use thiserror::Error;

/// Errors produced by model construction, scoring and scanning.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet needs at least 2 symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("{symbols} symbols but {probs} probabilities")]
    LengthMismatch { symbols: usize, probs: usize },
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(char),
    #[error("probability {value} for symbol {symbol:?} is not in (0, 1)")]
    InvalidProbability { symbol: char, value: f64 },
    #[error("probabilities sum to {0}, expected 1")]
    ProbabilitySum(f64),
    #[error("character {found:?} at position {position} is not in the alphabet")]
    UnknownSymbol { found: char, position: usize },
    #[error("symbol index {index} out of range for alphabet of size {k}")]
    SymbolIndex { index: usize, k: usize },
    #[error("span [{start}, {end}] out of range for string of length {n}")]
    SpanOutOfRange { start: usize, end: usize, n: usize },
    #[error("count vector is empty")]
    EmptyCounts,
    #[error("count vector has {got} entries, model has {k} symbols")]
    CountsArity { got: usize, k: usize },
    #[error("cannot scan an empty string")]
    EmptyString,
    #[error("t must be at least 1")]
    ZeroT,
    #[error("threshold must be a finite non-negative number, got {0}")]
    InvalidThreshold(f64),
    #[error("no substring longer than {gamma} in a string of length {n}")]
    MinLengthTooLarge { gamma: usize, n: usize },
    #[error("score {score} exceeds skip budget {budget}")]
    ScoreAboveBudget { score: f64, budget: f64 },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
