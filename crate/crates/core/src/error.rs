use thiserror::Error;

/// Errors raised by the algebra engine and its checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division had a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    /// Rewriting exceeded the step cap; carries the word being reduced.
    #[error("rewriting did not terminate within {cap} steps (word {word})")]
    NonTermination { cap: usize, word: String },
    /// A map was applied to a generator it does not define.
    #[error("map `{map}` is undefined on generator {generator}")]
    UndefinedOnGenerator { map: String, generator: String },
    #[error("Pfaffian of odd-size matrix ({0})")]
    OddSize(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Bad command-line style parameters for a suite.
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
