use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("counterexample {name} did not reproduce: computed {computed}")]
    CounterexampleMismatch { name: String, computed: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
