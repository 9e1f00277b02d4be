//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors raised while validating samples or evaluating curves.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    /// Fewer than two entries; class rates are undefined.
    #[error("sample must contain at least 2 entries, got {0}")]
    EmptySample(usize),

    /// Every entry belongs to the same class, so rates for the other
    /// class are undefined.
    #[error("sample contains a single class (n_target={n_target}, n_complement={n_complement})")]
    SingleClassSample { n_target: u64, n_complement: u64 },

    /// A score was NaN or infinite.
    #[error("non-finite score {value} at entry {index}")]
    NonFiniteScore { index: usize, value: f64 },

    /// Target-class prevalence of 0 or 1 leaves the KS-to-ROC map undefined.
    #[error("prevalence must lie strictly between 0 and 1, got {0}")]
    DegeneratePrevalence(f64),

    /// Curve averaging needs at least two folds.
    #[error("averaging requires at least 2 folds, got {0}")]
    InsufficientFolds(usize),

    /// A parameter was outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, EvalError>;
