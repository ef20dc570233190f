use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = WrmError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WrmError {
    #[error("zero cannot be raised to the negative power {0}")]
    ZeroToNegativePower(i64),

    /// A parameter that must be nonzero (a pivot of a transform, `r*v`, `x*z`, ...) was zero.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The weight `y + x*z` vanished where a construction divides by it.
    #[error("singular weight: y + x*z = 0")]
    SingularWeight,

    /// A closed-form formula was requested outside its stated hypothesis.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("boundary mismatch: alpha[0] = {alpha0} but beta[0] = {beta0}")]
    BoundaryMismatch { alpha0: Box<Rational>, beta0: Box<Rational> },

    #[error("sequence length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("explicit sequence has {got} entries but {needed} are required")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("sequences and matrices must have at least one entry")]
    Empty,

    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix rows are ragged or non-square")]
    NotSquare,

    #[error("parse error: {0}")]
    Parse(String),
}

impl WrmError {
    /// True for errors raised because an input violates a precondition of the
    /// underlying identity (as opposed to malformed input).
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            WrmError::ZeroToNegativePower(_)
                | WrmError::Parameter(_)
                | WrmError::SingularWeight
                | WrmError::Hypothesis(_)
                | WrmError::BoundaryMismatch { .. }
        )
    }
}
