use thiserror::Error;

use crate::laws::LawReport;
use crate::scalar::Ring;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or evaluating algebraic data.
///
/// Law violations are not errors: they come back as [`LawReport`]s. The
/// variants that carry reports are raised when a construction *requires* a
/// law to hold and it does not.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{element} is not invertible in {ring}")]
    NotInvertible { element: String, ring: Ring },
    #[error("carrier mismatch: expected {expected}, found {found}")]
    CarrierMismatch { expected: String, found: String },
    #[error("letter {letter} is outside the basis of size {basis}")]
    LetterOutOfRange { letter: usize, basis: usize },
    #[error("letter product {left}*{right} escapes the basis of {algebra}")]
    BasisOverflow {
        left: usize,
        right: usize,
        algebra: String,
    },
    #[error("reduced tensor operand has a nonzero unit coefficient: {0}")]
    UnitInReduced(String),
    #[error("{0} has no multiplicative unit")]
    NotUnital(String),
    #[error("{0} is not graded")]
    NotGraded(String),
    #[error("K is not invertible on degree {degree}: matrix {matrix}")]
    SingularComponent { degree: usize, matrix: String },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("inverse validation failed at {witness}")]
    InverseValidation { witness: String },
    #[error("{element} is not in {space}")]
    OutsideSubspace { element: String, space: String },
    #[error("restriction of {map} escapes the target kernel at {witness}")]
    RestrictionEscapes { map: String, witness: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
    #[error("invalid integration: {}", .0.summary())]
    InvalidIntegration(Box<LawReport>),
    #[error("invalid FTC-pair: {}", summarize(.0))]
    InvalidFtcPair(Vec<LawReport>),
    #[error("invalid Zinbiel instance: {}", summarize(.0))]
    InvalidZinbiel(Vec<LawReport>),
    #[error("invalid morphism: {}", .0.summary())]
    InvalidMorphism(Box<LawReport>),
    #[error("construction input violates its preconditions: {}", summarize(.0))]
    InvalidConstructionInput(Vec<LawReport>),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

fn summarize(reports: &[LawReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.holds())
        .map(LawReport::summary)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Self {
        Error::CarrierMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
