use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid field modulus {0}: must be a prime > 2 and below 2^32")]
    InvalidModulus(u64),
    #[error("invalid field specification {0:?}: expected \"q\" or \"fp:<prime>\"")]
    InvalidFieldSpec(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable {name} at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("generator {index} is not homogeneous")]
    NonHomogeneousGenerator { index: usize },
    #[error("determinant interpolation inconsistent at verification point {point}")]
    InterpolationInconsistent { point: usize },
    #[error("quotient is not artinian up to degree {bound}")]
    NotArtinian { bound: usize },
    #[error("degree {degree} out of range (socle degree {socle_degree})")]
    DegreeOutOfRange { degree: usize, socle_degree: usize },
    #[error("genericity failure after {attempts} attempts: {reason}")]
    GenericityFailure { attempts: usize, reason: String },
    #[error("duplicate points in input: {first} and {second}")]
    DuplicatePoints { first: usize, second: usize },
    #[error("Groebner budget of {limit} reductions exceeded")]
    BudgetExceeded { limit: usize },
    #[error("{count} maximal minors exceed the cap of {cap}")]
    TooManyMinors { count: u128, cap: usize },
    #[error("Gorenstein hint rejected: {0}")]
    HintRejected(String),
    #[error("strong Lefschetz criteria disagree: {0}")]
    CriteriaDisagree(String),
    #[error("support must be non-empty")]
    EmptySupport,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
