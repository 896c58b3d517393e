use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("square root of a non-positive rational: {0}")]
    NonPositiveSqrt(String),
    #[error("radicand {0} does not fit in 64 bits")]
    RadicandOverflow(String),
    #[error("division by a scalar that is not a single term: {0}")]
    NonMonomialDivisor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),

    #[error("unsupported root system {family}{rank}")]
    UnsupportedRootSystem { family: char, rank: usize },
    #[error("unknown family {0:?} (expected A, B, C or D)")]
    UnknownFamily(String),
    #[error("simple root index {index} out of range 1..={rank}")]
    ThetaOutOfRange { index: usize, rank: usize },

    #[error("summand class {0} has no metric parameter")]
    MissingClass(usize),
    #[error("metric parameter for class {class} must be positive, got {value}")]
    NonPositiveLambda { class: usize, value: String },
    #[error("expected {expected} values (one per summand class), got {got}")]
    ClassCountMismatch { expected: usize, got: usize },
    #[error("epsilon sign for class {class} must be +1 or -1, got {value}")]
    BadSign { class: usize, value: i64 },
    #[error("vector has support outside the tangent space: {0}")]
    OutsideTangent(String),

    #[error("theta' is empty")]
    EmptyThetaPrime,
    #[error("theta' is contained in theta, so the sub-flag has no tangent directions")]
    ThetaPrimeInTheta,
    #[error("generators do not close into a subalgebra of the compact form: {0}")]
    NotSubalgebra(String),
    #[error("subalgebra does not split along k + m")]
    NotReductiveSplit,
    #[error("tangent space is not J-invariant; the orbit is not holomorphic")]
    NotHolomorphic,
    #[error("orbit is {0}")]
    DegenerateSubmanifold(&'static str),
    #[error("exact elimination needs a single-term pivot; none available in {0}")]
    NoMonomialPivot(String),
    #[error("norm of {0} is not a positive rational; exact orthonormalization impossible")]
    NonRationalNorm(String),
    #[error("vector {0} is not in the tangent space of the submanifold")]
    OutsideSubmanifold(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
