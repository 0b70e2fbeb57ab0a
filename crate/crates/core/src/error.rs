use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {0} is below 4")]
    DegreeTooSmall(u64),
    #[error("degree {0} exceeds the limit {1}")]
    DegreeTooLarge(u64, u64),
    #[error("invalid cyclic type {m},({a},{b}): {reason}")]
    InvalidType { m: u64, a: u64, b: u64, reason: String },
    #[error("order {m} does not divide {integer}, the divisor integer of case {case}")]
    OrderNotAdmissible { case: String, m: u64, integer: u64 },
    #[error("type {m},({a},{b}) does not satisfy the congruences of case {case} in degree {d}")]
    InconsistentCandidate {
        case: String,
        d: u64,
        m: u64,
        a: u64,
        b: u64,
    },
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("characteristic {p} divides the degree {d}")]
    CharacteristicDividesDegree { p: u64, d: u64 },
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("mixed prime fields: {0} and {1}")]
    FieldMismatch(u64, u64),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("no suitable prime below {0}")]
    NoPrime(u64),
    #[error("group descriptor has no matrix generators")]
    MissingGenerators,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("golden data: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;
