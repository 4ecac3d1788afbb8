use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ambient variable lists differ")]
    AmbientMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("substitution produces an identically zero denominator")]
    SubstitutionPole,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeded the budget of {0} elements")]
    ClosureBudgetExceeded(usize),
    #[error("certificate failure in step {step} ({obligation}): {detail}")]
    CertificateFailure {
        step: String,
        obligation: String,
        detail: String,
    },
    #[error("wrong characteristic: {0}")]
    WrongCharacteristic(String),
    #[error("a field containing a primitive cube root of unity is required")]
    NeedsCycloField,
    #[error("identity failure at coefficient a{index}: {detail}")]
    IdentityFailure { index: usize, detail: String },
    #[error("specialization hits a pole of the generic coefficients")]
    PoleAtParameters,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("no usable primes in the requested range")]
    NoUsablePrimes,
    #[error("random sampling exhausted {0} retries without avoiding poles")]
    RetriesExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
