use thiserror::Error;

/// Errors raised by the classification library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: String, right: String },
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("Faulhaber normalisation needs exponent <= p - 2 (got a = {a}, p = {p})")]
    CaseNotApplicable { a: u64, p: u64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("phase {phase} has a denominator that is not a power of {p}; the gate is in no level of the hierarchy")]
    NotInHierarchy { phase: String, p: u64 },
    #[error("differences do not close up: sum of the cycle is {residual}, expected 0")]
    InconsistentDifference { residual: String },
    #[error("enumeration would visit {candidates} candidates (limit {limit})")]
    TooLarge { candidates: u128, limit: u128 },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("exponent {exponent} exceeds p - 1 = {max}")]
    ExponentOutOfRange { exponent: u32, max: u64 },
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("classifiers disagree: {0}")]
    Disagreement(String),
    #[error("operator is not diagonal")]
    NotDiagonal,
}

pub type Result<T> = std::result::Result<T, Error>;
