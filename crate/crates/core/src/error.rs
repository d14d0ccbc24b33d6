use thiserror::Error;

/// Errors surfaced by the library. Mathematical negatives (an ideal is not
/// prime, a functor pair is not adjoint) are ordinary return values, never
/// errors; this enum covers contract violations, unsupported inputs, and
/// internal invariant breaks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("elements belong to different parent algebras")]
    ParentMismatch,

    #[error("{0} is not a prime number")]
    NotPrime(u64),

    #[error("unit law fails at basis element {label}")]
    NotUnital { label: String },

    #[error("associativity fails at basis triple ({i}, {j}, {k})")]
    AssociativityFailure { i: String, j: String, k: String },

    #[error("homomorphism does not preserve the unit")]
    HomNotUnital,

    #[error("homomorphism is not multiplicative at basis pair ({i}, {j})")]
    HomNotMultiplicative { i: String, j: String },

    #[error("bimodule action invalid: {0}")]
    BimoduleInvalid(String),

    #[error("cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("subspace is not closed under multiplication")]
    NotMultiplicativelyClosed,

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("operation requires a proper ideal")]
    ProperIdealRequired,

    #[error("center cannot be split over Q with the implemented factorization: {0}")]
    NonSplitCenter(String),

    #[error("Goldie rank search failed its divisibility cross-checks: {0}")]
    RankUncertified(String),

    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    EnumerationCap {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("operation requires a finite prime field, got {0}")]
    FiniteFieldRequired(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
