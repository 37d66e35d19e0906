use thiserror::Error;

/// Errors surfaced by the census library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("extension degree must be at least 1")]
    DegreeZero,

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field context mismatch: operands live in different fields")]
    ContextMismatch,

    #[error("inversion of zero")]
    ZeroInversion,

    #[error("element does not lie in the expected field")]
    WrongField,

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("central element check failed: z^(q-eps) != 1")]
    NotCentral,

    #[error("inadmissible pair: k = {k} does not divide q - eps = {q_minus_eps}")]
    Inadmissible { k: u64, q_minus_eps: u64 },

    #[error("{what} cap exceeded: needed {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("malformed class label: {0}")]
    MalformedLabel(String),

    #[error("labels are only defined for GL/GU, not {0}")]
    LabelUnsupported(String),

    #[error("{0} is not prime or does not divide q - eps")]
    BadEllPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
