use thiserror::Error;

/// Errors reported by the library.
///
/// `InternalInvariant` marks conditions the library guarantees never happen on
/// valid input; everything else is a precondition failure on caller input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },

    #[error("field order {order} exceeds the configured bound {bound}")]
    FieldTooLarge { order: u128, bound: u64 },

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("conjugation needs a field of square order, but GF({p}^{m}) has odd degree")]
    NoConjugation { p: u64, m: usize },

    #[error("no element of order {r}: {r} does not divide {order} - 1")]
    NoSuchRoot { r: u64, order: u64 },

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("invalid coset context: {0}")]
    InvalidContext(String),

    #[error("residue {elem} lies outside the exponent set of the context")]
    NotInOmega { elem: u64 },

    #[error("set is not closed under multiplication by q^2: the orbit of {elem} leaves it")]
    NotCosetClosed { elem: u64 },

    #[error("claimed distance {claimed} exceeds the derived lower bound {delta}")]
    DistanceUnproven { claimed: u64, delta: u64 },

    #[error("unsupported context: {0}")]
    Unsupported(String),

    #[error("malformed query: {0}")]
    MalformedQuery(String),

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("distance {d} out of the admissible range {lo}..={hi}")]
    DistanceOutOfRange { d: u64, lo: u64, hi: u64 },

    #[error("catalog line {line}: {msg}")]
    CatalogParse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
