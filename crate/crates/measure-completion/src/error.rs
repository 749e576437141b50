use thiserror::Error;

/// Errors produced by the algebra, completion, and harness layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An interval literal violated `0 <= lo < hi <= 1`.
    #[error("malformed interval [{lo},{hi}): bounds must satisfy 0 <= lo < hi <= 1")]
    MalformedInterval { lo: String, hi: String },

    /// A finite model was constructed with invalid atom data.
    #[error("invalid finite model: {0}")]
    InvalidModel(String),

    /// Two operands belong to different ground models.
    #[error("operands belong to different models")]
    ModelMismatch,

    /// A sampled index pair violated the declared Cauchy modulus.
    #[error(
        "sequence failed the Cauchy spot-check: dist(term({n}), term({m})) = {observed} > {bound}"
    )]
    NotCauchy {
        n: u64,
        m: u64,
        observed: String,
        bound: String,
    },

    /// A sampled partial-join tail exceeded the certified bound.
    #[error(
        "join certificate violated: mu(V_{m}) - mu(V_{n}) exceeds {bound} (observed gap {observed})"
    )]
    BadCertificate {
        n: u64,
        m: u64,
        observed: String,
        bound: String,
    },

    /// A sampled pair of sequence items failed the disjointness test.
    #[error("items {i} and {j} are not disjoint at the requested tolerance")]
    NotDisjoint { i: u64, j: u64 },

    /// A set-expression literal could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A scenario name or parameter was out of range.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
