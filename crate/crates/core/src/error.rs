use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient was requested beyond the degree through which a series is known.
    #[error("series is exact only through degree {available}, degree {needed} requested")]
    InsufficientTruncation { needed: usize, available: usize },

    #[error("exterior elements live in different ambient genera ({left} vs {right})")]
    GenusMismatch { left: u32, right: u32 },

    #[error("element is not homogeneous of degree {expected} (found a term of degree {found})")]
    Inhomogeneous { expected: u32, found: u32 },

    #[error("inadmissible triple (r, s, t) = ({r}, {s}, {t}): {violated}")]
    Inadmissible {
        r: u32,
        s: u32,
        t: u32,
        violated: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("d must be odd (got d = {0})")]
    EvenDegree(i64),

    #[error("not implemented: {0}")]
    NotImplemented(String),

    /// Two computations that must agree did not.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("malformed series encoding: {0}")]
    Decode(String),
}
