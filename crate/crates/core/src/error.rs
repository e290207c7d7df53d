use thiserror::Error;

/// Errors raised by ring, matrix and code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{value} is not a unit in Z_{modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("ring mismatch: Z_{left} vs Z_{right}")]
    RingMismatch { left: u64, right: u64 },

    #[error("Z_{0} is not a chain ring")]
    NotAChainRing(u64),

    #[error("Z_{0} is not a field")]
    NotAField(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not of full row rank")]
    NotFullRowRank,

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),

    #[error("enumeration needs {needed} vectors, cap is {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
