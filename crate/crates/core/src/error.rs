use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Comparing monomials of different degrees under the sorted-index order.
    #[error("incomparable degrees")]
    DegreeMismatch,
    /// Combining monomials living in different ambient variable counts.
    /// There is no implicit embedding; callers must re-embed explicitly.
    #[error("ambient variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("monomial is not squarefree")]
    NotSquarefree,
    #[error("operation undefined for the unit monomial 1")]
    UnitMonomial,
    #[error("monomial is not {0}-spread")]
    NotTSpread(usize),
    #[error("monomial {0} is not {1}-bounded")]
    NotKBounded(String, u32),
    #[error("ideal is not {0}-Borel")]
    NotKBorel(u32),
    #[error("height undefined: zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("generators are not all of the same degree")]
    NotEquigenerated,
    #[error("theorem hypothesis: not a principal ideal")]
    PrincipalIdeal,
    #[error("order is not a permutation of the minimal generating set")]
    NotAPermutation,
    #[error("monomial is not among the minimal generators")]
    NotAGenerator,
    #[error("monomial does not lie in the expected ideal")]
    NotAMember,
    /// A linear-quotient verification failed where a theorem (or a caller's
    /// precondition) promised success. Carries the failing position (1-based)
    /// and the offending non-variable colon generator.
    #[error("linear quotients fail at position {index}: colon generator {witness} has degree > 1")]
    NotLinearQuotients { index: usize, witness: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
