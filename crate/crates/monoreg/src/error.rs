use thiserror::Error;

/// Errors produced by ideal arithmetic and the Betti/regularity oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator list describes the unit ideal (contains the monomial 1),
    /// which is outside the representable domain.
    #[error("generators describe the unit ideal")]
    UnitIdeal,

    /// A colon operation produced the unit ideal.
    #[error("colon quotient is the unit ideal")]
    ColonIsUnit,

    /// Colon by the zero ideal is undefined.
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    /// The requested invariant is undefined for the zero ideal.
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    /// Operands were built over different ring contexts.
    #[error("ring contexts disagree: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    /// An input exceeded a configured complexity limit.
    #[error("complexity guard exceeded: {what} is {actual}, limit {limit}")]
    ComplexityGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// The characteristic requested for a prime field is not usable.
    #[error("{0} is not an odd prime below 2^31")]
    BadPrime(u64),

    /// A degree sequence for a complete intersection was empty or contained 0.
    #[error("complete-intersection degrees must be a non-empty list of positive integers")]
    InvalidDegrees,

    /// The input ideal does not satisfy a structural precondition of the
    /// requested formula or check.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Cross-checking the same computation over two coefficient fields gave
    /// different answers; this indicates a bug and is always fatal.
    #[error("field disagreement: regularity is {reg_a} over {field_a} but {reg_b} over {field_b}")]
    FieldDisagreement {
        field_a: String,
        reg_a: u32,
        field_b: String,
        reg_b: u32,
    },

    /// An internal consistency check failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
