use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the algebra kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),

    #[error("division by zero in F_p")]
    DivisionByZero,

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("exponent vectors have different lengths ({0} vs {1})")]
    DimensionMismatch(usize, usize),

    #[error("exponent overflow: {0} exceeds the per-variable limit 2^15")]
    ExponentOverflow(u64),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("ideal must have at least one generator")]
    EmptyGeneratorList,

    #[error("generator {0} is the zero polynomial")]
    ZeroGenerator(usize),

    #[error("ideal is not homogeneous (generator {0})")]
    NonHomogeneous(usize),

    #[error("ideal is the unit ideal; it does not define a proper subscheme")]
    UnitIdeal,

    #[error("requested degree {requested} is below generator degree {generator}")]
    DegreeTooSmall { requested: u32, generator: u32 },

    #[error("integer overflow in exact arithmetic ({0})")]
    ArithmeticOverflow(&'static str),

    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("resource cap exceeded: {what} reached {reached} (cap {cap})")]
    ResourceExceeded {
        what: &'static str,
        reached: usize,
        cap: usize,
    },

    /// A random choice produced a degenerate configuration (for example a
    /// zero sample from a graded piece, almost surely a sign the field is
    /// too small for the probabilistic method). Retry with a fresh seed or
    /// a larger characteristic.
    #[error("degenerate random choice: {0}")]
    DegenerateSample(String),

    /// Repeated runs with derived seeds disagreed. The offending outputs
    /// ride along so callers can report them.
    #[error("inconsistent runs across {} repeats", runs.len())]
    InconsistentRuns { runs: Vec<(Vec<i64>, Vec<i64>)> },

    #[error("internal error: {0}")]
    Internal(String),
}
