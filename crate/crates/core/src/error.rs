use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FibError {
    #[error("components ({a}, {b}) differ in parity; (a + b*sqrt(5))/2 needs a = b (mod 2)")]
    ParityMismatch { a: String, b: String },
    #[error("index {n} is out of range for the floating-point estimate (maximum {max})")]
    FloatRange { n: u64, max: u64 },
    #[error("unknown algorithm `{0}` (expected one of: iterative, lucas-linear, pair-fast, doubling, matrix, float)")]
    UnknownAlgorithm(String),
    #[error("algorithm `{0}` cannot produce Lucas numbers")]
    LucasUnsupported(String),
    #[error("repeats must be at least 1")]
    ZeroRepeats,
    #[error("benchmark repeats of {algo} at n = {n} disagreed")]
    InconsistentRepeats { algo: String, n: u64 },
    #[error("cannot emit a report with no records")]
    EmptyReport,
    #[error("report serialization failed: {0}")]
    Serialize(String),
}

pub type Result<T, E = FibError> = std::result::Result<T, E>;
