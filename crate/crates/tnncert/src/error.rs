use thiserror::Error;

/// Errors across the crate. Domain guards (size limits, mismatched sizes,
/// malformed inputs) are reported here; internal invariant violations panic.
#[derive(Debug, Error)]
pub enum Error {
    /// An input parameter fell outside the supported range.
    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: String,
        value: String,
        allowed: String,
    },

    /// Two inputs that must agree in size did not.
    #[error("size mismatch: {left} vs {right} ({context})")]
    SizeMismatch {
        left: usize,
        right: usize,
        context: &'static str,
    },

    /// A sequence that must be a partition (weakly decreasing positive parts)
    /// was not.
    #[error("not a partition: {0}")]
    NotAPartition(String),

    /// The two partitions are not comparable in the majorization order.
    #[error("partitions not comparable under majorization: {0} vs {1}")]
    NotComparable(String, String),

    /// The two partitions do not differ by a single box move.
    #[error("partitions do not differ by one box move: {0} vs {1}")]
    NotABoxMove(String, String),

    /// A diagram edge list failed validation.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    /// A coloring failed validation (non-proper, wrong vertex set, ...).
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// A certificate could not be produced for the requested parameters.
    #[error("certificate unavailable: {0}")]
    Certificate(String),

    /// Text input (CSV matrix, rational scalar, partition list) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
