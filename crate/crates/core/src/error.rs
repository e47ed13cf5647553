use core::fmt;

/// Errors produced while building patterns, schedules, plans or graphs.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A pattern or edge-list line could not be parsed.
    Malformed { line: usize, reason: &'static str },
    /// An edge endpoint is outside `0..n`.
    LabelOutOfRange { line: usize, label: usize, n: usize },
    /// A pattern edge joins a vertex to itself.
    SelfLoop { line: usize, label: usize },
    /// The same pattern edge was listed twice.
    DuplicateEdge { line: usize, a: usize, b: usize },
    /// The pattern is not connected.
    Disconnected,
    /// The pattern vertex count is outside `2..=8`.
    PatternSize(usize),
    /// No named pattern with this identifier.
    UnknownPattern,
    /// A named pattern needs a size argument that was not supplied or is out of range.
    BadPatternArgument,
    /// A schedule is not a valid discovery order for the pattern.
    InvalidSchedule,
    /// A plan is inconsistent with its own pattern and schedule.
    InvalidPlan(&'static str),
    /// A match count exceeded 64 bits.
    Overflow,
    /// An oracle was asked for inputs above its complexity guard.
    OracleGuard { pattern_n: usize, graph_n: usize },
    /// The graph has more vertices than fit a 32-bit vertex ID.
    GraphTooLarge,
    /// Cost-model parameters do not give an edge probability strictly inside (0, 1).
    CostParams,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed { line, reason } => write!(f, "line {line}: {reason}"),
            Error::LabelOutOfRange { line, label, n } => {
                write!(f, "line {line}: label {label} out of range for {n} vertices")
            }
            Error::SelfLoop { line, label } => write!(f, "line {line}: self-loop on label {label}"),
            Error::DuplicateEdge { line, a, b } => write!(f, "line {line}: duplicate edge {a}-{b}"),
            Error::Disconnected => f.write_str("pattern is disconnected"),
            Error::PatternSize(n) => write!(f, "pattern has {n} vertices; supported range is 2..=8"),
            Error::UnknownPattern => f.write_str("unknown pattern name"),
            Error::BadPatternArgument => f.write_str("pattern size argument missing or outside 2..=8"),
            Error::InvalidSchedule => f.write_str("schedule is not valid for the pattern"),
            Error::InvalidPlan(why) => write!(f, "invalid plan: {why}"),
            Error::Overflow => f.write_str("count overflowed 64 bits"),
            Error::OracleGuard { pattern_n, graph_n } => write!(
                f,
                "oracle limited to patterns of at most 6 and graphs of at most 60 vertices (got {pattern_n} and {graph_n})"
            ),
            Error::GraphTooLarge => f.write_str("graph exceeds 2^32 - 1 vertices"),
            Error::CostParams => f.write_str("cost model needs n >= 2 and 0 < d < n - 1"),
        }
    }
}

impl core::error::Error for Error {}
