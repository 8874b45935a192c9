use alloc::string::String;
use core::fmt;

use crate::graph::VertexId;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by the library.
///
/// Variants fall in two groups: bad user input (graphs, colorings,
/// rectangles, color counts) and broken internal invariants. The CLI maps
/// the first group to exit code 2 and the second to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge joins two vertices of the same class or references a vertex
    /// outside the graph.
    BadEdge { left: usize, right: usize },
    DuplicateEdge { left: usize, right: usize },
    UnknownEdge(usize),
    /// The coloring does not have one color per edge.
    ColoringLength { expected: usize, found: usize },
    ColorOutOfRange { edge: usize, color: usize, k: usize },
    /// `k` is smaller than the maximum degree.
    InfeasibleColorCount { k: usize, max_degree: usize },
    NotProper,
    NotAlmost,
    NotRegular { vertex: VertexId, degree: usize, k: usize },
    UnbalancedClasses { left: usize, right: usize },
    /// The recorded way cannot be replayed from the given coloring.
    WayDoesNotApply(String),
    /// No reverse way reproduces the source coloring.
    BijectionFailure,
    /// A precondition of a transformation step is violated.
    Contract(String),
    InvalidRectangle(String),
    /// The enumeration produced more solutions than the caller allowed.
    LimitExceeded { limit: usize },
    /// The graph is too large for exhaustive enumeration without override.
    TooLarge { edges: usize, max: usize },
    /// A proven bound was exceeded; this is an implementation defect.
    BoundViolation(String),
    Parse(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by the
    /// implementation.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::BijectionFailure | Error::BoundViolation(_) | Error::WayDoesNotApply(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadEdge { left, right } => write!(f, "edge ({left}, {right}) is not a left-right pair of the graph"),
            Error::DuplicateEdge { left, right } => write!(f, "duplicate edge ({left}, {right})"),
            Error::UnknownEdge(e) => write!(f, "unknown edge id {e}"),
            Error::ColoringLength { expected, found } => {
                write!(f, "coloring has {found} entries, graph has {expected} edges")
            }
            Error::ColorOutOfRange { edge, color, k } => {
                write!(f, "edge {edge} has color {color}, outside 0..{k}")
            }
            Error::InfeasibleColorCount { k, max_degree } => {
                write!(f, "infeasible color count: k = {k} < max degree {max_degree}")
            }
            Error::NotProper => f.write_str("coloring is not proper"),
            Error::NotAlmost => f.write_str("not almost"),
            Error::NotRegular { vertex, degree, k } => {
                write!(f, "graph is not {k}-regular: vertex {vertex} has degree {degree}")
            }
            Error::UnbalancedClasses { left, right } => {
                write!(f, "vertex classes differ in size ({left} vs {right})")
            }
            Error::WayDoesNotApply(why) => write!(f, "way does not apply: {why}"),
            Error::BijectionFailure => f.write_str("reverse way does not reproduce the source coloring"),
            Error::Contract(why) => write!(f, "contract violation: {why}"),
            Error::InvalidRectangle(why) => write!(f, "invalid rectangle: {why}"),
            Error::LimitExceeded { limit } => write!(f, "more than {limit} solutions"),
            Error::TooLarge { edges, max } => {
                write!(f, "{edges} edges exceeds the enumeration guard of {max}; pass the override to proceed")
            }
            Error::BoundViolation(why) => write!(f, "bound violated: {why}"),
            Error::Parse(why) => write!(f, "parse error: {why}"),
        }
    }
}
