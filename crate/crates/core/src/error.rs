use alloc::string::String;

use thiserror::Error;

use crate::chains::ChainId;
use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate ({x}, {y}) exceeds the 2^62 bound")]
    CoordinateOverflow { x: i64, y: i64 },
    #[error("segment endpoints coincide at {0:?}")]
    DegenerateSegment(Point),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain sizes must be positive, got ({n1}, {n2})")]
    EmptyChain { n1: usize, n2: usize },
    #[error("double-chain of sizes ({n1}, {n2}) does not fit the coordinate bound")]
    InfeasibleSize { n1: usize, n2: usize },
    #[error("coloring of {chain} has {found} entries, chain has {expected} points")]
    LengthMismatch {
        chain: ChainId,
        expected: usize,
        found: usize,
    },
    #[error("point coloring has {points} entries but the graph has {vertices} vertices")]
    SizeMismatch { points: usize, vertices: usize },
    #[error("invalid color character {0:?}; expected 'B' or 'W'")]
    BadColorChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HedgehogError {
    #[error("cover is infeasible: major surplus {delta} but d00 - d11 = {d00} - {d11}")]
    InfeasibleCover { delta: i64, d00: usize, d11: usize },
    #[error("{free} free minor points cannot fill {gaps} gaps between body majors")]
    SpineMismatch { free: usize, gaps: usize },
    #[error("body [{lo}, {hi}] is malformed: {reason}")]
    MalformedBody {
        lo: usize,
        hi: usize,
        reason: &'static str,
    },
    #[error("bodies overlap at position {0}")]
    Overlap(usize),
    #[error("major point at position {0} is not covered by any body")]
    UncoveredMajor(usize),
    #[error("cannot cover a chain of {len} points with {k} hedgehogs: runs = {runs}, surplus = {delta}")]
    CoverPrecondition {
        len: usize,
        k: usize,
        runs: usize,
        delta: i64,
    },
}

/// Failures of the constructive embedders.
///
/// `Precondition` means the caller handed in an instance outside the
/// construction's hypotheses. `Internal` means an invariant the construction
/// relies on did not hold, which is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("coloring is not equitable: {black} black vs {white} white")]
    NotEquitable { black: usize, white: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl EmbedError {
    pub fn is_internal(&self) -> bool {
        matches!(self, EmbedError::Internal(_))
    }
}

impl From<HedgehogError> for EmbedError {
    // The embedders only build covers they have already counted, so a
    // rejected cover is always an accounting bug.
    fn from(e: HedgehogError) -> Self {
        EmbedError::Internal(alloc::format!("{e}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex out of range")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph has {colors} colors for {n} vertices")]
    ColorCount { n: usize, colors: usize },
    #[error("edge ({0}, {1}) is monochromatic")]
    Monochromatic(usize, usize),
    #[error("graph is not a {0}")]
    WrongClass(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("three of the points are collinear")]
    NotInGeneralPosition,
    #[error("graph has {vertices} vertices but there are {points} points")]
    SizeMismatch { vertices: usize, points: usize },
    #[error("search budget must be positive")]
    EmptyBudget,
}
