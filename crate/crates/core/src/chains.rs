//! Double-chains, their colorings and the run statistics the path
//! construction dispatches on.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::ChainError;
use crate::geometry::{orientation, Orientation, Point, COORD_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    #[inline]
    pub fn flip(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }

    pub fn from_char(c: char) -> Result<Self, ChainError> {
        match c {
            'B' | 'b' => Ok(Color::Black),
            'W' | 'w' => Ok(Color::White),
            other => Err(ChainError::BadColorChar(other)),
        }
    }
}

/// Parses a `B`/`W` string.
pub fn parse_colors(s: &str) -> Result<Vec<Color>, ChainError> {
    s.chars().map(Color::from_char).collect()
}

pub fn colors_to_string(colors: &[Color]) -> String {
    colors.iter().map(|c| c.as_char()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainId {
    C1,
    C2,
}

impl ChainId {
    pub fn other(self) -> Self {
        match self {
            ChainId::C1 => ChainId::C2,
            ChainId::C2 => ChainId::C1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ChainId::C1 => "c1",
            ChainId::C2 => "c2",
        }
    }
}

impl fmt::Display for ChainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point of a double-chain addressed by chain and left-to-right position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointRef {
    pub chain: ChainId,
    pub pos: usize,
}

impl PointRef {
    pub const fn new(chain: ChainId, pos: usize) -> Self {
        PointRef { chain, pos }
    }

    pub const fn c1(pos: usize) -> Self {
        PointRef::new(ChainId::C1, pos)
    }

    pub const fn c2(pos: usize) -> Self {
        PointRef::new(ChainId::C2, pos)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Convex,
    Concave,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub kind: ChainKind,
    pub points: Vec<Point>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A convex upper chain `c1` and a concave lower chain `c2`.
///
/// Construction does not validate; see [`validate_double_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleChain {
    pub c1: Chain,
    pub c2: Chain,
}

impl DoubleChain {
    pub fn new(c1: Vec<Point>, c2: Vec<Point>) -> Self {
        DoubleChain {
            c1: Chain {
                kind: ChainKind::Convex,
                points: c1,
            },
            c2: Chain {
                kind: ChainKind::Concave,
                points: c2,
            },
        }
    }

    pub fn chain(&self, id: ChainId) -> &Chain {
        match id {
            ChainId::C1 => &self.c1,
            ChainId::C2 => &self.c2,
        }
    }

    pub fn point(&self, r: PointRef) -> Point {
        self.chain(r.chain).points[r.pos]
    }

    pub fn len(&self) -> usize {
        self.c1.len() + self.c2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Chain sizes differ by at most one.
    pub fn is_balanced(&self) -> bool {
        self.c1.len().abs_diff(self.c2.len()) <= 1
    }

    /// Every point, `c1` first, in the order used by [`Coloring::flat`].
    pub fn all_points(&self) -> Vec<Point> {
        self.c1.points.iter().chain(self.c2.points.iter()).copied().collect()
    }

    pub fn refs(&self) -> impl Iterator<Item = PointRef> + '_ {
        (0..self.c1.len())
            .map(PointRef::c1)
            .chain((0..self.c2.len()).map(PointRef::c2))
    }
}

/// Builds the canonical double-chain with the given chain sizes.
///
/// `c1` sits on `y = x^2` and `c2` on `y = -x^2 - h` with abscissae
/// `2i - (n - 1)`, so both chains are centred on the y-axis. With radii
/// `r1 = n1 - 1`, `r2 = n2 - 1`, every line through two `c1` points stays
/// above `-(r1 + r2)^2` over the `c2` range (and symmetrically), so
/// `h = (r1 + r2)^2 + 1` separates the chains.
pub fn generate_double_chain(n1: usize, n2: usize) -> Result<DoubleChain, ChainError> {
    if n1 == 0 || n2 == 0 {
        return Err(ChainError::EmptyChain { n1, n2 });
    }
    let infeasible = ChainError::InfeasibleSize { n1, n2 };
    let r1 = i64::try_from(n1 - 1).map_err(|_| infeasible.clone())?;
    let r2 = i64::try_from(n2 - 1).map_err(|_| infeasible.clone())?;
    let span = r1.checked_add(r2).ok_or(infeasible.clone())?;
    let h = span
        .checked_mul(span)
        .and_then(|s| s.checked_add(1))
        .ok_or(infeasible.clone())?;
    // Lowest point of c2 is at y = -(r2^2 + h).
    let depth = r2
        .checked_mul(r2)
        .and_then(|s| s.checked_add(h))
        .filter(|&d| d <= COORD_LIMIT)
        .ok_or(infeasible.clone())?;
    if r1.checked_mul(r1).is_none_or(|top| top > COORD_LIMIT) {
        return Err(infeasible);
    }
    debug_assert!(depth <= COORD_LIMIT);

    let point = |x: i64, y: i64| Point::new(x, y).expect("coordinates checked above");
    let c1 = (0..n1 as i64)
        .map(|i| {
            let x = 2 * i - r1;
            point(x, x * x)
        })
        .collect();
    let c2 = (0..n2 as i64)
        .map(|i| {
            let x = 2 * i - r2;
            point(x, -x * x - h)
        })
        .collect();
    Ok(DoubleChain::new(c1, c2))
}

/// First violated double-chain constraint, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainViolation {
    /// `points[pos]` does not lie strictly right of `points[pos - 1]`.
    NotXMonotone { chain: ChainId, pos: usize },
    /// The triple ending at `pos` turns the wrong way (or is collinear).
    NotStrictlyCurved { chain: ChainId, pos: usize },
    /// `point` is on the wrong side of the line through `line.0` and
    /// `line.1` of the other chain.
    NotSeparated { point: PointRef, line: (usize, usize) },
}

impl fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainViolation::NotXMonotone { chain, pos } => {
                write!(f, "{chain}[{pos}] is not strictly right of its predecessor")
            }
            ChainViolation::NotStrictlyCurved { chain, pos } => {
                write!(f, "{chain} bends the wrong way at position {pos}")
            }
            ChainViolation::NotSeparated { point, line } => write!(
                f,
                "{}[{}] is not strictly separated from the line through {}[{}] and {}[{}]",
                point.chain,
                point.pos,
                point.chain.other(),
                line.0,
                point.chain.other(),
                line.1
            ),
        }
    }
}

/// Checks every double-chain constraint exactly.
///
/// Separation is checked in `O(|c1| * |c2|)`: `q` lies strictly below every
/// line through two `c1` points iff the `c1` points, taken left to right, are
/// in strictly clockwise angular order around `q` within a half-plane. That
/// holds iff `(q, a_0, a_j)` and `(q, a_i, a_(i+1))` are all clockwise.
pub fn validate_double_chain(dc: &DoubleChain) -> Result<(), ChainViolation> {
    for (id, want) in [
        (ChainId::C1, Orientation::CounterClockwise),
        (ChainId::C2, Orientation::Clockwise),
    ] {
        let pts = &dc.chain(id).points;
        for pos in 1..pts.len() {
            if pts[pos].x() <= pts[pos - 1].x() {
                return Err(ChainViolation::NotXMonotone { chain: id, pos });
            }
        }
        for pos in 2..pts.len() {
            if orientation(pts[pos - 2], pts[pos - 1], pts[pos]) != want {
                return Err(ChainViolation::NotStrictlyCurved { chain: id, pos });
            }
        }
    }
    // c2 below lines of c1 (clockwise), c1 above lines of c2 (counter-clockwise).
    for (id, want) in [
        (ChainId::C2, Orientation::Clockwise),
        (ChainId::C1, Orientation::CounterClockwise),
    ] {
        let other = &dc.chain(id.other()).points;
        for (pos, &q) in dc.chain(id).points.iter().enumerate() {
            let point = PointRef::new(id, pos);
            for j in 1..other.len() {
                if orientation(q, other[0], other[j]) != want {
                    return Err(ChainViolation::NotSeparated { point, line: (0, j) });
                }
                if orientation(q, other[j - 1], other[j]) != want {
                    return Err(ChainViolation::NotSeparated {
                        point,
                        line: (j - 1, j),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Colors of both chains, each indexed left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub c1: Vec<Color>,
    pub c2: Vec<Color>,
}

impl Coloring {
    pub fn new(c1: Vec<Color>, c2: Vec<Color>) -> Self {
        Coloring { c1, c2 }
    }

    pub fn parse(c1: &str, c2: &str) -> Result<Self, ChainError> {
        Ok(Coloring::new(parse_colors(c1)?, parse_colors(c2)?))
    }

    pub fn chain(&self, id: ChainId) -> &[Color] {
        match id {
            ChainId::C1 => &self.c1,
            ChainId::C2 => &self.c2,
        }
    }

    pub fn get(&self, r: PointRef) -> Color {
        self.chain(r.chain)[r.pos]
    }

    pub fn len(&self) -> usize {
        self.c1.len() + self.c2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All colors, `c1` first.
    pub fn flat(&self) -> Vec<Color> {
        self.c1.iter().chain(self.c2.iter()).copied().collect()
    }

    pub fn black_count(&self) -> usize {
        count(&self.c1, Color::Black) + count(&self.c2, Color::Black)
    }

    /// Checks that the coloring has one entry per point of `dc`.
    pub fn check_fits(&self, dc: &DoubleChain) -> Result<(), ChainError> {
        for id in [ChainId::C1, ChainId::C2] {
            let (expected, found) = (dc.chain(id).len(), self.chain(id).len());
            if expected != found {
                return Err(ChainError::LengthMismatch {
                    chain: id,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }
}

pub fn count(colors: &[Color], c: Color) -> usize {
    colors.iter().filter(|&&x| x == c).count()
}

/// Number of maximal intervals of `major`-colored points.
pub fn count_runs(colors: &[Color], major: Color) -> usize {
    let mut runs = 0;
    let mut prev = None;
    for &c in colors {
        if c == major && prev != Some(major) {
            runs += 1;
        }
        prev = Some(c);
    }
    runs
}

/// Maximal major intervals as inclusive `(lo, hi)` position pairs.
pub fn runs(colors: &[Color], major: Color) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, &c) in colors.iter().enumerate() {
        match (c == major, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                out.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, colors.len() - 1));
    }
    out
}

/// Color counts, run numbers and major surplus of a colored double-chain,
/// reported with black major on `c1` and white major on `c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainStats {
    pub b1: usize,
    pub w1: usize,
    pub b2: usize,
    pub w2: usize,
    pub r1: usize,
    pub r2: usize,
    /// `w2 - b2`; equal to `b1 - w1` when the total is even and equitable.
    pub delta: i64,
    /// Whether color names were exchanged to reach the normal form.
    pub colors_swapped: bool,
}

impl ChainStats {
    pub fn total_black(&self) -> usize {
        self.b1 + self.b2
    }

    pub fn total_white(&self) -> usize {
        self.w1 + self.w2
    }
}

/// Computes [`ChainStats`].
///
/// Colors are swapped iff `b1 + w2 < w1 + b2`. For an equitable coloring
/// this yields `b1 >= w1` and `w2 >= b2`; ties keep black major on `c1`.
pub fn compute_stats(col: &Coloring) -> ChainStats {
    let (b1, w1) = (count(&col.c1, Color::Black), count(&col.c1, Color::White));
    let (b2, w2) = (count(&col.c2, Color::Black), count(&col.c2, Color::White));
    let swap = b1 + w2 < w1 + b2;
    let (b1, w1, b2, w2) = if swap { (w1, b1, w2, b2) } else { (b1, w1, b2, w2) };
    // Major on c1 is black after normalization; in original names that is
    // white when swapped.
    let major1 = if swap { Color::White } else { Color::Black };
    ChainStats {
        b1,
        w1,
        b2,
        w2,
        r1: count_runs(&col.c1, major1),
        r2: count_runs(&col.c2, major1.flip()),
        delta: w2 as i64 - b2 as i64,
        colors_swapped: swap,
    }
}

pub fn is_equitable_colors(colors: &[Color]) -> bool {
    let b = count(colors, Color::Black);
    b.abs_diff(colors.len() - b) <= 1
}

/// Color classes differ in size by at most one.
pub fn is_equitable(col: &Coloring) -> bool {
    let b = col.black_count();
    b.abs_diff(col.len() - b) <= 1
}

/// Same number of black points as black vertices.
pub fn is_compatible(point_col: &Coloring, graph_col: &[Color]) -> Result<bool, ChainError> {
    if point_col.len() != graph_col.len() {
        return Err(ChainError::SizeMismatch {
            points: point_col.len(),
            vertices: graph_col.len(),
        });
    }
    Ok(point_col.black_count() == count(graph_col, Color::Black))
}

/// The period-16 pattern: 2 black, 4 white, 6 black, 4 white.
pub const PERIOD_16: [Color; 16] = {
    use Color::{Black as B, White as W};
    [B, B, W, W, W, W, B, B, B, B, B, B, W, W, W, W]
};

/// `c1` colors repeating [`PERIOD_16`] from position 0.
pub fn periodic_coloring_16(n1: usize) -> Vec<Color> {
    (0..n1).map(|i| PERIOD_16[i % 16]).collect()
}
