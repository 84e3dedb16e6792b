//! Exact planar predicates on integer points.
//!
//! Every predicate is decided from signs of 2x2 determinants evaluated in
//! 128-bit integer arithmetic. Nothing here rounds.

use core::cmp::Ordering;
use core::fmt;

use crate::error::GeometryError;

/// Largest admissible absolute coordinate value.
pub const COORD_LIMIT: i64 = 1 << 62;

/// A point with integer coordinates bounded by [`COORD_LIMIT`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    x: i64,
    y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Result<Self, GeometryError> {
        if x.unsigned_abs() > COORD_LIMIT as u64 || y.unsigned_abs() > COORD_LIMIT as u64 {
            return Err(GeometryError::CoordinateOverflow { x, y });
        }
        Ok(Point { x, y })
    }

    #[inline]
    pub fn x(&self) -> i64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> i64 {
        self.y
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    /// `-1`, `0` or `+1`.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Orientation of `(p, q, r)`.
///
/// The determinant `(q - p) x (r - p)` is compared as two products instead
/// of being subtracted, so the full coordinate range never overflows `i128`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let ux = q.x as i128 - p.x as i128;
    let uy = q.y as i128 - p.y as i128;
    let vx = r.x as i128 - p.x as i128;
    let vy = r.y as i128 - p.y as i128;
    match (ux * vy).cmp(&(uy * vx)) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Less => Orientation::Clockwise,
    }
}

/// A closed segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    #[inline]
    pub fn a(&self) -> Point {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Point {
        self.b
    }

    fn has_endpoint(&self, p: Point) -> bool {
        self.a == p || self.b == p
    }

    /// Whether `p` lies in the open interior of the segment.
    pub fn interior_contains(&self, p: Point) -> bool {
        if self.has_endpoint(p) || orientation(self.a, self.b, p) != Orientation::Collinear {
            return false;
        }
        within_box(self.a, self.b, p)
    }
}

// p collinear with a-b; is p inside the closed bounding box of a-b?
fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

/// True iff the open interiors of `s` and `t` share a point.
///
/// Collinear overlap of positive length counts as a crossing. Segments that
/// only touch at a shared endpoint do not cross.
pub fn segments_properly_cross(s: &Segment, t: &Segment) -> bool {
    let o1 = orientation(s.a, s.b, t.a);
    let o2 = orientation(s.a, s.b, t.b);
    let o3 = orientation(t.a, t.b, s.a);
    let o4 = orientation(t.a, t.b, s.b);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(s, t);
    }
    // Transversal: interiors meet iff every endpoint is strictly off the
    // other line and the pairs straddle.
    o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
        && o1 != o2
        && o3 != o4
}

// Both segments on one line: project onto the dominant axis and compare
// open parameter intervals.
fn collinear_overlap(s: &Segment, t: &Segment) -> bool {
    let key = |p: Point| {
        if s.a.x != s.b.x {
            p.x
        } else {
            p.y
        }
    };
    let (s0, s1) = ordered(key(s.a), key(s.b));
    let (t0, t1) = ordered(key(t.a), key(t.b));
    s0.max(t0) < s1.min(t1)
}

fn ordered(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Whether two drawn edges are incompatible in a plane straight-line
/// drawing: their interiors meet, or an endpoint of one lies in the interior
/// of the other. Edges sharing an endpoint conflict only when they overlap.
pub fn edges_conflict(s: &Segment, t: &Segment) -> bool {
    segments_properly_cross(s, t)
        || s.interior_contains(t.a)
        || s.interior_contains(t.b)
        || t.interior_contains(s.a)
        || t.interior_contains(s.b)
}

/// True iff the polyline through `points` is a simple path: all vertices are
/// distinct, no two edges conflict and no vertex sits inside an edge it is
/// not incident to.
///
/// Quadratic in the number of edges.
pub fn path_is_noncrossing(points: &[Point]) -> bool {
    if points.len() < 2 {
        return points.len() == 1;
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return false;
            }
        }
    }
    let edges: alloc::vec::Vec<Segment> = points
        .windows(2)
        .map(|w| Segment { a: w[0], b: w[1] })
        .collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges_conflict(&edges[i], &edges[j]) {
                return false;
            }
        }
    }
    true
}

/// True iff no three of the points are collinear. Cubic.
pub fn in_general_position(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }
    true
}

/// Indices of the strict convex hull vertices in counter-clockwise order,
/// starting from the lexicographically smallest point.
pub fn convex_hull(points: &[Point]) -> alloc::vec::Vec<usize> {
    use alloc::vec::Vec;

    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by_key(|&i| points[i]);
    idx.dedup_by_key(|i| points[*i]);
    if idx.len() < 3 {
        return idx;
    }
    let half = |order: &mut dyn Iterator<Item = usize>| {
        let mut chain: Vec<usize> = Vec::new();
        for i in order {
            while let [.., a, b] = chain[..] {
                if orientation(points[a], points[b], points[i]) == Orientation::CounterClockwise {
                    break;
                }
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
        chain
    };
    let mut hull = half(&mut idx.iter().copied());
    hull.extend(half(&mut idx.iter().rev().copied()));
    hull
}
