//! Independent validators for constructed drawings.
//!
//! [`certify_path`] and [`certify_embedding`] check geometry directly with
//! exact predicates (quadratic). [`certify_path_fast`] uses the order
//! structure of double-chains and runs in `O(n log n)`, which makes it
//! usable on large outputs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chains::{ChainId, Color, Coloring, DoubleChain, PointRef};
use crate::geometry::{edges_conflict, Point, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathDefect {
    Length { expected: usize, found: usize },
    OutOfRange(PointRef),
    Repeated(PointRef),
    /// Edge `i` joins `order[i]` and `order[i + 1]` of the same color.
    SameColor(usize),
    /// Edges `i` and `j` conflict.
    Crossing(usize, usize),
}

impl fmt::Display for PathDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathDefect::Length { expected, found } => {
                write!(f, "path visits {found} points, expected {expected}")
            }
            PathDefect::OutOfRange(r) => write!(f, "{r:?} is not a point of the double-chain"),
            PathDefect::Repeated(r) => write!(f, "{r:?} is visited twice"),
            PathDefect::SameColor(i) => write!(f, "edge {i} joins two points of the same color"),
            PathDefect::Crossing(i, j) => write!(f, "edges {i} and {j} cross"),
        }
    }
}

fn check_alternating_permutation(
    n1: usize,
    n2: usize,
    col: &Coloring,
    order: &[PointRef],
) -> Result<(), PathDefect> {
    if order.len() != n1 + n2 {
        return Err(PathDefect::Length {
            expected: n1 + n2,
            found: order.len(),
        });
    }
    let mut seen = vec![false; n1 + n2];
    for &r in order {
        let idx = match r.chain {
            ChainId::C1 if r.pos < n1 => r.pos,
            ChainId::C2 if r.pos < n2 => n1 + r.pos,
            _ => return Err(PathDefect::OutOfRange(r)),
        };
        if core::mem::replace(&mut seen[idx], true) {
            return Err(PathDefect::Repeated(r));
        }
    }
    if col.c1.len() != n1 || col.c2.len() != n2 {
        return Err(PathDefect::Length {
            expected: n1 + n2,
            found: col.len(),
        });
    }
    for (i, w) in order.windows(2).enumerate() {
        if col.get(w[0]) == col.get(w[1]) {
            return Err(PathDefect::SameColor(i));
        }
    }
    Ok(())
}

/// Checks that `order` is a Hamiltonian alternating path on `dc` whose
/// straight-line drawing is non-crossing. Quadratic, exact.
pub fn certify_path(dc: &DoubleChain, col: &Coloring, order: &[PointRef]) -> Result<(), PathDefect> {
    check_alternating_permutation(dc.c1.len(), dc.c2.len(), col, order)?;
    let pts: Vec<Point> = order.iter().map(|&r| dc.point(r)).collect();
    let segs: Vec<Segment> = pts
        .windows(2)
        .map(|w| Segment::new(w[0], w[1]).expect("points are distinct"))
        .collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if edges_conflict(&segs[i], &segs[j]) {
                return Err(PathDefect::Crossing(i, j));
            }
        }
    }
    Ok(())
}

/// Same verdict as [`certify_path`] for any double-chain with these chain
/// sizes, computed from positions only.
///
/// On a double-chain, edges inside different chains or of different types
/// never meet; two chords of one chain cross iff their endpoints
/// interleave; two edges between the chains cross iff their endpoints come
/// in opposite orders on the two chains.
pub fn certify_path_fast(
    n1: usize,
    n2: usize,
    col: &Coloring,
    order: &[PointRef],
) -> Result<(), PathDefect> {
    check_alternating_permutation(n1, n2, col, order)?;
    // (c1 pos, c2 pos, edge index)
    let mut between: Vec<(usize, usize, usize)> = Vec::new();
    let mut chords: [Vec<(usize, usize, usize)>; 2] = [Vec::new(), Vec::new()];
    for (i, w) in order.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        match (a.chain, b.chain) {
            (ChainId::C1, ChainId::C2) => between.push((a.pos, b.pos, i)),
            (ChainId::C2, ChainId::C1) => between.push((b.pos, a.pos, i)),
            (c, _) => {
                let k = if c == ChainId::C1 { 0 } else { 1 };
                chords[k].push((a.pos.min(b.pos), a.pos.max(b.pos), i));
            }
        }
    }
    between.sort_unstable();
    for w in between.windows(2) {
        if w[1].1 < w[0].1 {
            return Err(PathDefect::Crossing(w[0].2.min(w[1].2), w[0].2.max(w[1].2)));
        }
    }
    for list in chords.iter_mut() {
        // Left endpoint ascending, right endpoint descending: a laminar
        // family is then a stack discipline.
        list.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for &c in list.iter() {
            while stack.last().is_some_and(|t| t.1 <= c.0) {
                stack.pop();
            }
            if let Some(t) = stack.last() {
                if t.1 < c.1 {
                    return Err(PathDefect::Crossing(t.2.min(c.2), t.2.max(c.2)));
                }
            }
            stack.push(c);
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingDefect {
    Size { vertices: usize, points: usize },
    NotInjective(usize),
    OutOfRange(usize),
    /// Vertex `v` sits on a point of the other color.
    ColorMismatch(usize),
    /// Edges (by index in the edge list) conflict.
    Crossing(usize, usize),
}

impl fmt::Display for EmbeddingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingDefect::Size { vertices, points } => {
                write!(f, "{vertices} vertices but {points} points")
            }
            EmbeddingDefect::NotInjective(p) => write!(f, "point {p} holds two vertices"),
            EmbeddingDefect::OutOfRange(p) => write!(f, "point index {p} out of range"),
            EmbeddingDefect::ColorMismatch(v) => write!(f, "vertex {v} is on a point of the other color"),
            EmbeddingDefect::Crossing(i, j) => write!(f, "edges {i} and {j} cross"),
        }
    }
}

/// Checks that `map` (vertex to point index) is a bijection respecting
/// colors and that the straight-line drawing of `edges` is plane. Edges
/// conflict when their interiors meet or a vertex lies inside an edge.
/// Quadratic in the number of edges.
pub fn certify_embedding(
    points: &[Point],
    point_colors: &[Color],
    vertex_colors: &[Color],
    edges: &[(usize, usize)],
    map: &[usize],
) -> Result<(), EmbeddingDefect> {
    if map.len() != points.len() || vertex_colors.len() != map.len() || point_colors.len() != points.len() {
        return Err(EmbeddingDefect::Size {
            vertices: map.len().max(vertex_colors.len()),
            points: points.len(),
        });
    }
    let mut used = vec![false; points.len()];
    for (v, &p) in map.iter().enumerate() {
        if p >= points.len() {
            return Err(EmbeddingDefect::OutOfRange(p));
        }
        if core::mem::replace(&mut used[p], true) {
            return Err(EmbeddingDefect::NotInjective(p));
        }
        if point_colors[p] != vertex_colors[v] {
            return Err(EmbeddingDefect::ColorMismatch(v));
        }
    }
    let segs: Vec<Segment> = edges
        .iter()
        .map(|&(u, v)| Segment::new(points[map[u]], points[map[v]]).expect("map is injective"))
        .collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if edges_conflict(&segs[i], &segs[j]) {
                return Err(EmbeddingDefect::Crossing(i, j));
            }
        }
    }
    // A vertex of degree zero can still sit inside an edge.
    for (v, &p) in map.iter().enumerate() {
        for (i, s) in segs.iter().enumerate() {
            let (a, b) = edges[i];
            if a != v && b != v && s.interior_contains(points[p]) {
                return Err(EmbeddingDefect::Crossing(i, i));
            }
        }
    }
    Ok(())
}

/// Flat point index (c1 first) of a chain reference.
pub fn flat_index(dc_c1_len: usize, r: PointRef) -> usize {
    match r.chain {
        ChainId::C1 => r.pos,
        ChainId::C2 => dc_c1_len + r.pos,
    }
}
