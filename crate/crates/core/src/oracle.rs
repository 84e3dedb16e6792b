//! Exhaustive backtracking search, the ground truth for small instances.
//!
//! Searches are deterministic: candidates are tried in point-index order,
//! and budgets are counted in search nodes. With the `std` feature an
//! optional wall-clock limit is also available; a run stopped by it is
//! reported as [`SearchStatus::Inconclusive`], never as `None`.

use alloc::vec;
use alloc::vec::Vec;

use crate::chains::Color;
use crate::error::OracleError;
use crate::geometry::{edges_conflict, in_general_position, Point, Segment};
use crate::trees::ColoredGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    #[cfg(feature = "std")]
    pub time_limit: Option<std::time::Duration>,
}

impl SearchBudget {
    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit,
            #[cfg(feature = "std")]
            time_limit: None,
        }
    }

    #[cfg(feature = "std")]
    pub fn with_time_limit(mut self, limit: std::time::Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    fn check(&self) -> Result<(), OracleError> {
        #[cfg(feature = "std")]
        if self.time_limit.is_some_and(|t| t.is_zero()) {
            return Err(OracleError::EmptyBudget);
        }
        if self.node_limit == 0 {
            return Err(OracleError::EmptyBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus<T> {
    Found(T),
    None,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub status: SearchStatus<T>,
    /// Search nodes expanded.
    pub nodes: u64,
}

struct Meter {
    nodes: u64,
    limit: u64,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
    exhausted: bool,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            #[cfg(feature = "std")]
            deadline: budget.time_limit.map(|t| std::time::Instant::now() + t),
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exhausted = true;
        }
        #[cfg(feature = "std")]
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| std::time::Instant::now() >= d) {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn finish<T>(self, found: Option<T>) -> SearchOutcome<T> {
        let status = match found {
            Some(w) => SearchStatus::Found(w),
            None if self.exhausted => SearchStatus::Inconclusive,
            None => SearchStatus::None,
        };
        SearchOutcome {
            status,
            nodes: self.nodes.min(self.limit),
        }
    }
}

struct PathSearch<'a> {
    points: &'a [Point],
    colors: &'a [Color],
    n: usize,
    path: Vec<usize>,
    used: Vec<bool>,
    // blocked[u * n + v] counts path edges that conflict with segment uv.
    blocked: Vec<u32>,
    meter: Meter,
}

impl PathSearch<'_> {
    fn segment(&self, u: usize, v: usize) -> Segment {
        Segment::new(self.points[u], self.points[v]).expect("points are distinct")
    }

    fn add_edge(&mut self, a: usize, b: usize, delta: i32) {
        let e = self.segment(a, b);
        for u in 0..self.n {
            if self.used[u] && u != a && u != b {
                continue;
            }
            for v in u + 1..self.n {
                if (self.used[v] && v != a && v != b) || self.colors[u] == self.colors[v] {
                    continue;
                }
                if edges_conflict(&e, &self.segment(u, v)) {
                    let k = u * self.n + v;
                    self.blocked[k] = (self.blocked[k] as i32 + delta) as u32;
                    self.blocked[v * self.n + u] = self.blocked[k];
                }
            }
        }
    }

    fn allowed(&self, u: usize, v: usize) -> bool {
        self.colors[u] != self.colors[v] && self.blocked[u * self.n + v] == 0
    }

    /// Necessary condition for completing the path from `end`: the
    /// unvisited points and `end` are connected by allowed segments, no
    /// unvisited point is isolated and at most one has a single option.
    fn viable(&self, end: usize) -> bool {
        let rest: Vec<usize> = (0..self.n).filter(|&v| !self.used[v]).collect();
        if rest.is_empty() {
            return true;
        }
        let mut ones = 0;
        for &u in &rest {
            let deg = rest.iter().chain(core::iter::once(&end)).filter(|&&v| v != u && self.allowed(u, v)).count();
            match deg {
                0 => return false,
                1 => ones += 1,
                _ => {}
            }
        }
        if ones > 1 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![end];
        seen[end] = true;
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            for &v in &rest {
                if !seen[v] && self.allowed(u, v) {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == rest.len()
    }

    fn extend(&mut self) -> bool {
        if self.path.len() == self.n {
            return self.path[0] < self.path[self.n - 1];
        }
        let end = *self.path.last().expect("path starts nonempty");
        for v in 0..self.n {
            if self.used[v] || !self.allowed(end, v) {
                continue;
            }
            if !self.meter.tick() {
                return false;
            }
            self.used[v] = true;
            self.path.push(v);
            self.add_edge(end, v, 1);
            if self.viable(v) && self.extend() {
                return true;
            }
            self.add_edge(end, v, -1);
            self.path.pop();
            self.used[v] = false;
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

/// Searches for a non-crossing Hamiltonian alternating path through
/// `points`. The witness lists point indices, first index smaller than the
/// last.
pub fn brute_force_nhap(
    points: &[Point],
    colors: &[Color],
    budget: &SearchBudget,
) -> Result<SearchOutcome<Vec<usize>>, OracleError> {
    budget.check()?;
    let n = points.len();
    if colors.len() != n {
        return Err(OracleError::SizeMismatch {
            vertices: colors.len(),
            points: n,
        });
    }
    if !in_general_position(points) {
        return Err(OracleError::NotInGeneralPosition);
    }
    let mut meter = Meter::new(budget);
    if n <= 1 {
        meter.tick();
        return Ok(meter.finish(Some((0..n).collect())));
    }
    let black = colors.iter().filter(|&&c| c == Color::Black).count();
    if black.abs_diff(n - black) > 1 {
        return Ok(meter.finish(None));
    }
    let start_color = match black.cmp(&(n - black)) {
        core::cmp::Ordering::Greater => Some(Color::Black),
        core::cmp::Ordering::Less => Some(Color::White),
        core::cmp::Ordering::Equal => None,
    };
    let mut search = PathSearch {
        points,
        colors,
        n,
        path: Vec::with_capacity(n),
        used: vec![false; n],
        blocked: vec![0; n * n],
        meter,
    };
    for s in 0..n {
        if start_color.is_some_and(|c| colors[s] != c) {
            continue;
        }
        if !search.meter.tick() {
            break;
        }
        search.used[s] = true;
        search.path.push(s);
        if search.viable(s) && search.extend() {
            let witness = core::mem::take(&mut search.path);
            return Ok(search.meter.finish(Some(witness)));
        }
        search.path.pop();
        search.used[s] = false;
        if search.meter.exhausted {
            break;
        }
    }
    Ok(search.meter.finish(None))
}

/// Vertex order for placement: breadth-first from the highest-degree
/// vertex of each component, so spines of caterpillars come early.
fn placement_order(g: &ColoredGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (core::cmp::Reverse(adj[v].len()), v));
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

struct EmbedSearch<'a> {
    points: &'a [Point],
    point_colors: &'a [Color],
    g: &'a ColoredGraph,
    adj: Vec<Vec<usize>>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    drawn: Vec<(usize, usize, Segment)>,
    meter: Meter,
}

impl EmbedSearch<'_> {
    fn fits(&self, v: usize, p: usize) -> Option<usize> {
        let here = self.points[p];
        // A fresh point may not sit inside a drawn edge.
        if self.drawn.iter().any(|(_, _, s)| s.interior_contains(here)) {
            return None;
        }
        let mut added = 0;
        for &u in &self.adj[v] {
            let Some(q) = self.map[u] else { continue };
            let s = Segment::new(here, self.points[q]).expect("points are distinct");
            let clash = self.drawn.iter().any(|(_, _, t)| edges_conflict(&s, t))
                || self
                    .map
                    .iter()
                    .flatten()
                    .any(|&r| r != q && s.interior_contains(self.points[r]));
            if clash {
                return None;
            }
            added += 1;
        }
        Some(added)
    }

    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for p in 0..self.points.len() {
            if self.used[p] || self.point_colors[p] != self.g.colors()[v] {
                continue;
            }
            if !self.meter.tick() {
                return false;
            }
            if self.fits(v, p).is_none() {
                continue;
            }
            let mark = self.drawn.len();
            for &u in &self.adj[v] {
                if let Some(q) = self.map[u] {
                    let s = Segment::new(self.points[p], self.points[q]).expect("points are distinct");
                    self.drawn.push((v, u, s));
                }
            }
            self.map[v] = Some(p);
            self.used[p] = true;
            if self.place(depth + 1) {
                return true;
            }
            self.used[p] = false;
            self.map[v] = None;
            self.drawn.truncate(mark);
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

/// Searches for a plane straight-line embedding of `g` on the colored
/// points, vertex colors matching point colors. The witness maps each
/// vertex to a point index.
pub fn brute_force_embed(
    g: &ColoredGraph,
    points: &[Point],
    point_colors: &[Color],
    budget: &SearchBudget,
) -> Result<SearchOutcome<Vec<usize>>, OracleError> {
    budget.check()?;
    if g.n() != points.len() || point_colors.len() != points.len() {
        return Err(OracleError::SizeMismatch {
            vertices: g.n(),
            points: points.len(),
        });
    }
    if !in_general_position(points) {
        return Err(OracleError::NotInGeneralPosition);
    }
    let meter = Meter::new(budget);
    let black_points = point_colors.iter().filter(|&&c| c == Color::Black).count();
    let black_vertices = g.colors().iter().filter(|&&c| c == Color::Black).count();
    if black_points != black_vertices {
        return Ok(meter.finish(None));
    }
    let mut search = EmbedSearch {
        points,
        point_colors,
        g,
        adj: g.adjacency(),
        order: placement_order(g),
        map: vec![None; g.n()],
        used: vec![false; points.len()],
        drawn: Vec::new(),
        meter,
    };
    if search.place(0) {
        let map = search.map.iter().map(|p| p.expect("all placed")).collect();
        return Ok(search.meter.finish(Some(map)));
    }
    Ok(search.meter.finish(None))
}

/// All colorings of `n` points with class sizes differing by at most one,
/// in lexicographic order (`B < W`).
pub fn enumerate_equitable_colorings(n: usize) -> impl Iterator<Item = Vec<Color>> {
    // Counts of blacks allowed: floor(n/2) and ceil(n/2).
    let lo = n / 2;
    let hi = n.div_ceil(2);
    let mut next: Option<Vec<Color>> = Some(vec![Color::Black; n]);
    core::iter::from_fn(move || loop {
        let cur = next.take()?;
        next = successor(&cur);
        let b = cur.iter().filter(|&&c| c == Color::Black).count();
        if b >= lo && b <= hi {
            return Some(cur);
        }
    })
}

// Lexicographic successor with B < W; None after all white.
fn successor(cur: &[Color]) -> Option<Vec<Color>> {
    let mut v = cur.to_vec();
    for i in (0..v.len()).rev() {
        if v[i] == Color::Black {
            v[i] = Color::White;
            for x in v[i + 1..].iter_mut() {
                *x = Color::Black;
            }
            return Some(v);
        }
    }
    None
}
