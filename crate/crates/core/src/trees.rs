//! Caterpillars and star forests on balanced double-chains.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::chains::{count, ChainId, Color, Coloring, DoubleChain, PointRef};
use crate::error::{EmbedError, GraphError};
use crate::geometry::{convex_hull, Point};

/// A simple undirected graph with a color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<Color>,
}

impl ColoredGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, colors: Vec<Color>) -> Result<Self, GraphError> {
        if colors.len() != n {
            return Err(GraphError::ColorCount { n, colors: colors.len() });
        }
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            seen.push((u.min(v), u.max(v)));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(ColoredGraph { n, edges, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        adj
    }

    pub fn black_count(&self) -> usize {
        count(&self.colors, Color::Black)
    }

    /// No edge joins two vertices of the same color.
    pub fn check_proper(&self) -> Result<(), GraphError> {
        match self.edges.iter().find(|&&(u, v)| self.colors[u] == self.colors[v]) {
            Some(&(u, v)) => Err(GraphError::Monochromatic(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self) -> bool {
        self.check_proper().is_ok()
    }

    pub fn is_equitable(&self) -> bool {
        let b = self.black_count();
        b.abs_diff(self.n - b) <= 1
    }

    fn with_colors(&self, colors: Vec<Color>) -> Self {
        ColoredGraph {
            n: self.n,
            edges: self.edges.clone(),
            colors,
        }
    }
}

/// Outcome of [`is_forest_of_caterpillars`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCheck {
    Caterpillars,
    /// Vertices of a cycle in cyclic order.
    Cycle(Vec<usize>),
    /// `[root, a1, b1, a2, b2, a3, b3]` with edges `root-ai` and `ai-bi`.
    SubdividedClaw([usize; 7]),
}

impl ForestCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ForestCheck::Caterpillars)
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

fn forest_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = alloc::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &v in &adj[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().expect("nonempty") != from {
        let u = *path.last().expect("nonempty");
        path.push(parent[u]);
    }
    path.reverse();
    path
}

/// Decides whether every component is a caterpillar: no cycle and no
/// 3-star with subdivided edges. A negative answer carries a witness.
pub fn is_forest_of_caterpillars(g: &ColoredGraph) -> ForestCheck {
    let mut dsu = Dsu((0..g.n).collect());
    let mut forest = vec![Vec::new(); g.n];
    for &(u, v) in &g.edges {
        let (a, b) = (dsu.find(u), dsu.find(v));
        if a == b {
            return ForestCheck::Cycle(forest_path(&forest, u, v));
        }
        dsu.0[a] = b;
        forest[u].push(v);
        forest[v].push(u);
    }
    let adj = g.adjacency();
    for root in 0..g.n {
        let arms: Vec<(usize, usize)> = adj[root]
            .iter()
            .filter_map(|&a| adj[a].iter().find(|&&b| b != root).map(|&b| (a, b)))
            .take(3)
            .collect();
        if let [(a1, b1), (a2, b2), (a3, b3)] = arms[..] {
            return ForestCheck::SubdividedClaw([root, a1, b1, a2, b2, a3, b3]);
        }
    }
    ForestCheck::Caterpillars
}

/// A caterpillar with its central path (the non-leaf vertices, in path
/// order). The central path is empty for a single vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    pub graph: ColoredGraph,
    pub spine: Vec<usize>,
}

impl Caterpillar {
    /// Checks that `graph` is a connected caterpillar and orders its
    /// central path, starting from the end with the smaller index.
    pub fn new(graph: ColoredGraph) -> Result<Self, GraphError> {
        let n = graph.n;
        if n == 0 || graph.edges.len() + 1 != n || !is_forest_of_caterpillars(&graph).holds() {
            return Err(GraphError::WrongClass("caterpillar"));
        }
        let adj = graph.adjacency();
        let inner: Vec<bool> = adj.iter().map(|a| a.len() >= 2).collect();
        let spine_deg = |v: usize| adj[v].iter().filter(|&&u| inner[u]).count();
        let Some(start) = (0..n).find(|&v| inner[v] && spine_deg(v) <= 1) else {
            return Ok(Caterpillar { graph, spine: Vec::new() });
        };
        let mut spine = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&u| inner[u] && u != prev) {
            spine.push(next);
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(spine.len(), inner.iter().filter(|&&x| x).count());
        Ok(Caterpillar { graph, spine })
    }
}

/// Vertex-to-point map of an embedding on a double-chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<PointRef>,
}

fn precondition(msg: impl core::fmt::Display) -> EmbedError {
    EmbedError::Precondition(format!("{msg}"))
}

fn internal(msg: impl core::fmt::Display) -> EmbedError {
    EmbedError::Internal(format!("{msg}"))
}

/// Embeds an equitable, properly colored caterpillar with at most
/// `floor(n/2)` central-path vertices on a balanced double-chain under a
/// compatible point coloring.
///
/// After normalizing so that black is major on `c1` and white on `c2`,
/// enough leaves are set aside to fill the minor points. The rest is laid
/// out on major points by walking the central path; each step takes the
/// leftmost unused major point, so all edges between the chains form a
/// monotone staircase. The set-aside leaves then go to minor points of
/// their parent's chain via a stack matching, which keeps the chords on
/// each chain nested.
pub fn embed_caterpillar(dc: &DoubleChain, cat: &Caterpillar, col: &Coloring) -> Result<Embedding, EmbedError> {
    let g = &cat.graph;
    let n = g.n;
    col.check_fits(dc)?;
    if n != dc.len() {
        return Err(crate::error::ChainError::SizeMismatch { points: dc.len(), vertices: n }.into());
    }
    if !dc.is_balanced() {
        return Err(precondition("the double-chain is not balanced"));
    }
    g.check_proper()?;
    if !g.is_equitable() {
        let black = g.black_count();
        return Err(EmbedError::NotEquitable { black, white: n - black });
    }
    if cat.spine.len() > n / 2 {
        return Err(precondition(format_args!(
            "central path has {} vertices, more than floor({n}/2)",
            cat.spine.len()
        )));
    }
    if col.black_count() != g.black_count() {
        return Err(precondition("point coloring is not compatible with the graph"));
    }

    let stats = crate::chains::compute_stats(col);
    let flip = |c: &Color| if stats.colors_swapped { c.flip() } else { *c };
    let pc1: Vec<Color> = col.c1.iter().map(flip).collect();
    let pc2: Vec<Color> = col.c2.iter().map(flip).collect();
    let gc: Vec<Color> = g.colors.iter().map(flip).collect();

    let spine: Vec<usize> = if cat.spine.is_empty() { vec![0] } else { cat.spine.clone() };
    let adj = g.adjacency();
    let mut on_spine = vec![false; n];
    for &v in &spine {
        on_spine[v] = true;
    }
    let leaves: Vec<Vec<usize>> = spine
        .iter()
        .map(|&v| adj[v].iter().copied().filter(|&u| !on_spine[u]).collect())
        .collect();

    // Set aside b2 black and w1 white leaves, from the far end of the walk.
    let mut need_black = count(&pc2, Color::Black);
    let mut need_white = count(&pc1, Color::White);
    let mut removed: Vec<Vec<usize>> = vec![Vec::new(); spine.len()];
    let mut is_removed = vec![false; n];
    for (i, ls) in leaves.iter().enumerate().rev() {
        for &u in ls.iter().rev() {
            let need = if gc[u] == Color::Black { &mut need_black } else { &mut need_white };
            if *need > 0 {
                *need -= 1;
                removed[i].push(u);
                is_removed[u] = true;
            }
        }
    }
    if need_black > 0 || need_white > 0 {
        return Err(internal("too few leaves for the minor points"));
    }

    let mut map: Vec<Option<PointRef>> = vec![None; n];
    let mut majors1 = (0..pc1.len()).filter(|&p| pc1[p] == Color::Black);
    let mut majors2 = (0..pc2.len()).filter(|&p| pc2[p] == Color::White);
    let mut place = |v: usize, map: &mut Vec<Option<PointRef>>| -> Result<(), EmbedError> {
        let r = if gc[v] == Color::Black {
            majors1.next().map(PointRef::c1)
        } else {
            majors2.next().map(PointRef::c2)
        };
        map[v] = Some(r.ok_or_else(|| internal("ran out of major points"))?);
        Ok(())
    };
    for (i, &v) in spine.iter().enumerate() {
        place(v, &mut map)?;
        for &u in &leaves[i] {
            if !is_removed[u] {
                place(u, &mut map)?;
            }
        }
    }

    // Leaves still owed by each vertex, keyed by its position on its chain.
    for (chain, pc, minor) in [(ChainId::C1, &pc1, Color::White), (ChainId::C2, &pc2, Color::Black)] {
        let mut owed: Vec<Vec<usize>> = vec![Vec::new(); pc.len()];
        for (i, &v) in spine.iter().enumerate() {
            let Some(r) = map[v] else { continue };
            if r.chain == chain {
                owed[r.pos].extend(removed[i].iter().copied().filter(|&u| gc[u] == minor));
            }
        }
        enum Item {
            Free(usize),
            Owed(usize),
        }
        let mut stack: Vec<Item> = Vec::new();
        for p in 0..pc.len() {
            let items: Vec<Item> = if pc[p] == minor {
                vec![Item::Free(p)]
            } else {
                (0..owed[p].len()).map(|_| Item::Owed(p)).collect()
            };
            for it in items {
                match (stack.last(), &it) {
                    (Some(Item::Free(f)), Item::Owed(o)) | (Some(Item::Owed(o)), Item::Free(f)) => {
                        let (f, o) = (*f, *o);
                        stack.pop();
                        let leaf = owed[o].pop().expect("counted");
                        map[leaf] = Some(PointRef { chain, pos: f });
                    }
                    _ => stack.push(it),
                }
            }
        }
        if !stack.is_empty() {
            return Err(internal(format_args!("unmatched minor points on {chain}")));
        }
    }

    let map: Vec<PointRef> = map
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| internal(format_args!("vertex {v} was not placed"))))
        .collect::<Result<_, _>>()?;
    let emb = Embedding { map };
    #[cfg(debug_assertions)]
    certify(dc, col, g, &emb)?;
    Ok(emb)
}

#[cfg(debug_assertions)]
fn certify(dc: &DoubleChain, col: &Coloring, g: &ColoredGraph, emb: &Embedding) -> Result<(), EmbedError> {
    let flat: Vec<usize> = emb.map.iter().map(|&r| crate::certify::flat_index(dc.c1.len(), r)).collect();
    crate::certify::certify_embedding(&dc.all_points(), &col.flat(), &g.colors, &g.edges, &flat)
        .map_err(|e| internal(format_args!("constructed embedding fails certification: {e}")))
}

/// Star components by size and center color.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarCensus {
    /// `black_centers[i]`: stars on `i >= 3` vertices with a black center.
    pub black_centers: Vec<usize>,
    /// `white_centers[i]`: same with a white center.
    pub white_centers: Vec<usize>,
    pub edges: usize,
    pub isolated: usize,
}

impl StarCensus {
    /// `isolated + 2 * edges + sum of i * (k_i + h_i)`.
    pub fn vertex_total(&self) -> usize {
        let big: usize = (3..self.black_centers.len())
            .map(|i| i * (self.black_centers[i] + self.white_centers[i]))
            .sum();
        self.isolated + 2 * self.edges + big
    }

    pub fn big_black(&self) -> usize {
        self.black_centers.iter().sum()
    }

    pub fn big_white(&self) -> usize {
        self.white_centers.iter().sum()
    }
}

enum StarComp {
    Isolated(usize),
    Edge(usize, usize),
    /// Center and its leaves.
    Big(usize, Vec<usize>),
}

fn components(g: &ColoredGraph, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &v in &adj[comp[i]] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn star_components(g: &ColoredGraph) -> Result<Vec<StarComp>, GraphError> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for comp in components(g, &adj) {
        let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return Err(GraphError::WrongClass("star forest"));
        }
        match comp.len() {
            1 => out.push(StarComp::Isolated(comp[0])),
            2 => out.push(StarComp::Edge(comp[0], comp[1])),
            k => {
                let center = *comp
                    .iter()
                    .find(|&&v| adj[v].len() == k - 1)
                    .ok_or(GraphError::WrongClass("star forest"))?;
                out.push(StarComp::Big(center, adj[center].clone()));
            }
        }
    }
    Ok(out)
}

/// Counts star components; fails if `g` is not a forest of stars.
pub fn star_census(g: &ColoredGraph) -> Result<StarCensus, GraphError> {
    let mut census = StarCensus {
        black_centers: vec![0; g.n + 1],
        white_centers: vec![0; g.n + 1],
        ..StarCensus::default()
    };
    for comp in star_components(g)? {
        match comp {
            StarComp::Isolated(_) => census.isolated += 1,
            StarComp::Edge(..) => census.edges += 1,
            StarComp::Big(c, leaves) => {
                let slot = if g.colors[c] == Color::Black {
                    &mut census.black_centers
                } else {
                    &mut census.white_centers
                };
                slot[leaves.len() + 1] += 1;
            }
        }
    }
    Ok(census)
}

/// Adds edges to a properly and equitably colored star forest to obtain a
/// properly colored caterpillar on the same vertices with at most
/// `floor(n/2)` central-path vertices.
///
/// Centers of stars with at least three vertices are joined into a path
/// alternating in color and starting with the color that centers more of
/// them; two-vertex components fill in for missing centers. Big stars left
/// over are hung one after another through one of their leaves. Isolated
/// vertices are attached to a path vertex of the other color.
pub fn stars_to_caterpillar(g: &ColoredGraph) -> Result<Caterpillar, EmbedError> {
    g.check_proper()?;
    if !g.is_equitable() {
        let black = g.black_count();
        return Err(EmbedError::NotEquitable { black, white: g.n - black });
    }
    let n = g.n;
    if n == 0 {
        return Err(precondition("empty graph"));
    }
    let comps = star_components(g)?;
    let mut edges = g.edges.clone();

    if g.edges.is_empty() {
        if n >= 2 {
            let b = (0..n).find(|&v| g.colors[v] == Color::Black).expect("equitable");
            let w = (0..n).find(|&v| g.colors[v] == Color::White).expect("equitable");
            edges.push((b, w));
            for v in 0..n {
                if v != b && v != w {
                    edges.push(if g.colors[v] == Color::White { (b, v) } else { (w, v) });
                }
            }
        }
        return finish(g, edges);
    }

    let census = star_census(g)?;
    // `lead` plays the role of the more frequent big-star center color.
    let lead = if census.big_black() >= census.big_white() { Color::Black } else { Color::White };
    let mut lead_stars: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut other_stars: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut isolated: Vec<usize> = Vec::new();
    for comp in comps {
        match comp {
            StarComp::Isolated(v) => isolated.push(v),
            StarComp::Edge(a, b) => {
                pairs.push(if g.colors[a] == lead { (a, b) } else { (b, a) });
            }
            StarComp::Big(c, leaves) => {
                if g.colors[c] == lead {
                    lead_stars.push((c, leaves));
                } else {
                    other_stars.push(c);
                }
            }
        }
    }
    let mut lead_iter = lead_stars.iter();
    let mut other_iter = other_stars.iter();
    let mut pair_iter = pairs.iter();
    let mut path: Vec<usize> = Vec::new();
    loop {
        let next_lead = lead_iter.next().map(|s| s.0).or_else(|| pair_iter.next().map(|p| p.0));
        let Some(v) = next_lead else { break };
        path.push(v);
        let next_other = other_iter.next().copied().or_else(|| pair_iter.next().map(|p| p.1));
        let Some(w) = next_other else { break };
        path.push(w);
    }
    for (c, leaves) in lead_iter {
        // The path ends in the lead color here: every non-lead source ran out.
        path.push(leaves[0]);
        path.push(*c);
    }
    debug_assert!(other_iter.next().is_none());
    let adj = g.adjacency();
    for (&a, &b) in path.iter().zip(path.iter().skip(1)) {
        // Leaf-to-center steps are star edges already.
        if !adj[a].contains(&b) {
            edges.push((a, b));
        }
    }

    if path.len() == 1 {
        let v = path[0];
        let u = *adj[v].first().expect("path vertex has a leaf");
        for &x in &isolated {
            edges.push(if g.colors[x] != g.colors[v] { (v, x) } else { (u, x) });
        }
    } else {
        let lead_v = path[0];
        let other_v = path[1];
        for &x in &isolated {
            edges.push(if g.colors[x] == lead { (other_v, x) } else { (lead_v, x) });
        }
    }
    finish(g, edges)
}

fn finish(g: &ColoredGraph, edges: Vec<(usize, usize)>) -> Result<Caterpillar, EmbedError> {
    let h = ColoredGraph::new(g.n, edges, g.colors.clone()).map_err(|e| internal(format_args!("augmentation: {e}")))?;
    if !h.is_proper() {
        return Err(internal("augmentation created a monochromatic edge"));
    }
    let cat = Caterpillar::new(h).map_err(|_| internal("augmentation is not a caterpillar"))?;
    if cat.spine.len() > g.n / 2 {
        return Err(internal(format_args!(
            "central path of {} exceeds floor({}/2)",
            cat.spine.len(),
            g.n
        )));
    }
    Ok(cat)
}

/// Embeds a properly and equitably colored star forest on a balanced
/// double-chain under a compatible coloring.
pub fn embed_star_forest(dc: &DoubleChain, g: &ColoredGraph, col: &Coloring) -> Result<Embedding, EmbedError> {
    let cat = stars_to_caterpillar(g)?;
    let emb = embed_caterpillar(dc, &cat, col)?;
    #[cfg(debug_assertions)]
    certify(dc, col, g, &emb)?;
    Ok(emb)
}

/// A point coloring compatible with `g` under which a quadrangulation
/// cannot be drawn: three convex-hull points get the color of the larger
/// class of `g`. The remaining points are filled in index order, larger
/// class first.
pub fn blocking_coloring_for_quadrangulation(points: &[Point], g: &ColoredGraph) -> Result<Vec<Color>, EmbedError> {
    let n = g.n;
    if points.len() != n {
        return Err(crate::error::ChainError::SizeMismatch { points: points.len(), vertices: n }.into());
    }
    if n < 5 {
        return Err(precondition("a quadrangulation needs at least 5 vertices"));
    }
    let black = g.black_count();
    let (major, major_count) = if black >= n - black { (Color::Black, black) } else { (Color::White, n - black) };
    if major_count < 3 {
        return Err(precondition("the larger color class has fewer than 3 vertices"));
    }
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Err(precondition("the point set has fewer than 3 hull vertices"));
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for &p in &hull[..3] {
        colors[p] = Some(major);
    }
    let mut left = major_count - 3;
    for c in colors.iter_mut().filter(|c| c.is_none()) {
        *c = Some(if left > 0 {
            left -= 1;
            major
        } else {
            major.flip()
        });
    }
    Ok(colors.into_iter().map(|c| c.expect("filled")).collect())
}

/// The 3-cube with its bipartition coloring (vertex `v` is black iff it has
/// an even number of one bits).
pub fn cube_graph() -> ColoredGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    let colors = (0..8u32)
        .map(|v| if v.count_ones() % 2 == 0 { Color::Black } else { Color::White })
        .collect();
    ColoredGraph::new(8, edges, colors).expect("valid")
}

/// The 3-star with subdivided edges; root 0 (black), middles 1, 3, 5,
/// leaves 2, 4, 6.
pub fn subdivided_claw() -> ColoredGraph {
    use Color::{Black as B, White as W};
    ColoredGraph::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)], vec![B, W, B, W, B, W, B])
        .expect("valid")
}

/// Swaps vertex colors; used to normalize inputs.
pub fn recolored(g: &ColoredGraph) -> ColoredGraph {
    g.with_colors(g.colors.iter().map(|c| c.flip()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{generate_double_chain, parse_colors};

    fn graph(n: usize, edges: &[(usize, usize)], colors: &str) -> ColoredGraph {
        ColoredGraph::new(n, edges.to_vec(), parse_colors(colors).unwrap()).unwrap()
    }

    fn path_graph(n: usize) -> ColoredGraph {
        let colors: alloc::string::String = (0..n).map(|i| if i % 2 == 0 { 'B' } else { 'W' }).collect();
        graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>(), &colors)
    }

    #[test]
    fn graph_validation() {
        let c = parse_colors("BW").unwrap();
        assert_eq!(ColoredGraph::new(2, vec![(0, 0)], c.clone()), Err(GraphError::SelfLoop(0)));
        assert_eq!(ColoredGraph::new(2, vec![(0, 2)], c.clone()), Err(GraphError::VertexOutOfRange(0, 2)));
        assert_eq!(
            ColoredGraph::new(2, vec![(0, 1), (1, 0)], c.clone()),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            ColoredGraph::new(3, vec![], c),
            Err(GraphError::ColorCount { n: 3, colors: 2 })
        );
    }

    #[test]
    fn recognition_examples() {
        assert!(is_forest_of_caterpillars(&path_graph(5)).holds());
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], "BWBW");
        let ForestCheck::Cycle(cyc) = is_forest_of_caterpillars(&c4) else { panic!() };
        assert_eq!(cyc.len(), 4);
        let claw = subdivided_claw();
        let ForestCheck::SubdividedClaw(w) = is_forest_of_caterpillars(&claw) else { panic!() };
        assert_eq!(w[0], 0);
    }

    #[test]
    fn caterpillar_spine_order() {
        // 0-1-2 spine, leaves 3 on 0, 4 on 2.
        let g = graph(5, &[(0, 1), (1, 2), (0, 3), (2, 4)], "BWBWW");
        let cat = Caterpillar::new(g).unwrap();
        assert_eq!(cat.spine, vec![0, 1, 2]);
        assert!(Caterpillar::new(graph(2, &[(0, 1)], "BW")).unwrap().spine.is_empty());
        assert!(Caterpillar::new(subdivided_claw()).is_err());
    }

    #[test]
    fn star_with_spine_of_two() {
        // Spine 0-1; 0 has leaves 2, 3; 1 has leaf 4 (white 1 black 4...).
        let g = graph(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], "BWWWBB");
        let cat = Caterpillar::new(g).unwrap();
        let dc = generate_double_chain(3, 3).unwrap();
        for colors in crate::oracle::enumerate_equitable_colorings(6) {
            let col = Coloring::new(colors[..3].to_vec(), colors[3..].to_vec());
            if col.black_count() != 3 {
                continue;
            }
            embed_caterpillar(&dc, &cat, &col).unwrap();
        }
    }

    #[test]
    fn k13_on_two_by_two() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)], "BWWW");
        let cat = Caterpillar::new(g).unwrap();
        let dc = generate_double_chain(2, 2).unwrap();
        // K_{1,3} is not equitable, so it is rejected.
        let col = Coloring::parse("BW", "WW").unwrap();
        assert!(matches!(embed_caterpillar(&dc, &cat, &col), Err(EmbedError::NotEquitable { .. })));
    }

    #[test]
    fn long_spine_rejected() {
        let cat = Caterpillar::new(path_graph(6)).unwrap();
        let dc = generate_double_chain(3, 3).unwrap();
        let col = Coloring::parse("BWB", "WBW").unwrap();
        assert!(matches!(embed_caterpillar(&dc, &cat, &col), Err(EmbedError::Precondition(_))));
    }

    #[test]
    fn stars_examples() {
        // K_{1,2} with black center plus a white isolated vertex.
        let g = graph(4, &[(0, 1), (0, 2)], "BWWB");
        let g = graph(4, g.edges(), "BWWW");
        assert!(stars_to_caterpillar(&g).is_err()); // not equitable
        let g = graph(4, &[(0, 1), (0, 2)], "WBBW");
        let cat = stars_to_caterpillar(&g).unwrap();
        assert_eq!(cat.spine.len(), 2);

        let g = graph(4, &[(0, 1), (2, 3)], "BWBW");
        let cat = stars_to_caterpillar(&g).unwrap();
        assert!(cat.spine.len() <= 2);
        assert!(g.edges().iter().all(|e| cat.graph.edges().contains(e)));
    }

    #[test]
    fn edgeless_and_single_edge() {
        let g = graph(5, &[], "BWBWB");
        let cat = stars_to_caterpillar(&g).unwrap();
        assert!(cat.spine.len() <= 2);
        let g = graph(2, &[(0, 1)], "BW");
        let dc = generate_double_chain(1, 1).unwrap();
        let col = Coloring::parse("W", "B").unwrap();
        let emb = embed_star_forest(&dc, &g, &col).unwrap();
        assert_eq!(emb.map, vec![PointRef::c2(0), PointRef::c1(0)]);
    }

    #[test]
    fn census_identity() {
        let g = graph(9, &[(0, 1), (0, 2), (0, 3), (4, 5)], "BWWWBWBWW");
        let c = star_census(&g).unwrap();
        assert_eq!(c.black_centers[4], 1);
        assert_eq!(c.edges, 1);
        assert_eq!(c.isolated, 3);
        assert_eq!(c.vertex_total(), 9);
        assert!(star_census(&path_graph(4)).is_err());
    }

    #[test]
    fn blocking_coloring_uses_hull() {
        let g = cube_graph();
        let pts: Vec<Point> = [(0, 0), (100, 0), (50, 100), (40, 20), (61, 23), (50, 47), (44, 33), (57, 39)]
            .iter()
            .map(|&(x, y)| Point::new(x, y).unwrap())
            .collect();
        let colors = blocking_coloring_for_quadrangulation(&pts, &g).unwrap();
        assert_eq!(&colors[..3], &[Color::Black; 3]);
        assert_eq!(count(&colors, Color::Black), 4);
    }
}
