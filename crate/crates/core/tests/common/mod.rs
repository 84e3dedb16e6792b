#![allow(dead_code)]

use double_chain::chains::{Color, Coloring, DoubleChain};
use double_chain::hedgehog::{Body, BodyCover, ChainView, Hedgehog};
use double_chain::trees::ColoredGraph;
use rand::Rng;

pub fn colors_from_mask(n: usize, mask: u64) -> Vec<Color> {
    (0..n).map(|i| if mask >> i & 1 == 1 { Color::White } else { Color::Black }).collect()
}

/// A random body cover: each run is cut at random, bodies grab free minor
/// neighbours as heads or tails at random, and some free minors become
/// single-point bodies. Feasibility is not controlled.
pub fn random_cover(view: &ChainView<'_>, rng: &mut impl Rng) -> BodyCover {
    let n = view.len();
    let mut used = vec![false; n];
    let mut bodies = Vec::new();
    for (lo, hi) in double_chain::chains::runs(view.colors, view.major) {
        let mut start = lo;
        for p in lo..=hi {
            if p == hi || rng.random_bool(0.3) {
                let (mut a, mut b) = (start, p);
                if a > 0 && !used[a - 1] && !view.is_major(a - 1) && rng.random_bool(0.4) {
                    a -= 1;
                }
                if b + 1 < n && !view.is_major(b + 1) && rng.random_bool(0.4) {
                    b += 1;
                }
                used[a..=b].iter_mut().for_each(|u| *u = true);
                bodies.push(Body::new(view, a, b).expect("well formed"));
                start = p + 1;
            }
        }
    }
    for p in 0..n {
        if !used[p] && rng.random_bool(0.15) {
            bodies.push(Body::new(view, p, p).expect("single minor"));
        }
    }
    BodyCover::new(bodies)
}

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

/// Checks hedgehogs against the definitions directly, including the
/// minor-count identity. Returns a description of the first problem.
pub fn check_hedgehogs(view: &ChainView<'_>, hs: &[Hedgehog]) -> Result<(), String> {
    let n = view.len();
    let mut seen = vec![false; n];
    let mut chords = Vec::new();
    for h in hs {
        let (lo, hi) = (h.body.lo, h.body.hi);
        if h.path.first() != Some(&lo) || h.path.last() != Some(&hi) {
            return Err(format!("path {:?} does not run from {lo} to {hi}", h.path));
        }
        for &p in &h.path {
            if std::mem::replace(&mut seen[p], true) {
                return Err(format!("point {p} used twice"));
            }
            if (p < lo || p > hi) && view.is_major(p) {
                return Err(format!("outside major {p}"));
            }
        }
        for p in lo..=hi {
            if !h.path.contains(&p) {
                return Err(format!("body point {p} missing"));
            }
        }
        for w in h.path.windows(2) {
            if view.colors[w[0]] == view.colors[w[1]] {
                return Err(format!("edge {w:?} not alternating"));
            }
            chords.push((w[0], w[1]));
        }
        let majors = h.path.iter().filter(|&&p| view.is_major(p)).count();
        let minors = h.path.len() - majors;
        let alpha = usize::from(!view.is_major(lo));
        let beta = usize::from(!view.is_major(hi) && hi != lo);
        let expected = if majors == 0 { 1 } else { majors - 1 + alpha + beta };
        if minors != expected {
            return Err(format!("{minors} minors, identity wants {expected} for body [{lo}, {hi}]"));
        }
    }
    if let Some(p) = seen.iter().position(|s| !s) {
        return Err(format!("point {p} uncovered"));
    }
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if interleave(chords[i], chords[j]) {
                return Err(format!("chords {:?} and {:?} cross", chords[i], chords[j]));
            }
        }
    }
    Ok(())
}

fn tree_colors(n: usize, parent: &[Option<usize>], root_color: Color) -> Vec<Color> {
    let mut c = vec![root_color; n];
    for v in 0..n {
        if let Some(p) = parent[v] {
            c[v] = c[p].flip();
        }
    }
    c
}

fn equitable(c: &[Color]) -> bool {
    let b = c.iter().filter(|&&x| x == Color::Black).count();
    b.abs_diff(c.len() - b) <= 1
}

/// Every caterpillar on `n` vertices up to relabeling of leaves, in both
/// proper colorings that are equitable, with spine length at most
/// `max_spine`. Spine vertices come first, in path order.
pub fn caterpillars(n: usize, max_spine: usize) -> Vec<ColoredGraph> {
    let mut out = Vec::new();
    let mut push = |edges: Vec<(usize, usize)>, parent: Vec<Option<usize>>| {
        for root in [Color::Black, Color::White] {
            let c = tree_colors(n, &parent, root);
            if equitable(&c) {
                out.push(ColoredGraph::new(n, edges.clone(), c).unwrap());
            }
        }
    };
    if n == 1 {
        push(vec![], vec![None]);
        return out;
    }
    if n == 2 {
        push(vec![(0, 1)], vec![None, Some(0)]);
        return out;
    }
    for s in 1..=max_spine.min(n - 2) {
        // Leaf counts per spine vertex; the ends need at least one (two for
        // a single spine vertex).
        let leaves = n - s;
        let mut counts = vec![0usize; s];
        fn rec(i: usize, left: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let s = counts.len();
            if i == s {
                if left == 0 {
                    out.push(counts.clone());
                }
                return;
            }
            let min = if s == 1 { 2 } else if i == 0 || i == s - 1 { 1 } else { 0 };
            for c in min..=left {
                counts[i] = c;
                rec(i + 1, left - c, counts, out);
            }
        }
        let mut all = Vec::new();
        rec(0, leaves, &mut counts, &mut all);
        for counts in all {
            let mut edges = Vec::new();
            let mut parent = vec![None; n];
            for i in 1..s {
                edges.push((i - 1, i));
                parent[i] = Some(i - 1);
            }
            let mut next = s;
            for (i, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    edges.push((i, next));
                    parent[next] = Some(i);
                    next += 1;
                }
            }
            push(edges, parent);
        }
    }
    out
}

/// Every properly and equitably colored star forest on `n` vertices, up to
/// relabeling. Components are laid out largest first.
pub fn star_forests(n: usize) -> Vec<ColoredGraph> {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            partitions(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let mut out = Vec::new();
    for part in parts {
        // One color bit per component: center color (size >= 3) or vertex
        // color (size 1); irrelevant for size 2.
        for mask in 0u32..(1 << part.len()) {
            let mut edges = Vec::new();
            let mut colors = Vec::new();
            let mut skip = false;
            for (i, &size) in part.iter().enumerate() {
                let c = if mask >> i & 1 == 1 { Color::White } else { Color::Black };
                if size == 2 && c == Color::White {
                    skip = true;
                }
                let base = colors.len();
                colors.push(c);
                for j in 1..size {
                    edges.push((base, base + j));
                    colors.push(c.flip());
                }
            }
            if skip || !equitable(&colors) {
                continue;
            }
            out.push(ColoredGraph::new(n, edges, colors).unwrap());
        }
    }
    out
}

/// Balanced chain sizes for `n` points: both orders when `n` is odd.
pub fn balanced_sizes(n: usize) -> Vec<(usize, usize)> {
    let (a, b) = (n.div_ceil(2), n / 2);
    if a == b {
        vec![(a, b)]
    } else {
        vec![(a, b), (b, a)]
    }
}

/// All point colorings of a double-chain with exactly `black` black points.
pub fn colorings_with_black(n1: usize, n2: usize, black: usize) -> Vec<Coloring> {
    let n = n1 + n2;
    (0u64..1 << n)
        .filter(|m| (n as u32 - m.count_ones()) as usize == black)
        .map(|m| {
            let c = colors_from_mask(n, m);
            Coloring::new(c[..n1].to_vec(), c[n1..].to_vec())
        })
        .collect()
}

/// Double-chain for sizes that may include an empty chain (a single point).
pub fn double_chain(n1: usize, n2: usize) -> DoubleChain {
    if n1 > 0 && n2 > 0 {
        return double_chain::chains::generate_double_chain(n1, n2).unwrap();
    }
    let p = |x| double_chain::Point::new(x, 0).unwrap();
    DoubleChain::new((0..n1 as i64).map(p).collect(), (0..n2 as i64).map(p).collect())
}
