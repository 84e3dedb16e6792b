//! Exhaustive small-n sweeps cross-checking the constructions against the
//! validators and the oracle.
//!
//! Cases are pure and keyed, so the report does not depend on the order in
//! which rayon runs them.

use std::collections::BTreeMap;

use double_chain::certify::{certify_embedding, certify_path, flat_index};
use double_chain::chains::{colors_to_string, generate_double_chain, Color, Coloring, DoubleChain, PointRef};
use double_chain::nhap::embed_nhap;
use double_chain::oracle::{brute_force_embed, brute_force_nhap, enumerate_equitable_colorings, SearchBudget, SearchStatus};
use double_chain::trees::{embed_caterpillar, embed_star_forest, Caterpillar, ColoredGraph};
use double_chain::Point;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Nhap,
    Caterpillar,
    Stars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub suite: Suite,
    pub max_n: usize,
    /// Instances up to this size are also searched by the oracle.
    pub oracle_max_n: usize,
    pub oracle_nodes: u64,
    /// Breaks the validator on purpose: the output is corrupted before it
    /// is checked, so every case should be reported.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: Suite,
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub oracle_nodes: u64,
    pub inject_fault: bool,
    pub cases: usize,
    pub passed: usize,
    pub oracle_checked: usize,
    pub oracle_inconclusive: usize,
    pub mismatches: usize,
    /// Failed case key to a description of the failure.
    pub counterexamples: BTreeMap<String, String>,
}

enum CaseResult {
    Pass { oracle: Option<bool> },
    Mismatch(String),
}

struct Case {
    key: String,
    run: Box<dyn Fn() -> CaseResult + Send + Sync>,
}

pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let cases = match cfg.suite {
        Suite::Nhap => nhap_cases(cfg),
        Suite::Caterpillar => graph_cases(cfg, caterpillars(cfg.max_n), "caterpillar"),
        Suite::Stars => graph_cases(cfg, star_forests(cfg.max_n), "stars"),
    };
    let results: BTreeMap<String, CaseResult> = cases.into_par_iter().map(|c| (c.key, (c.run)())).collect();
    let mut report = SweepReport {
        suite: cfg.suite,
        max_n: cfg.max_n,
        oracle_max_n: cfg.oracle_max_n,
        oracle_nodes: cfg.oracle_nodes,
        inject_fault: cfg.inject_fault,
        cases: results.len(),
        passed: 0,
        oracle_checked: 0,
        oracle_inconclusive: 0,
        mismatches: 0,
        counterexamples: BTreeMap::new(),
    };
    for (key, r) in results {
        match r {
            CaseResult::Pass { oracle } => {
                report.passed += 1;
                match oracle {
                    Some(true) => report.oracle_checked += 1,
                    Some(false) => report.oracle_inconclusive += 1,
                    None => {}
                }
            }
            CaseResult::Mismatch(why) => {
                report.mismatches += 1;
                report.counterexamples.insert(key, why);
            }
        }
    }
    report
}

fn corrupt<T>(v: &mut [T], fault: bool) {
    if fault && v.len() >= 2 {
        v.swap(0, 1);
    }
}

fn path_indices(n1: usize, order: &[PointRef]) -> Vec<usize> {
    order.iter().map(|&r| flat_index(n1, r)).collect()
}

fn nhap_cases(cfg: &SweepConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=cfg.max_n {
        for n1 in 1..n {
            let n2 = n - n1;
            if 5 * n1 < n || 5 * n2 < n {
                continue;
            }
            for c in enumerate_equitable_colorings(n) {
                let col = Coloring::new(c[..n1].to_vec(), c[n1..].to_vec());
                let key = format!("nhap {n1}+{n2} {}/{}", colors_to_string(&col.c1), colors_to_string(&col.c2));
                let cfg = *cfg;
                out.push(Case { key, run: Box::new(move || nhap_case(&cfg, &col)) });
            }
        }
    }
    out
}

fn nhap_case(cfg: &SweepConfig, col: &Coloring) -> CaseResult {
    let dc = match generate_double_chain(col.c1.len(), col.c2.len()) {
        Ok(dc) => dc,
        Err(e) => return CaseResult::Mismatch(e.to_string()),
    };
    let mut path = match embed_nhap(&dc, col) {
        Ok(p) => p.order,
        Err(e) => return CaseResult::Mismatch(format!("construction failed: {e}")),
    };
    corrupt(&mut path, cfg.inject_fault);
    if let Err(d) = certify_path(&dc, col, &path) {
        return CaseResult::Mismatch(format!("path {path:?} rejected: {d}"));
    }
    if col.len() > cfg.oracle_max_n {
        return CaseResult::Pass { oracle: None };
    }
    let points = dc.all_points();
    let colors = col.flat();
    match brute_force_nhap(&points, &colors, &SearchBudget::nodes(cfg.oracle_nodes)) {
        Ok(o) => match o.status {
            SearchStatus::Found(w) => {
                let refs: Vec<PointRef> = w.iter().map(|&i| to_ref(dc.c1.len(), i)).collect();
                match certify_path(&dc, col, &refs) {
                    Ok(()) => CaseResult::Pass { oracle: Some(true) },
                    Err(d) => CaseResult::Mismatch(format!("oracle witness {w:?} rejected: {d}")),
                }
            }
            SearchStatus::None => CaseResult::Mismatch("oracle found no path but the construction did".into()),
            SearchStatus::Inconclusive => CaseResult::Pass { oracle: Some(false) },
        },
        Err(e) => CaseResult::Mismatch(format!("oracle error: {e}")),
    }
}

fn to_ref(n1: usize, i: usize) -> PointRef {
    if i < n1 {
        PointRef::c1(i)
    } else {
        PointRef::c2(i - n1)
    }
}

fn small_chain(n1: usize, n2: usize) -> DoubleChain {
    generate_double_chain(n1, n2).unwrap_or_else(|_| {
        // One chain empty: any points in convex position will do.
        let p = |x: usize| Point::new(x as i64, (x * x) as i64).expect("small");
        DoubleChain::new((0..n1).map(p).collect(), (0..n2).map(p).collect())
    })
}

fn graph_cases(cfg: &SweepConfig, graphs: Vec<ColoredGraph>, label: &'static str) -> Vec<Case> {
    let mut out = Vec::new();
    for (gi, g) in graphs.into_iter().enumerate() {
        let n = g.n();
        let sizes = if n % 2 == 0 { vec![(n / 2, n / 2)] } else { vec![(n / 2 + 1, n / 2), (n / 2, n / 2 + 1)] };
        for (n1, _) in sizes {
            for c in colorings_with_black(n, g.black_count()) {
                let col = Coloring::new(c[..n1].to_vec(), c[n1..].to_vec());
                let key = format!(
                    "{label} #{gi} n={n} edges={:?} colors={} on {}/{}",
                    g.edges(),
                    colors_to_string(g.colors()),
                    colors_to_string(&col.c1),
                    colors_to_string(&col.c2)
                );
                let (cfg, g) = (*cfg, g.clone());
                out.push(Case { key, run: Box::new(move || graph_case(&cfg, &g, &col, label)) });
            }
        }
    }
    out
}

fn graph_case(cfg: &SweepConfig, g: &ColoredGraph, col: &Coloring, label: &str) -> CaseResult {
    let dc = small_chain(col.c1.len(), col.c2.len());
    let built = if label == "caterpillar" {
        Caterpillar::new(g.clone()).map_err(|e| e.into()).and_then(|cat| embed_caterpillar(&dc, &cat, col))
    } else {
        embed_star_forest(&dc, g, col)
    };
    let mut map = match built {
        Ok(e) => e.map,
        Err(e) => return CaseResult::Mismatch(format!("construction failed: {e}")),
    };
    corrupt(&mut map, cfg.inject_fault);
    let points = dc.all_points();
    let colors = col.flat();
    if let Err(d) = certify_embedding(&points, &colors, g.colors(), g.edges(), &path_indices(dc.c1.len(), &map)) {
        return CaseResult::Mismatch(format!("map {map:?} rejected: {d}"));
    }
    if g.n() > cfg.oracle_max_n || dc.c1.is_empty() || dc.c2.is_empty() {
        return CaseResult::Pass { oracle: None };
    }
    match brute_force_embed(g, &points, &colors, &SearchBudget::nodes(cfg.oracle_nodes)) {
        Ok(o) => match o.status {
            SearchStatus::Found(w) => match certify_embedding(&points, &colors, g.colors(), g.edges(), &w) {
                Ok(()) => CaseResult::Pass { oracle: Some(true) },
                Err(d) => CaseResult::Mismatch(format!("oracle witness {w:?} rejected: {d}")),
            },
            SearchStatus::None => CaseResult::Mismatch("oracle found no embedding but the construction did".into()),
            SearchStatus::Inconclusive => CaseResult::Pass { oracle: Some(false) },
        },
        Err(e) => CaseResult::Mismatch(format!("oracle error: {e}")),
    }
}

fn colorings_with_black(n: usize, black: usize) -> Vec<Vec<Color>> {
    (0u32..1 << n)
        .filter(|m| (n as u32 - m.count_ones()) as usize == black)
        .map(|m| (0..n).map(|i| if m >> i & 1 == 1 { Color::White } else { Color::Black }).collect())
        .collect()
}

fn equitable(c: &[Color]) -> bool {
    let b = c.iter().filter(|&&x| x == Color::Black).count();
    b.abs_diff(c.len() - b) <= 1
}

/// Both proper colorings of a tree given by parent pointers (root 0),
/// keeping the equitable ones.
fn colored_trees(edges: Vec<(usize, usize)>, parent: &[usize], out: &mut Vec<ColoredGraph>) {
    let n = parent.len();
    for root in [Color::Black, Color::White] {
        let mut c = vec![root; n];
        for v in 1..n {
            c[v] = c[parent[v]].flip();
        }
        if equitable(&c) {
            out.push(ColoredGraph::new(n, edges.clone(), c).expect("tree"));
        }
    }
}

/// Caterpillars with `n <= max_n` vertices and central path at most
/// `floor(n/2)`, up to isomorphism fixing the central-path order. Central
/// path vertices come first.
pub fn caterpillars(max_n: usize) -> Vec<ColoredGraph> {
    fn compositions(i: usize, left: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = counts.len();
        if i == s {
            if left == 0 {
                out.push(counts.clone());
            }
            return;
        }
        // Central-path ends carry leaves; a lone central vertex needs two.
        let min = match (s, i) {
            (1, _) => 2,
            (_, 0) => 1,
            (_, i) if i == s - 1 => 1,
            _ => 0,
        };
        for c in min..=left {
            counts[i] = c;
            compositions(i + 1, left - c, counts, out);
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        if n <= 2 {
            let edges = if n == 2 { vec![(0, 1)] } else { vec![] };
            colored_trees(edges, &vec![0; n], &mut out);
            continue;
        }
        for s in 1..=(n / 2).min(n - 2) {
            let mut all = Vec::new();
            compositions(0, n - s, &mut vec![0; s], &mut all);
            for counts in all {
                let mut parent = vec![0; n];
                let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
                (1..s).for_each(|i| parent[i] = i - 1);
                let mut next = s;
                for (i, &c) in counts.iter().enumerate() {
                    for _ in 0..c {
                        edges.push((i, next));
                        parent[next] = i;
                        next += 1;
                    }
                }
                colored_trees(edges, &parent, &mut out);
            }
        }
    }
    out
}

/// Properly and equitably colored star forests with `n <= max_n`
/// vertices, components by nonincreasing size.
pub fn star_forests(max_n: usize) -> Vec<ColoredGraph> {
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
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut parts = Vec::new();
        partitions(n, n, &mut Vec::new(), &mut parts);
        for part in parts {
            'mask: for mask in 0u32..1 << part.len() {
                let mut edges = Vec::new();
                let mut colors = Vec::new();
                for (i, &size) in part.iter().enumerate() {
                    let c = if mask >> i & 1 == 1 { Color::White } else { Color::Black };
                    // A single edge is the same star from either end.
                    if size == 2 && c == Color::White {
                        continue 'mask;
                    }
                    let base = colors.len();
                    colors.push(c);
                    for j in 1..size {
                        edges.push((base, base + j));
                        colors.push(c.flip());
                    }
                }
                if equitable(&colors) {
                    out.push(ColoredGraph::new(n, edges, colors).expect("star forest"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(suite: Suite, max_n: usize, fault: bool) -> SweepConfig {
        SweepConfig { suite, max_n, oracle_max_n: max_n, oracle_nodes: 1_000_000, inject_fault: fault }
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in [Suite::Nhap, Suite::Caterpillar, Suite::Stars] {
            let r = run_sweep(&cfg(suite, 6, false));
            assert!(r.cases > 0);
            assert_eq!(r.mismatches, 0, "{:?}", r.counterexamples);
            assert_eq!(r.passed, r.cases);
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let r = run_sweep(&cfg(Suite::Nhap, 6, true));
        assert!(r.mismatches > 0);
        assert_eq!(r.mismatches, r.counterexamples.len());
    }

    #[test]
    fn report_is_deterministic() {
        let a = run_sweep(&cfg(Suite::Stars, 6, true));
        let b = run_sweep(&cfg(Suite::Stars, 6, true));
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_counts() {
        // Path on four vertices: one central-path shape of length 2, and
        // the star: length 1. Equitable proper colorings: P4 both ways,
        // star never.
        let four: Vec<_> = caterpillars(4).into_iter().filter(|g| g.n() == 4).collect();
        assert_eq!(four.len(), 2);
        assert!(star_forests(8).iter().all(|g| g.is_equitable() && g.is_proper()));
    }
}
