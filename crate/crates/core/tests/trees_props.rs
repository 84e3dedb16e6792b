mod common;

use std::collections::BTreeSet;

use double_chain::certify::{certify_embedding, flat_index};
use double_chain::chains::{Color, Coloring};
use double_chain::trees::{
    embed_caterpillar, embed_star_forest, is_forest_of_caterpillars, star_census, stars_to_caterpillar, Caterpillar,
    ColoredGraph, ForestCheck,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Forest of caterpillars by the definition: every component is a tree
/// whose non-leaf vertices induce a subgraph of maximum degree two.
fn by_definition(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = s;
        let (mut verts, mut degsum) = (0, 0);
        while let Some(u) = stack.pop() {
            verts += 1;
            degsum += adj[u].len();
            for &v in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = s;
                    stack.push(v);
                }
            }
        }
        if degsum / 2 + 1 != verts {
            return false;
        }
    }
    (0..n).filter(|&v| adj[v].len() >= 2).all(|v| adj[v].iter().filter(|&&u| adj[u].len() >= 2).count() <= 2)
}

fn witness_ok(n: usize, edges: &[(usize, usize)], w: &ForestCheck) -> bool {
    let has = |a: usize, b: usize| edges.contains(&(a, b)) || edges.contains(&(b, a));
    match w {
        ForestCheck::Caterpillars => true,
        ForestCheck::Cycle(c) => {
            let distinct: BTreeSet<_> = c.iter().collect();
            c.len() >= 3 && distinct.len() == c.len() && c.iter().all(|&v| v < n)
                && (0..c.len()).all(|i| has(c[i], c[(i + 1) % c.len()]))
        }
        ForestCheck::SubdividedClaw(w) => {
            let distinct: BTreeSet<_> = w.iter().collect();
            distinct.len() == 7 && (0..3).all(|i| has(w[0], w[1 + 2 * i]) && has(w[1 + 2 * i], w[2 + 2 * i]))
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

#[test]
fn recognition_matches_definition_on_all_small_graphs() {
    for n in 1..=6 {
        let pairs = all_pairs(n);
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = ColoredGraph::new(n, edges.clone(), vec![Color::Black; n]).unwrap();
            let got = is_forest_of_caterpillars(&g);
            assert_eq!(got.holds(), by_definition(n, &edges), "{edges:?}");
            assert!(witness_ok(n, &edges, &got), "{edges:?} {got:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn recognition_matches_definition_on_sparse_graphs(n in 7usize..=8, seed in any::<u64>(), density in 0.05f64..0.4) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.random_bool(density)).collect();
        let g = ColoredGraph::new(n, edges.clone(), vec![Color::Black; n]).unwrap();
        let got = is_forest_of_caterpillars(&g);
        prop_assert_eq!(got.holds(), by_definition(n, &edges));
        prop_assert!(witness_ok(n, &edges, &got));
    }
}

/// A random caterpillar with shuffled labels, spine at most `n / 2`.
fn random_caterpillar(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let s = rng.random_range(1..=(n / 2).max(1)).min(n - 2).max(1);
    let mut parent = vec![None; n];
    for i in 1..s {
        parent[i] = Some(i - 1);
    }
    // Both spine ends get a leaf, the rest anywhere.
    let mut next = s;
    for end in [0, s - 1] {
        if next < n && (end == 0 || s > 1) {
            parent[next] = Some(end);
            next += 1;
        }
    }
    // Central-path vertex i is black iff i is even; a leaf takes the other
    // color. Remaining leaves mostly go where they even out the classes.
    let color_of = |i: usize| if i % 2 == 0 { Color::Black } else { Color::White };
    let mut colors: Vec<Color> = (0..next).map(|v| if v < s { color_of(v) } else { color_of(parent[v].unwrap()).flip() }).collect();
    while next < n {
        let black = colors.iter().filter(|&&c| c == Color::Black).count();
        let want = if 2 * black < colors.len() { Color::Black } else { Color::White };
        let fits: Vec<usize> = (0..s).filter(|&i| color_of(i) != want).collect();
        let p = if fits.is_empty() || rng.random_bool(0.2) { rng.random_range(0..s) } else { fits[rng.random_range(0..fits.len())] };
        parent[next] = Some(p);
        colors.push(color_of(p).flip());
        next += 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = (1..n).map(|v| (perm[v], perm[parent[v].unwrap()])).collect();
    let mut c = vec![Color::Black; n];
    for v in 0..n {
        c[perm[v]] = colors[v];
    }
    ColoredGraph::new(n, edges, c).unwrap()
}

fn random_coloring(rng: &mut impl Rng, n1: usize, n2: usize, black: usize) -> Coloring {
    let mut c: Vec<Color> = (0..n1 + n2).map(|i| if i < black { Color::Black } else { Color::White }).collect();
    c.shuffle(rng);
    Coloring::new(c[..n1].to_vec(), c[n1..].to_vec())
}

fn certify(dc: &double_chain::DoubleChain, col: &Coloring, g: &ColoredGraph, map: &[double_chain::PointRef]) -> bool {
    let flat: Vec<usize> = map.iter().map(|&r| flat_index(dc.c1.len(), r)).collect();
    certify_embedding(&dc.all_points(), &col.flat(), g.colors(), g.edges(), &flat).is_ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_caterpillars_embed(n in 3usize..60, seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = random_caterpillar(&mut rng, n);
        prop_assume!(g.is_equitable());
        let cat = Caterpillar::new(g.clone()).unwrap();
        prop_assume!(cat.spine.len() <= n / 2);
        let (n1, n2) = (n.div_ceil(2), n / 2);
        let col = random_coloring(&mut rng, n1, n2, g.black_count());
        let dc = common::double_chain(n1, n2);
        let emb = embed_caterpillar(&dc, &cat, &col).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(certify(&dc, &col, &g, &emb.map));
    }

    #[test]
    fn random_star_forests_embed(sizes in proptest::collection::vec((1usize..7, any::<bool>()), 1..12), seed in any::<u64>()) {
        let mut edges = Vec::new();
        let mut colors = Vec::new();
        for &(size, white) in &sizes {
            let c = if white { Color::White } else { Color::Black };
            let base = colors.len();
            colors.push(c);
            for j in 1..size {
                edges.push((base, base + j));
                colors.push(c.flip());
            }
        }
        // Isolated vertices of the smaller class make it equitable.
        loop {
            let black = colors.iter().filter(|&&c| c == Color::Black).count();
            let white = colors.len() - black;
            if black.abs_diff(white) <= 1 {
                break;
            }
            colors.push(if black < white { Color::Black } else { Color::White });
        }
        let n = colors.len();
        let g = ColoredGraph::new(n, edges, colors).unwrap();
        let census = star_census(&g).unwrap();
        prop_assert_eq!(census.vertex_total(), n);
        let cat = stars_to_caterpillar(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(cat.spine.len() <= n / 2);
        prop_assert!(cat.graph.is_proper());
        for e in g.edges() {
            prop_assert!(cat.graph.edges().contains(e));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (n1, n2) = (n.div_ceil(2), n / 2);
        let col = random_coloring(&mut rng, n1, n2, g.black_count());
        let dc = common::double_chain(n1, n2);
        let emb = embed_star_forest(&dc, &g, &col).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(certify(&dc, &col, &g, &emb.map));
    }
}
