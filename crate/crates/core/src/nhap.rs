//! Non-crossing Hamiltonian alternating paths on equitably colored
//! double-chains.
//!
//! The construction covers each chain by hedgehogs and joins them with
//! edges between the chains, consuming hedgehogs left to right and
//! alternating between `c1` and `c2`. On a double-chain an edge between the
//! chains never crosses an edge inside a chain, and two edges between the
//! chains cross iff their endpoints appear in opposite orders on the two
//! chains, so this monotone pattern is crossing-free whenever the hedgehogs
//! are.
//!
//! All work is done on color sequences; coordinates only enter through
//! certification. Total work is linear in the number of points.

use alloc::format;
use alloc::vec::Vec;

use crate::chains::{count, count_runs, ChainId, Color, Coloring, DoubleChain, PointRef};
use crate::error::EmbedError;
use crate::hedgehog::{
    cover_with_k_hedgehogs, realize_hedgehogs, Body, BodyCover, ChainView, Hedgehog,
};

/// A Hamiltonian path given as the visiting order of the points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathEmbedding {
    pub order: Vec<PointRef>,
}

fn internal(msg: impl core::fmt::Display) -> EmbedError {
    EmbedError::Internal(format!("{msg}"))
}

fn precondition(msg: impl core::fmt::Display) -> EmbedError {
    EmbedError::Precondition(format!("{msg}"))
}

fn flipped(colors: &[Color]) -> Vec<Color> {
    colors.iter().map(|c| c.flip()).collect()
}

/// Surplus of `major` over the other color.
fn surplus(colors: &[Color], major: Color) -> i64 {
    2 * count(colors, major) as i64 - colors.len() as i64
}

/// Visits `first[0], second[0], first[1], ...`, each hedgehog left to right.
fn interleave(first: &[Hedgehog], second: &[Hedgehog]) -> Vec<PointRef> {
    debug_assert!(first.len() == second.len() || first.len() == second.len() + 1);
    let mut out = Vec::new();
    for (i, h) in first.iter().enumerate() {
        out.extend(h.path.iter().map(|&p| PointRef::c1(p)));
        if let Some(g) = second.get(i) {
            out.extend(g.path.iter().map(|&p| PointRef::c2(p)));
        }
    }
    out
}

fn insert_at(colors: &[Color], at: usize, color: Color) -> Vec<Color> {
    let mut v = Vec::with_capacity(colors.len() + 1);
    v.extend_from_slice(&colors[..at]);
    v.push(color);
    v.extend_from_slice(&colors[at..]);
    v
}

/// Removes the auxiliary point `aux` from the required end of `path` and
/// renumbers its chain.
fn strip_aux(
    mut path: Vec<PointRef>,
    aux: PointRef,
    at_front: bool,
) -> Result<Vec<PointRef>, EmbedError> {
    let end = if at_front { path.first() } else { path.last() };
    if end != Some(&aux) {
        return Err(internal(format_args!(
            "auxiliary point {aux:?} is not at the {} of the path",
            if at_front { "start" } else { "end" }
        )));
    }
    if at_front {
        path.remove(0);
    } else {
        path.pop();
    }
    for r in path.iter_mut() {
        if r.chain == aux.chain && r.pos > aux.pos {
            r.pos -= 1;
        }
    }
    Ok(path)
}

/// Splits the runs of a chain into exactly `bodies` 00-bodies, cutting runs
/// left to right.
fn split_runs(view: &ChainView<'_>, bodies: usize) -> Result<BodyCover, EmbedError> {
    let run_list = crate::chains::runs(view.colors, view.major);
    if bodies < run_list.len() || bodies > view.major_count() {
        return Err(internal(format_args!(
            "cannot split {} runs into {bodies} bodies",
            run_list.len()
        )));
    }
    let mut extra = bodies - run_list.len();
    let mut out = Vec::with_capacity(bodies);
    for (lo, hi) in run_list {
        let cuts = extra.min(hi - lo);
        extra -= cuts;
        for p in lo..lo + cuts {
            out.push(Body::new(view, p, p)?);
        }
        out.push(Body::new(view, lo + cuts, hi)?);
    }
    Ok(BodyCover::new(out))
}

/// Both chains split into `delta` 00-hedgehogs and joined alternately.
/// Needs `delta >= max(r1, r2)`, black major on `c1`, even total.
pub(crate) fn order_delta_large(c1: &[Color], c2: &[Color]) -> Result<Vec<PointRef>, EmbedError> {
    let v1 = ChainView::new(c1, Color::Black);
    let v2 = ChainView::new(c2, Color::White);
    let delta = v1.surplus();
    if delta != v2.surplus() || delta < 0 {
        return Err(precondition(format_args!(
            "chain surpluses differ: {} vs {}",
            delta,
            v2.surplus()
        )));
    }
    let delta = delta as usize;
    if delta < v1.runs() || delta < v2.runs() {
        return Err(precondition(format_args!(
            "surplus {delta} is below max(r1, r2) = {}",
            v1.runs().max(v2.runs())
        )));
    }
    let h1 = realize_hedgehogs(&v1, &split_runs(&v1, delta)?)?;
    let h2 = realize_hedgehogs(&v2, &split_runs(&v2, delta)?)?;
    Ok(interleave(&h1, &h2))
}

/// Equal run counts on both chains. Each run is one body: on `c1` the
/// first `delta` are 00 and the rest get heads; on `c2` the first
/// `delta - 1` are 00, the next `r - delta` get tails, the last is 00.
/// Surplus 0 is lifted to 1 with an auxiliary major at the left of the
/// first `c1` run and one at the right of the last `c2` run.
pub(crate) fn order_equal_runs(c1: &[Color], c2: &[Color]) -> Result<Vec<PointRef>, EmbedError> {
    let v1 = ChainView::new(c1, Color::Black);
    let v2 = ChainView::new(c2, Color::White);
    let r = v1.runs();
    if r != v2.runs() {
        return Err(precondition(format_args!("r1 = {r} but r2 = {}", v2.runs())));
    }
    let delta = v1.surplus();
    if delta != v2.surplus() || delta < 0 {
        return Err(precondition("chain surpluses differ"));
    }
    let delta = delta as usize;
    if delta >= r {
        return order_delta_large(c1, c2);
    }
    if delta == 0 {
        let at1 = c1.iter().position(|&c| c == Color::Black).ok_or_else(|| internal("no run on c1"))?;
        let at2 = c2.iter().rposition(|&c| c == Color::White).ok_or_else(|| internal("no run on c2"))? + 1;
        let e1 = insert_at(c1, at1, Color::Black);
        let e2 = insert_at(c2, at2, Color::White);
        let path = order_equal_runs(&e1, &e2)?;
        let path = strip_aux(path, PointRef::c1(at1), true)?;
        return strip_aux(path, PointRef::c2(at2), false);
    }

    let runs1 = crate::chains::runs(c1, Color::Black);
    let runs2 = crate::chains::runs(c2, Color::White);
    let mut b1 = Vec::with_capacity(r);
    for (j, &(lo, hi)) in runs1.iter().enumerate() {
        let lo = if j < delta { lo } else { lo - 1 };
        b1.push(Body::new(&v1, lo, hi)?);
    }
    let mut b2 = Vec::with_capacity(r);
    for (j, &(lo, hi)) in runs2.iter().enumerate() {
        let tail = j + 1 >= delta && j + 1 < r;
        b2.push(Body::new(&v2, lo, if tail { hi + 1 } else { hi })?);
    }
    let h1 = realize_hedgehogs(&v1, &BodyCover::new(b1))?;
    let h2 = realize_hedgehogs(&v2, &BodyCover::new(b2))?;
    Ok(interleave(&h1, &h2))
}

/// `c1` free of singletons with `r >= 2` runs: `c2` is covered by `r - 1`
/// hedgehogs `P_j`, and the `j`-th run of `c1` becomes body `D_j` with a
/// head iff `P_(j-1)` has a tail and a tail iff `P_j` has a head. The path
/// is `H_1 P_1 H_2 ... P_(r-1) H_r`.
///
/// With `with_sigma`, an auxiliary major is prepended to the first run and
/// removed from the front of the result. The minor budget of `c1` must
/// match the spines the bodies need exactly; a mismatch is reported as an
/// internal error.
pub(crate) fn order_no_singletons(
    c1: &[Color],
    c2: &[Color],
    with_sigma: bool,
) -> Result<Vec<PointRef>, EmbedError> {
    let r = count_runs(c1, Color::Black);
    if r < 2 {
        return Err(precondition(format_args!("c1 needs at least two runs, has {r}")));
    }
    let v2 = ChainView::new(c2, Color::White);
    let paths2 = cover_with_k_hedgehogs(&v2, r - 1).map_err(|e| internal(format_args!("covering c2: {e}")))?;

    let (work, sigma) = if with_sigma {
        let at = c1.iter().position(|&c| c == Color::Black).expect("r >= 2");
        (insert_at(c1, at, Color::Black), Some(at))
    } else {
        (c1.to_vec(), None)
    };
    let v1 = ChainView::new(&work, Color::Black);
    let runs1 = crate::chains::runs(&work, Color::Black);
    debug_assert_eq!(runs1.len(), r);
    let mut bodies = Vec::with_capacity(r);
    for (j, &(lo, hi)) in runs1.iter().enumerate() {
        let head = j > 0 && paths2[j - 1].body.has_tail;
        let tail = j + 1 < r && paths2[j].body.has_head;
        bodies.push(Body::new(&v1, if head { lo - 1 } else { lo }, if tail { hi + 1 } else { hi })?);
    }
    let h1 = realize_hedgehogs(&v1, &BodyCover::new(bodies))?;
    let path = interleave(&h1, &paths2);
    match sigma {
        Some(at) => strip_aux(path, PointRef::c1(at), true),
        None => Ok(path),
    }
}

/// Where a point of the working `c1` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    Leaf(usize),
    Merged(usize),
    Aux,
}

#[derive(Debug, Clone, Copy)]
struct MergeNode {
    left: Origin,
    mid: Origin,
    right: Origin,
    lo: usize,
    hi: usize,
}

/// One contraction: the point at `pos` (in the chain as it was just before)
/// and its two neighbours were replaced by one point of color `neighbors`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionStep {
    pub pos: usize,
    pub singleton: Color,
    pub neighbors: Color,
}

/// Contractions in the order they were made. Replaying them backwards on
/// the reduced coloring restores the original one.
#[derive(Debug, Clone, Default)]
pub struct ContractionRecord {
    pub steps: Vec<ContractionStep>,
    nodes: Vec<MergeNode>,
    slots: Vec<Origin>,
}

impl ContractionRecord {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Undoes the contractions on `reduced`.
    pub fn replay(&self, reduced: &[Color]) -> Vec<Color> {
        let mut colors = reduced.to_vec();
        for step in self.steps.iter().rev() {
            debug_assert_eq!(colors[step.pos], step.neighbors);
            colors.splice(step.pos..step.pos + 1, [step.neighbors, step.singleton, step.neighbors]);
        }
        colors
    }
}

/// The reduced `c1` together with the record needed to expand paths.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub colors: Vec<Color>,
    pub record: ContractionRecord,
}

fn span(nodes: &[MergeNode], o: Origin) -> (usize, usize) {
    match o {
        Origin::Leaf(p) => (p, p),
        Origin::Merged(id) => (nodes[id].lo, nodes[id].hi),
        Origin::Aux => unreachable!("auxiliary points are stripped before expansion"),
    }
}

/// Contracts singletons of `c1` until its run count (w.r.t. `major`)
/// drops to `stop_at_runs` or no singleton is left.
///
/// A single left-to-right stack pass: after every push the top three points
/// are checked and contracted while they form a singleton with its
/// neighbours. Each contraction lowers the run count by exactly one and
/// keeps the major surplus.
pub fn contract_singletons(c1: &[Color], major: Color, stop_at_runs: usize) -> Contraction {
    let start = c1.iter().enumerate().map(|(i, &c)| (c, Origin::Leaf(i)));
    let (colors, record) = contract_slots(start, major, stop_at_runs, c1.len());
    Contraction { colors, record }
}

fn contract_slots(
    input: impl Iterator<Item = (Color, Origin)>,
    major: Color,
    stop_at_runs: usize,
    len: usize,
) -> (Vec<Color>, ContractionRecord) {
    let mut colors: Vec<Color> = Vec::with_capacity(len);
    let mut slots: Vec<Origin> = Vec::with_capacity(len);
    let all: Vec<(Color, Origin)> = input.collect();
    let mut runs = count_runs(&all.iter().map(|x| x.0).collect::<Vec<_>>(), major);
    let mut nodes = Vec::new();
    let mut steps = Vec::new();
    for (c, o) in all {
        colors.push(c);
        slots.push(o);
        while runs > stop_at_runs && colors.len() >= 3 {
            let k = colors.len();
            let (a, s, b) = (colors[k - 3], colors[k - 2], colors[k - 1]);
            if !(a == b && s != a) {
                break;
            }
            let (lo, _) = span(&nodes, slots[k - 3]);
            let (_, hi) = span(&nodes, slots[k - 1]);
            nodes.push(MergeNode {
                left: slots[k - 3],
                mid: slots[k - 2],
                right: slots[k - 1],
                lo,
                hi,
            });
            steps.push(ContractionStep {
                pos: k - 3,
                singleton: s,
                neighbors: a,
            });
            colors.truncate(k - 3);
            slots.truncate(k - 3);
            colors.push(a);
            slots.push(Origin::Merged(nodes.len() - 1));
            runs -= 1;
        }
    }
    debug_assert_eq!(count_runs(&colors, major), runs);
    (colors, ContractionRecord { steps, nodes, slots })
}

/// Neighbour of a point in the path, as seen by the expansion rule.
#[derive(Debug, Clone, Copy)]
enum Nb {
    End,
    C1(usize),
    C2(usize),
}

/// Picks which outer point of a contracted triple `[lo, hi]` is joined to
/// the path neighbour `u` (the other goes to `v`). Returns `true` for the
/// left one. The rule keeps chords on `c1` nested and edges to `c2` in
/// matching order.
fn left_faces_u(u: Nb, v: Nb, lo: usize) -> bool {
    match (u, v) {
        (Nb::C2(pu), Nb::C2(pv)) => pu < pv,
        (Nb::C1(pu), Nb::C1(pv)) => {
            let opposite = (pu < lo) != (pv < lo);
            if opposite {
                pu < pv
            } else {
                pu > pv
            }
        }
        _ => true,
    }
}

/// Expands merged points of a path over the reduced `c1` back to original
/// `c1` positions. `path` entries on `c1` index `record.slots`.
fn expand_slots(path: &[(ChainId, Origin)], nodes: &[MergeNode]) -> Vec<PointRef> {
    let nb = |x: Option<&(ChainId, Origin)>| match x {
        None => Nb::End,
        Some((ChainId::C2, Origin::Leaf(p))) => Nb::C2(*p),
        Some((ChainId::C1, o)) => Nb::C1(span(nodes, *o).0),
        Some(other) => unreachable!("unexpected path entry {other:?}"),
    };
    let mut out = Vec::with_capacity(path.len());
    let mut work: Vec<(Origin, Nb, Nb)> = Vec::new();
    for i in 0..path.len() {
        match path[i] {
            (ChainId::C2, Origin::Leaf(p)) => out.push(PointRef::c2(p)),
            (ChainId::C1, o) => {
                let u = nb(i.checked_sub(1).and_then(|j| path.get(j)));
                let v = nb(path.get(i + 1));
                work.push((o, u, v));
                while let Some((o, u, v)) = work.pop() {
                    match o {
                        Origin::Leaf(p) => out.push(PointRef::c1(p)),
                        Origin::Merged(id) => {
                            let node = nodes[id];
                            let (e1, e2) = if left_faces_u(u, v, node.lo) {
                                (node.left, node.right)
                            } else {
                                (node.right, node.left)
                            };
                            let mid = Nb::C1(span(nodes, node.mid).0);
                            work.push((e2, mid, v));
                            work.push((node.mid, Nb::C1(span(nodes, e1).0), Nb::C1(span(nodes, e2).0)));
                            work.push((e1, u, mid));
                        }
                        Origin::Aux => unreachable!("auxiliary points are stripped before expansion"),
                    }
                }
            }
            other => unreachable!("unexpected path entry {other:?}"),
        }
    }
    out
}

/// Expands a path on the contracted instance (reduced `c1`, original `c2`)
/// to a path on the original instance.
pub fn expand_path(path: &PathEmbedding, contraction: &Contraction) -> PathEmbedding {
    let rec = &contraction.record;
    let entries: Vec<(ChainId, Origin)> = path
        .order
        .iter()
        .map(|r| match r.chain {
            ChainId::C1 => (ChainId::C1, rec.slots[r.pos]),
            ChainId::C2 => (ChainId::C2, Origin::Leaf(r.pos)),
        })
        .collect();
    PathEmbedding {
        order: expand_slots(&entries, &rec.nodes),
    }
}

/// Colors normalized to black major on `c1`, white major on `c2`, with the
/// chain roles possibly exchanged so that `r1 >= r2`.
struct Normalized {
    c1: Vec<Color>,
    c2: Vec<Color>,
    chains_swapped: bool,
}

fn normalize(col: &Coloring) -> Normalized {
    let stats = crate::chains::compute_stats(col);
    let (mut c1, mut c2) = if stats.colors_swapped {
        (flipped(&col.c1), flipped(&col.c2))
    } else {
        (col.c1.clone(), col.c2.clone())
    };
    let swap = stats.r1 < stats.r2;
    if swap {
        // Reflecting the plane in a horizontal line exchanges the chains;
        // exchanging colors too keeps black major on the new c1.
        let (n1, n2) = (flipped(&c2), flipped(&c1));
        c1 = n1;
        c2 = n2;
    }
    Normalized {
        c1,
        c2,
        chains_swapped: swap,
    }
}

fn check_instance(dc: &DoubleChain, col: &Coloring) -> Result<(), EmbedError> {
    col.check_fits(dc)?;
    let black = col.black_count();
    let white = col.len() - black;
    if black.abs_diff(white) > 1 {
        return Err(EmbedError::NotEquitable { black, white });
    }
    let n = dc.len();
    let (n1, n2) = (dc.c1.len(), dc.c2.len());
    if n1 == 0 || n2 == 0 || 5 * n1 < n || 5 * n2 < n {
        return Err(precondition(format_args!(
            "each chain must hold at least a fifth of the points, got ({n1}, {n2})"
        )));
    }
    Ok(())
}

/// Which construction the dispatcher ended up using.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    EqualRuns,
    DeltaLarge,
    NoSingletons,
}

#[cfg(debug_assertions)]
const SELF_CHECK_LIMIT: usize = 4096;

/// Trace of a run of [`embed_nhap`], for tests and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dispatch {
    pub case: Case,
    pub chains_swapped: bool,
    pub contractions: usize,
    pub odd_auxiliary: bool,
}

/// Finds a non-crossing Hamiltonian alternating path on an equitably
/// colored double-chain whose chains each hold at least a fifth of the
/// points. Linear time.
pub fn embed_nhap(dc: &DoubleChain, col: &Coloring) -> Result<PathEmbedding, EmbedError> {
    embed_nhap_traced(dc, col).map(|(p, _)| p)
}

/// [`embed_nhap`] plus a record of the case analysis.
pub fn embed_nhap_traced(
    dc: &DoubleChain,
    col: &Coloring,
) -> Result<(PathEmbedding, Dispatch), EmbedError> {
    check_instance(dc, col)?;
    let norm = normalize(col);
    let (c1, c2) = (&norm.c1, &norm.c2);
    let odd = (c1.len() + c2.len()) % 2 == 1;
    let r2 = count_runs(c2, Color::White);
    let delta = surplus(c2, Color::White);
    if delta < 0 {
        return Err(internal("normalization left c2 with a white deficit"));
    }
    let delta_u = delta as usize;
    let r1_start = count_runs(c1, Color::Black);
    debug_assert!(r1_start >= r2);

    let stop_at = if r1_start > r2 && r1_start > delta_u {
        r2.max(delta_u)
    } else {
        r1_start
    };
    let leaves = c1.iter().enumerate().map(|(i, &c)| (c, Origin::Leaf(i)));
    let (mut red1, rec) = contract_slots(leaves, Color::Black, stop_at, c1.len());
    let mut slots1 = rec.slots.clone();
    let r1 = count_runs(&red1, Color::Black);
    let case = if r1 == r2 {
        Case::EqualRuns
    } else if delta_u >= r1 {
        Case::DeltaLarge
    } else {
        Case::NoSingletons
    };
    if case == Case::NoSingletons {
        // No singletons left: every inner monochromatic interval has length
        // at least two, hence r1 <= |c1| / 4 + 1 <= |c2| + 1.
        if 4 * (r1 - 1) > red1.len() || r1 - 1 > c2.len() {
            return Err(internal(format_args!(
                "{r1} runs remain on a reduced c1 of {} points",
                red1.len()
            )));
        }
    }

    let mut slots2: Vec<Origin> = (0..c2.len()).map(Origin::Leaf).collect();
    let mut red2 = c2.clone();
    let (blacks, whites) = (
        count(&red1, Color::Black) + count(&red2, Color::Black),
        count(&red1, Color::White) + count(&red2, Color::White),
    );
    let mut odd_auxiliary = false;
    let path = match case {
        Case::EqualRuns | Case::DeltaLarge => {
            if odd {
                odd_auxiliary = true;
                if blacks < whites {
                    let at = red1.iter().position(|&c| c == Color::Black).expect("r1 >= 1");
                    red1.insert(at, Color::Black);
                    slots1.insert(at, Origin::Aux);
                } else {
                    let at = red2.iter().rposition(|&c| c == Color::White).expect("r2 >= 1") + 1;
                    red2.insert(at, Color::White);
                    slots2.insert(at, Origin::Aux);
                }
            }
            if case == Case::EqualRuns {
                order_equal_runs(&red1, &red2)?
            } else {
                order_delta_large(&red1, &red2)?
            }
        }
        Case::NoSingletons => {
            if !odd {
                order_no_singletons(&red1, &red2, true)?
            } else if blacks > whites {
                order_no_singletons(&red1, &red2, false)?
            } else {
                odd_auxiliary = true;
                let at = red1.iter().rposition(|&c| c == Color::Black).expect("r1 >= 2") + 1;
                red1.insert(at, Color::Black);
                slots1.insert(at, Origin::Aux);
                order_no_singletons(&red1, &red2, true)?
            }
        }
    };

    let mut entries: Vec<(ChainId, Origin)> = path
        .iter()
        .map(|r| match r.chain {
            ChainId::C1 => (ChainId::C1, slots1[r.pos]),
            ChainId::C2 => (ChainId::C2, slots2[r.pos]),
        })
        .collect();
    if entries.last().is_some_and(|e| e.1 == Origin::Aux) {
        entries.pop();
    }
    if entries.first().is_some_and(|e| e.1 == Origin::Aux) {
        entries.remove(0);
    }
    if entries.iter().any(|e| e.1 == Origin::Aux) {
        return Err(internal("auxiliary point inside the path"));
    }
    let mut order = expand_slots(&entries, &rec.nodes);
    if norm.chains_swapped {
        for r in order.iter_mut() {
            r.chain = r.chain.other();
        }
    }
    if order.len() != col.len() {
        return Err(internal(format_args!(
            "path has {} points, instance has {}",
            order.len(),
            col.len()
        )));
    }
    // Debug builds check their own output; large inputs are skipped so
    // that timings in optimized test builds stay those of the construction.
    #[cfg(debug_assertions)]
    if order.len() <= SELF_CHECK_LIMIT {
        if let Err(e) = crate::certify::certify_path_fast(dc.c1.len(), dc.c2.len(), col, &order) {
            return Err(internal(format_args!("constructed path fails certification: {e}")));
        }
    }
    Ok((
        PathEmbedding { order },
        Dispatch {
            case,
            chains_swapped: norm.chains_swapped,
            contractions: rec.steps.len(),
            odd_auxiliary,
        },
    ))
}

/// Normalized colors for the single-case entry points, which take the
/// chains as given (no role exchange).
fn case_input(dc: &DoubleChain, col: &Coloring) -> Result<(Vec<Color>, Vec<Color>), EmbedError> {
    col.check_fits(dc)?;
    if col.len() % 2 == 1 {
        return Err(precondition("the total number of points must be even"));
    }
    let black = col.black_count();
    if 2 * black != col.len() {
        return Err(EmbedError::NotEquitable {
            black,
            white: col.len() - black,
        });
    }
    let stats = crate::chains::compute_stats(col);
    Ok(if stats.colors_swapped {
        (flipped(&col.c1), flipped(&col.c2))
    } else {
        (col.c1.clone(), col.c2.clone())
    })
}

fn lift(order: Vec<PointRef>) -> PathEmbedding {
    PathEmbedding { order }
}

/// The `delta >= max(r1, r2)` construction on its own.
pub fn embed_delta_large(dc: &DoubleChain, col: &Coloring) -> Result<PathEmbedding, EmbedError> {
    let (c1, c2) = case_input(dc, col)?;
    order_delta_large(&c1, &c2).map(lift)
}

/// The `r1 = r2` construction on its own.
pub fn embed_equal_runs(dc: &DoubleChain, col: &Coloring) -> Result<PathEmbedding, EmbedError> {
    let (c1, c2) = case_input(dc, col)?;
    order_equal_runs(&c1, &c2).map(lift)
}

/// The construction for a singleton-free `c1` on its own.
pub fn embed_no_singletons(dc: &DoubleChain, col: &Coloring) -> Result<PathEmbedding, EmbedError> {
    let (c1, c2) = case_input(dc, col)?;
    let has_singleton = (1..c1.len().saturating_sub(1))
        .any(|i| c1[i - 1] == c1[i + 1] && c1[i] != c1[i - 1]);
    if has_singleton {
        return Err(precondition("c1 has a singleton"));
    }
    let r1 = count_runs(&c1, Color::Black);
    let v2 = ChainView::new(&c2, Color::White);
    let (len, r2, d2) = (c2.len(), v2.runs(), v2.surplus());
    if r1 < 2 || len < r1 - 1 || r2 > r1 - 1 || d2 > (r1 - 1) as i64 {
        return Err(precondition(format_args!(
            "c2 cannot be covered by r1 - 1 = {} hedgehogs",
            r1.saturating_sub(1)
        )));
    }
    order_no_singletons(&c1, &c2, true).map(lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::certify::{certify_path, certify_path_fast};
    use crate::chains::{generate_double_chain, parse_colors};

    fn inst(c1: &str, c2: &str) -> (DoubleChain, Coloring) {
        let col = Coloring::new(parse_colors(c1).unwrap(), parse_colors(c2).unwrap());
        (generate_double_chain(col.c1.len(), col.c2.len()).unwrap(), col)
    }

    fn assert_valid(dc: &DoubleChain, col: &Coloring, p: &PathEmbedding) {
        assert_eq!(certify_path(dc, col, &p.order), Ok(()), "{col:?} -> {p:?}");
    }

    #[test]
    fn delta_large_examples() {
        for (a, b) in [("BB", "WW"), ("BBBB", "WWWW"), ("BWBB", "WW")] {
            let (dc, col) = inst(a, b);
            let p = embed_delta_large(&dc, &col).unwrap();
            assert_valid(&dc, &col, &p);
        }
    }

    #[test]
    fn delta_large_rejects_small_surplus() {
        let (dc, col) = inst("BWB", "WBW");
        assert!(matches!(embed_delta_large(&dc, &col), Err(EmbedError::Precondition(_))));
    }

    #[test]
    fn equal_runs_examples() {
        for (a, b) in [("WBW", "BWB"), ("BBW", "WWB"), ("BW", "WB"), ("BWBW", "WBWB")] {
            let (dc, col) = inst(a, b);
            let p = embed_equal_runs(&dc, &col).unwrap();
            assert_valid(&dc, &col, &p);
        }
    }

    #[test]
    fn no_singletons_example() {
        // Two runs on c1 separated by two minors; c2 is one white run.
        let (dc, col) = inst("BBWWBB", "WWWW");
        assert!(embed_no_singletons(&dc, &col).is_err()); // surplus 4 > r1 - 1
        let (dc, col) = inst("BBWWBBWW", "WWBB");
        let p = embed_no_singletons(&dc, &col).unwrap();
        assert_valid(&dc, &col, &p);
    }

    #[test]
    fn contraction_examples() {
        let c = parse_colors("BWB").unwrap();
        let con = contract_singletons(&c, Color::Black, 0);
        assert_eq!(con.colors, parse_colors("B").unwrap());
        assert_eq!(con.record.len(), 1);
        assert_eq!(con.record.replay(&con.colors), c);

        let c = parse_colors("BBWW").unwrap();
        let con = contract_singletons(&c, Color::Black, 0);
        assert_eq!(con.colors, c);
        assert!(con.record.is_empty());

        let c = parse_colors("WBWBW").unwrap();
        let con = contract_singletons(&c, Color::Black, 0);
        assert_eq!(con.colors, parse_colors("W").unwrap());
        assert_eq!(con.record.replay(&con.colors), c);
    }

    #[test]
    fn contraction_stops_at_target() {
        let c = parse_colors("BWBWBWB").unwrap();
        let con = contract_singletons(&c, Color::Black, 3);
        assert_eq!(count_runs(&con.colors, Color::Black), 3);
        assert_eq!(con.record.replay(&con.colors), c);
    }

    #[test]
    fn expansion_identity_on_empty_record() {
        let c = parse_colors("BBWW").unwrap();
        let con = contract_singletons(&c, Color::Black, 0);
        let p = PathEmbedding {
            order: vec![PointRef::c1(0), PointRef::c2(0), PointRef::c1(3)],
        };
        assert_eq!(expand_path(&p, &con), p);
    }

    #[test]
    fn expansion_after_single_contraction() {
        // c1 = B W B B W W, c2 = W W B W B B... use a 6-point instance:
        // c1 = B W B (contracts to B), c2 = W W B.
        let (dc, col) = inst("BWB", "WWB");
        let con = contract_singletons(&col.c1, Color::Black, 0);
        assert_eq!(con.colors.len(), 1);
        let reduced = Coloring::new(con.colors.clone(), col.c2.clone());
        let small = generate_double_chain(1, 3).unwrap();
        // B on c1, W W B on c2: W - B - W is not Hamiltonian; find one by
        // brute force on the reduced instance and expand it.
        let found = crate::oracle::brute_force_nhap(
            &small.all_points(),
            &reduced.flat(),
            &crate::oracle::SearchBudget::nodes(10_000),
        )
        .unwrap();
        if let crate::oracle::SearchStatus::Found(idx) = found.status {
            let order: Vec<PointRef> = idx
                .iter()
                .map(|&i| if i < 1 { PointRef::c1(i) } else { PointRef::c2(i - 1) })
                .collect();
            let p = expand_path(&PathEmbedding { order }, &con);
            assert_valid(&dc, &col, &p);
        }
    }

    #[test]
    fn small_exhaustive_even_and_odd() {
        for n1 in 1..=5usize {
            for n2 in 1..=5usize {
                let dc = generate_double_chain(n1, n2).unwrap();
                let n = n1 + n2;
                if 5 * n1 < n || 5 * n2 < n {
                    continue;
                }
                for mask in 0u32..(1 << n) {
                    let flat: Vec<Color> = (0..n)
                        .map(|i| if mask >> i & 1 == 1 { Color::White } else { Color::Black })
                        .collect();
                    if !crate::chains::is_equitable_colors(&flat) {
                        continue;
                    }
                    let col = Coloring::new(flat[..n1].to_vec(), flat[n1..].to_vec());
                    let p = embed_nhap(&dc, &col).unwrap_or_else(|e| panic!("{col:?}: {e}"));
                    assert_valid(&dc, &col, &p);
                    assert_eq!(certify_path_fast(n1, n2, &col, &p.order), Ok(()));
                }
            }
        }
    }

    #[test]
    fn rejects_non_equitable_and_unbalanced() {
        let (dc, col) = inst("BBB", "BWW");
        assert!(matches!(embed_nhap(&dc, &col), Err(EmbedError::NotEquitable { .. })));
        let (dc, col) = inst("BWBWBWBWBW", "B");
        assert!(matches!(embed_nhap(&dc, &col), Err(EmbedError::Precondition(_))));
    }
}
