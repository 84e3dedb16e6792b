//! Bodies and hedgehogs on a single chain.
//!
//! A body is an interval whose inner points are major; a minor endpoint is a
//! head (left) or tail (right). A hedgehog on a body is an alternating path
//! through all body points, starting at the body's first point and ending at
//! its last, that picks up one extra minor point (a spine) between every two
//! consecutive majors. Everything in this module is combinatorial: points
//! are positions on the chain and the chain is assumed to be in convex
//! position, where two chords cross iff their endpoints interleave.

use alloc::vec;
use alloc::vec::Vec;

use crate::chains::{count_runs, runs, Color};
use crate::error::HedgehogError;

/// The colors of one chain together with its major color.
#[derive(Debug, Clone, Copy)]
pub struct ChainView<'a> {
    pub colors: &'a [Color],
    pub major: Color,
}

impl<'a> ChainView<'a> {
    pub fn new(colors: &'a [Color], major: Color) -> Self {
        ChainView { colors, major }
    }

    #[inline]
    pub fn is_major(&self, pos: usize) -> bool {
        self.colors[pos] == self.major
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn major_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == self.major).count()
    }

    /// Majors minus minors.
    pub fn surplus(&self) -> i64 {
        let m = self.major_count() as i64;
        2 * m - self.colors.len() as i64
    }

    pub fn runs(&self) -> usize {
        count_runs(self.colors, self.major)
    }
}

/// Head/tail type of a body: `00`, `01` (tail only), `10` (head only), `11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BodyKind {
    B00,
    B01,
    B10,
    B11,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Body {
    pub lo: usize,
    pub hi: usize,
    pub has_head: bool,
    pub has_tail: bool,
}

impl Body {
    /// The body on `[lo, hi]`, with head and tail read off the endpoint
    /// colors.
    pub fn new(view: &ChainView<'_>, lo: usize, hi: usize) -> Result<Self, HedgehogError> {
        let bad = |reason| HedgehogError::MalformedBody { lo, hi, reason };
        if lo > hi || hi >= view.len() {
            return Err(bad("interval out of range"));
        }
        if (lo + 1..hi).any(|p| !view.is_major(p)) {
            return Err(bad("minor inner point"));
        }
        if lo < hi && !view.is_major(lo) && !view.is_major(hi) && hi == lo + 1 {
            return Err(bad("two minor points without a major between"));
        }
        Ok(Body {
            lo,
            hi,
            has_head: !view.is_major(lo),
            has_tail: !view.is_major(hi),
        })
    }

    pub fn kind(&self) -> BodyKind {
        match (self.has_head, self.has_tail) {
            (false, false) => BodyKind::B00,
            (false, true) => BodyKind::B01,
            (true, false) => BodyKind::B10,
            (true, true) => BodyKind::B11,
        }
    }

    /// Number of major points in the body.
    pub fn majors(&self) -> usize {
        let len = self.hi - self.lo + 1;
        if self.lo == self.hi && self.has_head {
            return 0;
        }
        len - self.has_head as usize - self.has_tail as usize
    }

    /// Minor points the hedgehog on this body must contain, spines included:
    /// `(t - 1) + head + tail` for `t` majors.
    pub fn required_minors(&self) -> usize {
        (self.majors() + self.has_head as usize + self.has_tail as usize).saturating_sub(1)
    }

    /// Number of spines the body needs: one per gap between majors.
    pub fn spines_needed(&self) -> usize {
        self.majors().saturating_sub(1)
    }
}

/// Pairwise disjoint bodies on one chain, sorted left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BodyCover {
    pub bodies: Vec<Body>,
}

impl BodyCover {
    pub fn new(mut bodies: Vec<Body>) -> Self {
        bodies.sort_by_key(|b| b.lo);
        BodyCover { bodies }
    }

    pub fn count(&self, kind: BodyKind) -> usize {
        self.bodies.iter().filter(|b| b.kind() == kind).count()
    }

    pub fn d00(&self) -> usize {
        self.count(BodyKind::B00)
    }

    pub fn d11(&self) -> usize {
        self.count(BodyKind::B11)
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    /// Bodies are disjoint and every major point lies in one of them.
    pub fn check(&self, view: &ChainView<'_>) -> Result<(), HedgehogError> {
        let mut next_free = 0;
        for (i, b) in self.bodies.iter().enumerate() {
            let fresh = Body::new(view, b.lo, b.hi)?;
            if fresh != *b {
                return Err(HedgehogError::MalformedBody {
                    lo: b.lo,
                    hi: b.hi,
                    reason: "head/tail flags disagree with endpoint colors",
                });
            }
            if i > 0 && b.lo < next_free {
                return Err(HedgehogError::Overlap(b.lo));
            }
            next_free = b.hi + 1;
        }
        let mut covered = vec![false; view.len()];
        for b in &self.bodies {
            covered[b.lo..=b.hi].iter_mut().for_each(|c| *c = true);
        }
        match (0..view.len()).find(|&p| view.is_major(p) && !covered[p]) {
            Some(p) => Err(HedgehogError::UncoveredMajor(p)),
            None => Ok(()),
        }
    }
}

/// Whether the bodies of `cover` can carry non-crossing hedgehogs covering
/// a chain whose majors outnumber its minors by `delta`.
pub fn cover_is_feasible(cover: &BodyCover, delta: i64) -> bool {
    delta == cover.d00() as i64 - cover.d11() as i64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hedgehog {
    pub body: Body,
    /// `(spine position, left major of the gap it fills)`, left to right by
    /// gap.
    pub spines: Vec<(usize, usize)>,
    /// Chain positions from the first to the last body point.
    pub path: Vec<usize>,
}

impl Hedgehog {
    pub fn first(&self) -> usize {
        self.body.lo
    }

    pub fn last(&self) -> usize {
        self.body.hi
    }

    pub fn kind(&self) -> BodyKind {
        self.body.kind()
    }
}

/// Extends the bodies of a feasible cover to pairwise non-crossing
/// hedgehogs covering the whole chain.
///
/// Free minor points (in no body) and gaps between consecutive majors of a
/// body are merged into one left-to-right sequence; a stack pass matches
/// each item with the nearest unmatched item of the other kind to its left.
/// The matching is laminar, so spine chords never interleave. Linear time.
pub fn realize_hedgehogs(
    view: &ChainView<'_>,
    cover: &BodyCover,
) -> Result<Vec<Hedgehog>, HedgehogError> {
    cover.check(view)?;
    let delta = view.surplus();
    if !cover_is_feasible(cover, delta) {
        return Err(HedgehogError::InfeasibleCover {
            delta,
            d00: cover.d00(),
            d11: cover.d11(),
        });
    }

    let n = view.len();
    const NONE: usize = usize::MAX;
    // owner[p] = index of the body containing p.
    let mut owner = vec![NONE; n];
    for (i, b) in cover.bodies.iter().enumerate() {
        owner[b.lo..=b.hi].iter_mut().for_each(|o| *o = i);
    }
    let is_gap = |p: usize| {
        p + 1 < n
            && owner[p] != NONE
            && owner[p] == owner[p + 1]
            && view.is_major(p)
            && view.is_major(p + 1)
    };

    #[derive(Clone, Copy)]
    enum Item {
        Free(usize),
        Gap(usize),
    }
    let mut spine_at_gap = vec![NONE; n];
    let mut stack: Vec<Item> = Vec::new();
    let (mut free, mut gaps) = (0, 0);
    let mut push = |item: Item, stack: &mut Vec<Item>| match (stack.last().copied(), item) {
        (Some(Item::Free(f)), Item::Gap(g)) | (Some(Item::Gap(g)), Item::Free(f)) => {
            stack.pop();
            spine_at_gap[g] = f;
        }
        _ => stack.push(item),
    };
    for p in 0..n {
        if owner[p] == NONE {
            // Uncovered points are minor, checked above.
            free += 1;
            push(Item::Free(p), &mut stack);
        }
        if is_gap(p) {
            gaps += 1;
            push(Item::Gap(p), &mut stack);
        }
    }
    if !stack.is_empty() {
        return Err(HedgehogError::SpineMismatch { free, gaps });
    }

    let hedgehogs = cover
        .bodies
        .iter()
        .map(|&body| {
            let mut path = Vec::with_capacity(2 * (body.hi - body.lo) + 1);
            let mut spines = Vec::new();
            for p in body.lo..=body.hi {
                path.push(p);
                if p < body.hi && spine_at_gap[p] != NONE {
                    path.push(spine_at_gap[p]);
                    spines.push((spine_at_gap[p], p));
                }
            }
            Hedgehog { body, spines, path }
        })
        .collect();
    Ok(hedgehogs)
}

/// Covers the chain by exactly `k` pairwise disjoint, non-crossing
/// hedgehogs.
///
/// Requires `len >= k`, `runs <= k` and `0 <= surplus <= k`. Starting from
/// single-point bodies (every major a `00`-body, every minor an `11`-body),
/// neighbouring `00`-bodies inside a run are joined while one single-minor
/// body is withdrawn to become a spine, keeping `d00 - d11` fixed. Minors
/// without a major neighbour are withdrawn first so that the ones touching
/// runs stay available. The joining stops once at most `k + 1` bodies
/// remain or every run is one body; the remaining excess is absorbed by
/// attaching single minors to run ends as heads or tails.
pub fn cover_with_k_hedgehogs(
    view: &ChainView<'_>,
    k: usize,
) -> Result<Vec<Hedgehog>, HedgehogError> {
    let cover = cover_with_k_bodies(view, k)?;
    realize_hedgehogs(view, &cover)
}

/// The body cover behind [`cover_with_k_hedgehogs`].
pub fn cover_with_k_bodies(view: &ChainView<'_>, k: usize) -> Result<BodyCover, HedgehogError> {
    let n = view.len();
    let run_list = runs(view.colors, view.major);
    let r = run_list.len();
    let delta = view.surplus();
    if n < k || r > k || delta < 0 || delta > k as i64 || (k == 0 && n > 0) {
        return Err(HedgehogError::CoverPrecondition {
            len: n,
            k,
            runs: r,
            delta,
        });
    }
    let majors = view.major_count();

    // Joins performed before |D| <= k + 1 or every run is a single body.
    let by_size = n.saturating_sub(k + 1).div_ceil(2);
    let joins = by_size.min(majors - r);

    // Spread the joins over runs left to right: run j keeps its first
    // `absorbed[j] + 1` majors as one body, the rest as single majors.
    let mut absorbed = vec![0usize; r];
    let mut left = joins;
    for (j, &(lo, hi)) in run_list.iter().enumerate() {
        let take = left.min(hi - lo);
        absorbed[j] = take;
        left -= take;
    }
    debug_assert_eq!(left, 0);

    // Withdraw `joins` minors, isolated ones first.
    let touches_run =
        |p: usize| (p > 0 && view.is_major(p - 1)) || (p + 1 < n && view.is_major(p + 1));
    let mut withdrawn = vec![false; n];
    let mut left = joins;
    for pass_isolated in [true, false] {
        for p in 0..n {
            if left == 0 {
                break;
            }
            if !view.is_major(p) && !withdrawn[p] && touches_run(p) != pass_isolated {
                withdrawn[p] = true;
                left -= 1;
            }
        }
    }
    if left != 0 {
        return Err(HedgehogError::CoverPrecondition {
            len: n,
            k,
            runs: r,
            delta,
        });
    }

    let bodies_now = n - 2 * joins;
    let mut attach = bodies_now - k;

    // Attach single minors touching a run end, leftmost first.
    let mut head_of_run = vec![false; r];
    let mut tail_of_run = vec![false; r];
    let mut attached = vec![false; n];
    let run_starting_at = |p: usize| run_list.binary_search_by_key(&p, |&(lo, _)| lo).ok();
    let run_ending_at = |p: usize| run_list.binary_search_by_key(&p, |&(_, hi)| hi).ok();
    for p in 0..n {
        if attach == 0 {
            break;
        }
        if view.is_major(p) || withdrawn[p] {
            continue;
        }
        if let Some(j) = (p + 1 < n).then(|| run_starting_at(p + 1)).flatten() {
            head_of_run[j] = true;
        } else if let Some(j) = p.checked_sub(1).and_then(run_ending_at) {
            tail_of_run[j] = true;
        } else {
            continue;
        }
        attached[p] = true;
        attach -= 1;
    }
    if attach != 0 {
        return Err(HedgehogError::CoverPrecondition {
            len: n,
            k,
            runs: r,
            delta,
        });
    }

    let mut bodies = Vec::with_capacity(k);
    for (j, &(lo, hi)) in run_list.iter().enumerate() {
        let merged_hi = lo + absorbed[j];
        let mut pieces: Vec<(usize, usize)> = vec![(lo, merged_hi)];
        pieces.extend((merged_hi + 1..=hi).map(|p| (p, p)));
        let last = pieces.len() - 1;
        if head_of_run[j] {
            pieces[0].0 -= 1;
        }
        if tail_of_run[j] {
            pieces[last].1 += 1;
        }
        for (a, b) in pieces {
            bodies.push(Body::new(view, a, b)?);
        }
    }
    for p in 0..n {
        if !view.is_major(p) && !withdrawn[p] && !attached[p] {
            bodies.push(Body::new(view, p, p)?);
        }
    }
    let cover = BodyCover::new(bodies);
    debug_assert_eq!(cover.len(), k);
    Ok(cover)
}
