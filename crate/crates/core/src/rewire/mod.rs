//! Run partitions over powers of labeled paths, and the block shifts that
//! rearrange them.
//!
//! A power path on `L` positions with power `m` is the graph whose edges
//! join positions at order-distance at most `m`. Marking a position set
//! splits the traversal order into maximal runs of marked and unmarked
//! positions. The tools here move whole runs around: [`rewire`]
//! renormalizes the run lengths without ever increasing the number of
//! edges induced on the marked set, [`bound_check`] turns a normalized
//! partition into an exact edge-count bound, and the far-pair census
//! ([`q_far_count`], [`segment_far_minimum`], [`zero_statement_slope`])
//! measures how many class-local edges a labeling is forced to carry.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::MAX_VERTICES;

mod algorithm;
mod bound;
mod far;
mod lp;
mod slope;

pub use algorithm::{rewire, RewireCertificate, RewireOutput};
pub use bound::{bound_check, spanning_h_path_check, BoundOutcome, BoundVariant, CheckOutcome};
pub use far::{
    far_count_floor, far_coupling_check, q_far_count, segment_far_minimum, FarBoundOutcome,
};
pub use slope::{zero_statement_slope, SlopeBound};

/// Power of a labeled path, presented by its traversal order.
///
/// `order[p]` is the vertex id at position `p`; ids are distinct but
/// otherwise uninterpreted. `labels[p]` is the class of the vertex at
/// position `p`. Edges are implicit: positions `p < r` are adjacent
/// exactly when `r - p <= m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPowerPath {
    m: u64,
    order: Vec<u32>,
    labels: Vec<u8>,
}

impl LabeledPowerPath {
    pub fn new(m: u64, order: Vec<u32>, labels: Vec<u8>) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("path power m must be at least 1"));
        }
        if order.is_empty() {
            return Err(Error::domain("path order must be nonempty"));
        }
        if order.len() > MAX_VERTICES as usize {
            return Err(Error::resource(format!(
                "path on {} positions exceeds the {} position cap",
                order.len(),
                MAX_VERTICES
            )));
        }
        if labels.len() != order.len() {
            return Err(Error::domain("exactly one label per position required"));
        }
        let mut seen = order.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("vertex ids in the order must be distinct"));
        }
        Ok(LabeledPowerPath { m, order, labels })
    }

    /// Uniformly labeled path on ids `0..n`, for marked-set work where
    /// classes play no role.
    pub fn unlabeled(m: u64, n: u32) -> Result<Self> {
        Self::new(m, (0..n).collect(), vec![0; n as usize])
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// Never true; kept for form, the constructor rejects empty orders.
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Positions carrying class `t`, ascending.
    pub fn class_positions(&self, t: u8) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.labels[p] == t).collect()
    }

    pub(crate) fn max_label(&self) -> u8 {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// Checks a caller-supplied position set for range and duplicates;
/// returns it sorted.
fn sorted_positions(len: usize, s: &[usize]) -> Result<Vec<usize>> {
    let mut pos = s.to_vec();
    pos.sort_unstable();
    if let Some(&p) = pos.last() {
        if p >= len {
            return Err(Error::domain(format!(
                "position {p} out of range for an order of length {len}"
            )));
        }
    }
    if pos.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("duplicate positions in set"));
    }
    Ok(pos)
}

/// Validated indicator array for a nonempty marked position set.
pub(crate) fn mark_array(len: usize, v0: &[usize]) -> Result<Vec<bool>> {
    if v0.is_empty() {
        return Err(Error::domain("marked set must be nonempty"));
    }
    let pos = sorted_positions(len, v0)?;
    let mut marks = vec![false; len];
    for &p in &pos {
        marks[p] = true;
    }
    Ok(marks)
}

/// Number of pairs of `pos` (sorted ascending) at distance at most `m`.
pub(crate) fn edges_within(pos: &[usize], m: u64) -> u64 {
    let mut lo = 0usize;
    let mut count = 0u64;
    for hi in 0..pos.len() {
        while (pos[hi] - pos[lo]) as u64 > m {
            lo += 1;
        }
        count += (hi - lo) as u64;
    }
    count
}

/// Number of edges of the power path spanned by the position set `s`.
pub fn induced_edges(path: &LabeledPowerPath, s: &[usize]) -> Result<u64> {
    let pos = sorted_positions(path.len(), s)?;
    Ok(edges_within(&pos, path.m))
}

/// True when no class packs `s` of its positions into one window of
/// `m + 1` consecutive positions (which would make them pairwise
/// adjacent).
pub(crate) fn all_classes_clique_free(path: &LabeledPowerPath, s: u32) -> bool {
    let l = path.len();
    let s = s as usize;
    let window = if path.m() as u128 >= l as u128 {
        l
    } else {
        path.m() as usize + 1
    };
    let mut counts = [0usize; 256];
    for p in 0..window {
        counts[path.labels[p] as usize] += 1;
    }
    if counts.iter().any(|&c| c >= s) {
        return false;
    }
    for start in 1..=l - window {
        counts[path.labels[start - 1] as usize] -= 1;
        let incoming = path.labels[start + window - 1] as usize;
        counts[incoming] += 1;
        // only the incoming label can newly violate
        if counts[incoming] >= s {
            return false;
        }
    }
    true
}

/// Direction of a block shift between two segments of the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// Move the first `min(h, |B|)` elements of `B` to the end of `A`.
    Left,
    /// Move the last `min(h, |A|)` elements of `A` to the front of `B`.
    Right,
}

/// Shifts up to `h` elements between segments `a` and `b` of `order`.
///
/// `a` must lie entirely to the left of `b`; everything between them (the
/// separating segment the moved block jumps over) and outside them keeps
/// its relative order, as does the moved block itself.
pub fn shift(
    direction: ShiftDirection,
    a: Range<usize>,
    b: Range<usize>,
    h: usize,
    order: &[u32],
) -> Result<Vec<u32>> {
    if h == 0 {
        return Err(Error::domain("shift amount h must be at least 1"));
    }
    if a.start > a.end || b.start > b.end {
        return Err(Error::domain("malformed segment bounds"));
    }
    if a.end > b.start {
        return Err(Error::domain("segments overlap or are out of order"));
    }
    if b.end > order.len() {
        return Err(Error::domain("segment extends past the end of the order"));
    }
    let mut out = order.to_vec();
    shift_in_place(direction, a, b, h, &mut out);
    Ok(out)
}

/// Core of [`shift`]: a single slice rotation. Assumes validated segments.
pub(crate) fn shift_in_place<T>(
    direction: ShiftDirection,
    a: Range<usize>,
    b: Range<usize>,
    h: usize,
    xs: &mut [T],
) {
    match direction {
        ShiftDirection::Right => {
            let hh = h.min(a.len());
            xs[a.end - hh..b.start].rotate_left(hh);
        }
        ShiftDirection::Left => {
            let hh = h.min(b.len());
            xs[a.end..b.start + hh].rotate_right(hh);
        }
    }
}

/// Alternating run decomposition of a marked order.
///
/// The order reads `G_0 M_1 G_1 ... M_q G_q`: `q` runs of marked
/// positions interleaved with unmarked gaps, where the leading `G_0` and
/// trailing `G_q` may be empty. Fresh from [`v0_runs`] the runs are
/// maximal, so interior gaps are nonempty; after [`rewire`] an interior
/// gap may have shrunk to zero, and the partition then records the
/// rewiring bookkeeping (two abutting marked runs stay distinct). The
/// balance conditions are stated over exactly this bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunPartition {
    marked: Vec<usize>,
    gaps: Vec<usize>, // always one entry longer than `marked`
}

impl RunPartition {
    pub(crate) fn from_sizes(marked: Vec<usize>, gaps: Vec<usize>) -> Self {
        debug_assert!(!marked.is_empty());
        debug_assert_eq!(gaps.len(), marked.len() + 1);
        debug_assert!(marked.iter().all(|&x| x >= 1));
        RunPartition { marked, gaps }
    }

    pub(crate) fn from_marks(marks: &[bool]) -> Self {
        let n = marks.len();
        let mut marked = Vec::new();
        let mut gaps = Vec::new();
        let mut idx = 0;
        let mut lead = 0;
        while idx < n && !marks[idx] {
            lead += 1;
            idx += 1;
        }
        gaps.push(lead);
        while idx < n {
            let mut run = 0;
            while idx < n && marks[idx] {
                run += 1;
                idx += 1;
            }
            marked.push(run);
            let mut gap = 0;
            while idx < n && !marks[idx] {
                gap += 1;
                idx += 1;
            }
            gaps.push(gap);
        }
        Self::from_sizes(marked, gaps)
    }

    /// Number of marked runs.
    pub fn q(&self) -> usize {
        self.marked.len()
    }

    /// Sizes of the marked runs, left to right.
    pub fn marked_sizes(&self) -> &[usize] {
        &self.marked
    }

    /// All gap sizes including the leading and trailing gap; length `q + 1`.
    pub fn gap_sizes(&self) -> &[usize] {
        &self.gaps
    }

    /// Interior gap sizes, length `q - 1`; these are the constrained ones.
    pub fn interior_gap_sizes(&self) -> &[usize] {
        &self.gaps[1..self.marked.len()]
    }

    /// Total number of positions covered.
    pub fn total_len(&self) -> usize {
        self.marked.iter().sum::<usize>() + self.gaps.iter().sum::<usize>()
    }

    /// Run layout as `(is_marked, position_range)`, left to right,
    /// including empty gap runs.
    pub fn segments(&self) -> Vec<(bool, Range<usize>)> {
        let mut out = Vec::with_capacity(2 * self.marked.len() + 1);
        let mut at = 0;
        for i in 0..self.marked.len() {
            out.push((false, at..at + self.gaps[i]));
            at += self.gaps[i];
            out.push((true, at..at + self.marked[i]));
            at += self.marked[i];
        }
        out.push((false, at..at + self.gaps[self.marked.len()]));
        out
    }

    /// The four balance conditions for power `m`, in order: every marked
    /// run has size in `1..=m`; every interior gap has size at most `m`;
    /// each marked run plus its right gap spans at least `m`; each
    /// interior gap plus the following marked run spans at least `m`.
    pub fn conditions(&self, m: u64) -> [bool; 4] {
        let q = self.q();
        let x = &self.marked;
        let y = &self.gaps;
        let c1 = x.iter().all(|&v| v >= 1 && v as u64 <= m);
        let c2 = (1..q).all(|i| y[i] as u64 <= m);
        let c3 = (1..q).all(|i| (x[i - 1] + y[i]) as u64 >= m);
        let c4 = (1..q.saturating_sub(1)).all(|i| (y[i] + x[i]) as u64 >= m);
        [c1, c2, c3, c4]
    }

    /// Largest interior gap-to-run ratio `y_i / x_i`; exploratory
    /// telemetry for how lopsided the partition is, with no claim
    /// attached.
    pub fn max_gap_to_run_ratio(&self) -> Rational {
        let mut best = Rational::zero();
        for i in 1..self.q() {
            // marked runs are nonempty by invariant
            let r = Rational::from_u64(self.gaps[i] as u64)
                / Rational::from_u64(self.marked[i - 1] as u64);
            if r > best {
                best = r;
            }
        }
        best
    }
}

/// Maximal-run decomposition of the marked position set `v0`.
pub fn v0_runs(path: &LabeledPowerPath, v0: &[usize]) -> Result<RunPartition> {
    let marks = mark_array(path.len(), v0)?;
    Ok(RunPartition::from_marks(&marks))
}
