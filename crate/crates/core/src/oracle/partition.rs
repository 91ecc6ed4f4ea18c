//! Exhaustive minimization over labelings of a power path.
//!
//! A labeling splits the vertices of P_L^m (positions 0..L, edges between
//! positions at distance at most m) into k+1 classes. Two objectives are
//! scanned: the total number of within-class edges, and the worst per-class
//! deficit against the conjectured linear bound f(ell_{k,m})*|V_j|.
//!
//! Class names carry no meaning, so the scan visits only canonical
//! labelings: the first occurrence of each class label is increasing
//! (restricted growth strings). That cuts the (k+1)! renaming factor
//! without losing any partition. The scan never prunes by objective value,
//! so the `enumerated` count is exactly the number of canonical labelings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dirac::{ell_argmin, f_at_int};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Outcome of an exhaustive labeling scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    /// Least total within-class edge count over all labelings.
    pub minimum: u64,
    /// First canonical labeling attaining it (class of each position).
    pub witness: Vec<u8>,
    /// Canonical labelings examined (all of them).
    pub enumerated: u64,
}

/// Largest L accepted by default for a given k, keeping a single scan near
/// a million canonical labelings.
pub fn default_position_limit(k: u32) -> u64 {
    match k {
        0 => 0,
        1 => 18,
        2 => 13,
        _ => {
            let base = u128::from(k) + 1;
            let mut l = 0;
            let mut pow: u128 = 1;
            while pow.saturating_mul(base) <= 1 << 20 {
                pow *= base;
                l += 1;
            }
            l
        }
    }
}

/// Shared validation for both scans. With limits overridden the default
/// per-k bound is lifted, but scans that cannot finish at desk scale are
/// still refused.
fn check_scan_bounds(l: u64, m: u64, k: u32, override_limits: bool) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if k > 254 {
        return Err(Error::domain("class labels are 8-bit; k <= 254 required"));
    }
    if l == 0 {
        return Err(Error::domain("the path must have at least one vertex"));
    }
    if m == 0 {
        return Err(Error::domain("the power m must be at least 1"));
    }
    let limit = default_position_limit(k);
    if !override_limits && l > limit {
        return Err(Error::resource(format!(
            "L = {l} exceeds the default enumeration bound {limit} for k = {k}; \
             the scan visits about (k+1)^L labelings, override the limits to force it"
        )));
    }
    let mut pow: u128 = 1;
    for _ in 0..l {
        pow = pow.saturating_mul(u128::from(k) + 1);
        if pow > 1 << 34 {
            return Err(Error::resource(format!(
                "(k+1)^L labelings is beyond any exhaustive scan for L = {l}, k = {k}"
            )));
        }
    }
    Ok(())
}

/// Total within-class edge count of an explicit labeling of P^m: the number
/// of equal-label pairs at distance at most m. Spot-check companion to
/// [`min_partition_edges`].
pub fn partition_edge_value(m: u64, labels: &[u8]) -> u64 {
    let m = m as usize;
    let mut total = 0;
    for (i, &c) in labels.iter().enumerate() {
        let lo = i.saturating_sub(m);
        total += labels[lo..i].iter().filter(|&&x| x == c).count() as u64;
    }
    total
}

/// Equal-label count in the length-m window preceding the next position.
fn window_matches(labels: &[u8], c: u8, m: usize) -> u64 {
    let lo = labels.len().saturating_sub(m);
    labels[lo..].iter().filter(|&&x| x == c).count() as u64
}

/// All canonical labeling prefixes of the given depth. The scans fan out in
/// parallel over these; prefix order equals depth-first order, so merging by
/// (value, prefix index) reproduces the sequential result exactly.
fn canonical_prefixes(depth: usize, classes: u8) -> Vec<Vec<u8>> {
    fn rec(cur: &mut Vec<u8>, depth: usize, classes: u8, used: u8, out: &mut Vec<Vec<u8>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for c in 0..(used + 1).min(classes) {
            cur.push(c);
            rec(cur, depth, classes, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(depth), depth, classes, 0, &mut out);
    out
}

/// Exact minimum of the within-class edge count over all (k+1)-class
/// labelings of P_L^m, under the default enumeration bounds.
pub fn min_partition_edges(l: u64, m: u64, k: u32) -> Result<PartitionResult> {
    min_partition_edges_with(l, m, k, false)
}

/// [`min_partition_edges`] with the default per-k bound lifted.
pub fn min_partition_edges_with(
    l: u64,
    m: u64,
    k: u32,
    override_limits: bool,
) -> Result<PartitionResult> {
    check_scan_bounds(l, m, k, override_limits)?;
    let classes = (k + 1) as u8;
    let lu = l as usize;
    // A window wider than the path just means the complete graph.
    let mu = m.min(l) as usize;
    let branches: Vec<SumBranch> = canonical_prefixes(lu.min(6), classes)
        .par_iter()
        .map(|prefix| sum_scan_branch(prefix, lu, mu, classes))
        .collect();
    let mut minimum = u64::MAX;
    let mut witness = Vec::new();
    let mut enumerated = 0u64;
    for b in branches {
        enumerated += b.leaves;
        if b.best < minimum {
            minimum = b.best;
            witness = b.witness;
        }
    }
    debug_assert_eq!(partition_edge_value(m, &witness), minimum);
    Ok(PartitionResult {
        minimum,
        witness,
        enumerated,
    })
}

struct SumBranch {
    best: u64,
    witness: Vec<u8>,
    leaves: u64,
}

fn sum_scan_branch(prefix: &[u8], l: usize, m: usize, classes: u8) -> SumBranch {
    let mut labels = Vec::with_capacity(l);
    let mut running = 0u64;
    let mut used = 0u8;
    for &c in prefix {
        running += window_matches(&labels, c, m);
        labels.push(c);
        used = used.max(c + 1);
    }
    let mut out = SumBranch {
        best: u64::MAX,
        witness: Vec::new(),
        leaves: 0,
    };
    sum_dfs(&mut labels, used, running, l, m, classes, &mut out);
    out
}

fn sum_dfs(
    labels: &mut Vec<u8>,
    used: u8,
    running: u64,
    l: usize,
    m: usize,
    classes: u8,
    out: &mut SumBranch,
) {
    if labels.len() == l {
        out.leaves += 1;
        // Strict improvement keeps the first minimal labeling in scan order.
        if running < out.best {
            out.best = running;
            out.witness = labels.clone();
        }
        return;
    }
    for c in 0..(used + 1).min(classes) {
        let add = window_matches(labels, c, m);
        labels.push(c);
        sum_dfs(labels, used.max(c + 1), running + add, l, m, classes, out);
        labels.pop();
    }
}

/// Minimum over all labelings of the worst per-class value
/// |E(P[V_j])| - f(ell_{k,m})*|V_j|, empty classes contributing zero. Its
/// negation lower-bounds any constant c(m) for which every class of every
/// labeling satisfies |E(P[V_j])| >= f(ell_{k,m})*|V_j| - c(m).
pub fn conjecture_deficit(l: u64, m: u64, k: u32) -> Result<Rational> {
    conjecture_deficit_with(l, m, k, false)
}

/// [`conjecture_deficit`] with the default per-k bound lifted.
pub fn conjecture_deficit_with(l: u64, m: u64, k: u32, override_limits: bool) -> Result<Rational> {
    check_scan_bounds(l, m, k, override_limits)?;
    let f = f_at_int(k, m, ell_argmin(k, m)?)?;
    // Per-class terms compare exactly as den*E_j - num*S_j; the final value
    // carries the common denominator back out.
    let num = f
        .numer()
        .to_i128()
        .ok_or_else(|| Error::resource("f(ell) numerator exceeds the scan's integer range"))?;
    let den = f
        .denom()
        .to_i128()
        .ok_or_else(|| Error::resource("f(ell) denominator exceeds the scan's integer range"))?;
    let classes = (k + 1) as u8;
    let lu = l as usize;
    let mu = m.min(l) as usize;
    let best = canonical_prefixes(lu.min(6), classes)
        .par_iter()
        .map(|prefix| deficit_scan_branch(prefix, lu, mu, classes, num, den))
        .collect::<Vec<i128>>()
        .into_iter()
        .min()
        .expect("at least one prefix");
    Ok(Rational::from_big(BigInt::from(best), BigInt::from(den)))
}

fn deficit_scan_branch(prefix: &[u8], l: usize, m: usize, classes: u8, num: i128, den: i128) -> i128 {
    let mut labels = Vec::with_capacity(l);
    let mut sizes = vec![0u64; classes as usize];
    let mut edges = vec![0u64; classes as usize];
    let mut used = 0u8;
    for &c in prefix {
        edges[c as usize] += window_matches(&labels, c, m);
        sizes[c as usize] += 1;
        labels.push(c);
        used = used.max(c + 1);
    }
    let mut best = i128::MAX;
    deficit_dfs(
        &mut labels,
        used,
        &mut sizes,
        &mut edges,
        l,
        m,
        classes,
        num,
        den,
        &mut best,
    );
    best
}

#[allow(clippy::too_many_arguments)]
fn deficit_dfs(
    labels: &mut Vec<u8>,
    used: u8,
    sizes: &mut [u64],
    edges: &mut [u64],
    l: usize,
    m: usize,
    classes: u8,
    num: i128,
    den: i128,
    best: &mut i128,
) {
    if labels.len() == l {
        let worst = (0..classes as usize)
            .map(|c| den * edges[c] as i128 - num * sizes[c] as i128)
            .max()
            .expect("at least one class");
        *best = (*best).min(worst);
        return;
    }
    for c in 0..(used + 1).min(classes) {
        let add = window_matches(labels, c, m);
        labels.push(c);
        sizes[c as usize] += 1;
        edges[c as usize] += add;
        deficit_dfs(
            labels,
            used.max(c + 1),
            sizes,
            edges,
            l,
            m,
            classes,
            num,
            den,
            best,
        );
        edges[c as usize] -= add;
        sizes[c as usize] -= 1;
        labels.pop();
    }
}
