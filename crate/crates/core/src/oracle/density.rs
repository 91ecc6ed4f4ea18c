//! Exhaustive maximum subgraph density by scanning connected vertex subsets.
//!
//! The target quantity is max over subgraphs H (at least two vertices) of
//! e_H / (v_H - 1). For a fixed vertex set the induced subgraph maximizes
//! the numerator, and a disconnected H is always beaten by one of its
//! components (splitting removes whole units from the denominator), so
//! scanning connected induced subgraphs is exhaustive.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::Graph;

/// Default subset-scan bound.
pub const DEFAULT_DENSITY_SCAN_VERTICES: u32 = 14;
/// Bound with limits overridden; 2^20 subsets is where the scan stops being
/// a desk-scale tool.
pub const MAX_DENSITY_SCAN_VERTICES: u32 = 20;

/// Exact maximum of e_H/(v_H - 1) over all subgraphs, by full enumeration.
/// Independent oracle for `graph::max_density`.
pub fn exhaustive_density(g: &Graph) -> Result<Rational> {
    exhaustive_density_with(g, false)
}

/// [`exhaustive_density`] with the default vertex bound lifted to the
/// absolute one.
pub fn exhaustive_density_with(g: &Graph, override_limits: bool) -> Result<Rational> {
    let n = g.n();
    if n < 2 {
        return Err(Error::domain(
            "exhaustive_density requires at least 2 vertices",
        ));
    }
    if g.edge_count() == 0 {
        return Err(Error::domain("exhaustive_density requires at least 1 edge"));
    }
    let cap = if override_limits {
        MAX_DENSITY_SCAN_VERTICES
    } else {
        DEFAULT_DENSITY_SCAN_VERTICES
    };
    if n > cap {
        return Err(Error::resource(format!(
            "subset scan capped at {cap} vertices, got {n}"
        )));
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    // Running best e/(v-1) as a cross-multiplied integer pair; the graph has
    // an edge, so the scan always beats the 0/1 starting value.
    let mut best: (u64, u64) = (0, 1);
    for s in 1u32..(1u32 << n) {
        let size = s.count_ones();
        if size < 2 || !connected(&masks, s) {
            continue;
        }
        let mut twice_e = 0u32;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            twice_e += (masks[v] & s).count_ones();
            rest &= rest - 1;
        }
        let cand = (u64::from(twice_e / 2), u64::from(size - 1));
        if cand.0 * best.1 > best.0 * cand.1 {
            best = cand;
        }
    }
    Ok(Rational::new(best.0 as i64, best.1 as i64).expect("positive denominator"))
}

/// Breadth-first reachability on bitmask subsets.
fn connected(masks: &[u32], s: u32) -> bool {
    let mut reach = 1u32 << s.trailing_zeros();
    let mut frontier = reach;
    while frontier != 0 {
        let mut acc = 0u32;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            acc |= masks[v];
            rest &= rest - 1;
        }
        frontier = acc & s & !reach;
        reach |= frontier;
    }
    reach == s
}
