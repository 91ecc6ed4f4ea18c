//! Backtracking search for the m-th power of a Hamilton cycle.
//!
//! The search fixes vertex 0 in the first slot (rotations are symmetric),
//! extends the partial order only with vertices adjacent to the last
//! min(m, placed) entries, and verifies the cyclic wrap-around at the leaf.
//! A node budget caps the number of placements; running out is reported as
//! an explicit unknown, never as absence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Three-valued search outcome. Serializes with the verdict as a tag and
/// the witness order, when present, beside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "order", rename_all = "snake_case")]
pub enum PowerHamiltonOutcome {
    /// A cyclic vertex order whose every pair at cyclic distance at most m
    /// is an edge of the host graph.
    Found(Vec<u32>),
    /// The search space was exhausted; no such order exists.
    Absent,
    /// The placement budget ran out before the search finished.
    Unknown,
}

/// True iff `order` lists every vertex exactly once and all pairs at cyclic
/// distance at most m are edges of g.
pub fn verify_power_hamilton(g: &Graph, m: u64, order: &[u32]) -> bool {
    let n = g.n() as usize;
    if n == 0 || order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v as usize >= n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    let reach = (m as usize).min(n - 1);
    for i in 0..n {
        for d in 1..=reach {
            if !g.has_edge(order[i], order[(i + d) % n]) {
                return false;
            }
        }
    }
    true
}

/// Searches for the m-th power of a Hamilton cycle in g, spending at most
/// `budget` vertex placements.
pub fn find_power_hamilton(g: &Graph, m: u64, budget: u64) -> Result<PowerHamiltonOutcome> {
    if m == 0 {
        return Err(Error::domain("the power m must be at least 1"));
    }
    let n = g.n();
    if n < 3 {
        return Err(Error::domain(format!(
            "a Hamilton cycle needs at least 3 vertices, got {n}"
        )));
    }
    // Degree screen: in the m-th power of an n-cycle every vertex has degree
    // min(2m, n-1), so a host vertex below that rules the power out.
    let needed = (2 * m).min(u64::from(n) - 1) as usize;
    if (0..n).any(|v| g.degree(v) < needed) {
        return Ok(PowerHamiltonOutcome::Absent);
    }
    let mut order = Vec::with_capacity(n as usize);
    order.push(0u32);
    let mut used = vec![false; n as usize];
    used[0] = true;
    let mut left = budget;
    match extend(g, m as usize, &mut order, &mut used, &mut left) {
        Verdict::Found => {
            debug_assert!(verify_power_hamilton(g, m, &order));
            Ok(PowerHamiltonOutcome::Found(order))
        }
        Verdict::Exhausted => Ok(PowerHamiltonOutcome::Absent),
        Verdict::OutOfBudget => Ok(PowerHamiltonOutcome::Unknown),
    }
}

enum Verdict {
    Found,
    Exhausted,
    OutOfBudget,
}

fn extend(g: &Graph, m: usize, order: &mut Vec<u32>, used: &mut [bool], left: &mut u64) -> Verdict {
    let n = g.n() as usize;
    if order.len() == n {
        if verify_power_hamilton(g, m as u64, order) {
            return Verdict::Found;
        }
        return Verdict::Exhausted;
    }
    let window = order.len().min(m);
    for v in 0..n as u32 {
        if used[v as usize] {
            continue;
        }
        if !order[order.len() - window..]
            .iter()
            .all(|&u| g.has_edge(u, v))
        {
            continue;
        }
        if *left == 0 {
            return Verdict::OutOfBudget;
        }
        *left -= 1;
        order.push(v);
        used[v as usize] = true;
        match extend(g, m, order, used, left) {
            // Undo only on a dead end; a found witness must survive the
            // unwind intact.
            Verdict::Exhausted => {
                used[v as usize] = false;
                order.pop();
            }
            decided => return decided,
        }
    }
    Verdict::Exhausted
}
