//! Exact clique counting by ordered candidate-set intersection.

use crate::error::{Error, Result};

use super::Graph;

/// Number of s-vertex cliques. Enumeration follows the vertex order, so
/// each clique is counted once; candidate sets stay sorted and shrink by
/// intersection with later neighborhoods. Intended for desk scale
/// (n on the order of hundreds, s <= 8).
pub fn clique_count(g: &Graph, s: u32) -> Result<u64> {
    if s < 1 {
        return Err(Error::domain("clique_count requires s >= 1"));
    }
    match s {
        1 => Ok(u64::from(g.n())),
        2 => Ok(g.edge_count()),
        _ => {
            let mut total = 0u64;
            for v in 0..g.n() {
                let later: Vec<u32> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| w > v)
                    .collect();
                total = total
                    .checked_add(count_in(g, &later, s - 1)?)
                    .ok_or_else(|| Error::resource("clique count exceeds u64"))?;
            }
            Ok(total)
        }
    }
}

fn count_in(g: &Graph, cand: &[u32], s: u32) -> Result<u64> {
    if s == 1 {
        return Ok(cand.len() as u64);
    }
    if (cand.len() as u64) < u64::from(s) {
        return Ok(0);
    }
    let mut total = 0u64;
    for (i, &v) in cand.iter().enumerate() {
        let rest = intersect_sorted(&cand[i + 1..], g.neighbors(v));
        total = total
            .checked_add(count_in(g, &rest, s - 1)?)
            .ok_or_else(|| Error::resource("clique count exceeds u64"))?;
    }
    Ok(total)
}

/// Intersection of two strictly increasing u32 slices.
fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
