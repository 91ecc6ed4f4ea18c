//! Constructors: path/cycle powers, braids, blow-ups.

use crate::error::{Error, Result};
use crate::exact::binom2;

use super::{Graph, MAX_EDGES, MAX_VERTICES};

fn check_edge_budget(e: u64) -> Result<()> {
    if e > MAX_EDGES {
        return Err(Error::resource(format!(
            "edge count {e} exceeds construction cap {MAX_EDGES}"
        )));
    }
    Ok(())
}

/// m-th power of a path: vertices 0..n, edges between indices at distance
/// at most m. Has m*n - binom(m+1,2) edges when n >= m+1, binom(n,2) below.
pub fn power_path(n: u32, m: u64) -> Result<Graph> {
    if n < 1 || m < 1 {
        return Err(Error::domain("power_path requires n >= 1 and m >= 1"));
    }
    let n64 = u64::from(n);
    // Distances are capped by n-1, so m*n - binom(m+1,2) with m clamped
    // covers both regimes (it equals binom(n,2) when m >= n-1) and cannot
    // overflow under the vertex cap.
    let m_eff = m.min(n64 - 1);
    let expected = m_eff * n64 - binom2(m_eff + 1);
    check_edge_budget(expected)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n64 {
        let hi = (u + m).min(n64 - 1);
        for v in (u + 1)..=hi {
            g.push_edge(u as u32, v as u32);
        }
    }
    g.sort_adjacency();
    debug_assert_eq!(g.edge_count(), expected);
    Ok(g)
}

/// m-th power of a cycle: edges between indices at circular distance at
/// most m; requires n >= 2m+1 to stay simple. Has exactly m*n edges.
pub fn power_cycle(n: u32, m: u64) -> Result<Graph> {
    if m < 1 {
        return Err(Error::domain("power_cycle requires m >= 1"));
    }
    let n64 = u64::from(n);
    if u128::from(n64) < 2 * u128::from(m) + 1 {
        return Err(Error::domain(format!(
            "power_cycle degenerate: n = {n} < 2m+1"
        )));
    }
    check_edge_budget(m * n64)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n64 {
        for d in 1..=m {
            let v = (u + d) % n64;
            // Each unordered pair appears once as (u, u+d mod n) with u < v
            // or v < u; push only the orientation with smaller first.
            if u < v {
                g.push_edge(u as u32, v as u32);
            } else {
                g.push_edge(v as u32, u as u32);
            }
        }
    }
    g.sort_adjacency();
    debug_assert_eq!(g.edge_count(), m * n64);
    Ok(g)
}

/// Parameters of a braid B(ell, r, t): t disjoint ell-cliques, consecutive
/// ones joined by an r-bridge (v_i adjacent to u_1..u_i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidSpec {
    ell: u64,
    r: u64,
    t: u64,
}

impl BraidSpec {
    pub fn new(ell: u64, r: u64, t: u64) -> Result<Self> {
        if ell < 2 {
            return Err(Error::domain("braid requires ell >= 2"));
        }
        if r > ell {
            return Err(Error::domain(format!("bridge width r = {r} > ell = {ell}")));
        }
        if t < 1 {
            return Err(Error::domain("braid requires t >= 1"));
        }
        match ell.checked_mul(t) {
            Some(n) if n <= u64::from(MAX_VERTICES) => Ok(BraidSpec { ell, r, t }),
            _ => Err(Error::resource(format!(
                "braid on {ell}*{t} vertices exceeds cap {MAX_VERTICES}"
            ))),
        }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn vertex_count(&self) -> u64 {
        self.t * self.ell
    }

    pub fn edge_count(&self) -> u64 {
        self.t * binom2(self.ell) + (self.t - 1) * binom2(self.r + 1)
    }
}

/// Builds B(ell, r, t). Clique i occupies positions [i*ell, (i+1)*ell); the
/// bridge from clique i takes its last r vertices as v_1..v_r and the first
/// r of clique i+1 as u_1..u_r, with v_j adjacent to u_1..u_j. r = 0 means
/// t disjoint cliques.
pub fn braid(spec: &BraidSpec) -> Result<Graph> {
    let n64 = spec.vertex_count();
    if n64 > u64::from(MAX_VERTICES) {
        return Err(Error::resource(format!(
            "braid on {n64} vertices exceeds cap {MAX_VERTICES}"
        )));
    }
    check_edge_budget(spec.edge_count())?;
    let (ell, r, t) = (spec.ell, spec.r, spec.t);
    let mut g = Graph::empty(n64 as u32)?;
    for i in 0..t {
        let base = i * ell;
        for a in 0..ell {
            for b in (a + 1)..ell {
                g.push_edge((base + a) as u32, (base + b) as u32);
            }
        }
        if i + 1 < t {
            for j in 1..=r {
                let v = base + ell - r + (j - 1);
                for u_idx in 1..=j {
                    let u = base + ell + (u_idx - 1);
                    g.push_edge(v as u32, u as u32);
                }
            }
        }
    }
    g.sort_adjacency();
    debug_assert_eq!(g.edge_count(), spec.edge_count());
    Ok(g)
}

/// ell-blow-up: vertex v becomes the independent class
/// [v*ell, (v+1)*ell), each edge a complete bipartite graph between
/// classes. blow_up(g, 1) is g itself.
pub fn blow_up(g: &Graph, ell: u32) -> Result<Graph> {
    if ell < 1 {
        return Err(Error::domain("blow_up requires ell >= 1"));
    }
    let n = u64::from(g.n()) * u64::from(ell);
    if n > u64::from(MAX_VERTICES) {
        return Err(Error::resource(format!(
            "blow-up on {n} vertices exceeds cap {MAX_VERTICES}"
        )));
    }
    let e = g.edge_count() * u64::from(ell) * u64::from(ell);
    check_edge_budget(e)?;
    let mut out = Graph::empty(n as u32)?;
    let ell = u64::from(ell);
    for (u, v) in g.edges() {
        for i in 0..ell {
            for j in 0..ell {
                let x = u64::from(u) * ell + i;
                let y = u64::from(v) * ell + j;
                out.push_edge(x as u32, y as u32);
            }
        }
    }
    out.sort_adjacency();
    debug_assert_eq!(out.edge_count(), e);
    Ok(out)
}
