//! End-to-end zero-statement experiments.
//!
//! Build the dense gadget, overlay a seeded G(n, p), and ask whether the
//! union carries the m-th power of a Hamilton cycle. Small instances get
//! the exact backtracking search. Larger ones get the deletion proxy that
//! mirrors the counting argument: any m+1 consecutive vertices of an m-th
//! power are pairwise adjacent, so some class contributes a within-class
//! clique of size ceil((m+1)/(k+1)); delete W and one vertex from every
//! such clique, and no segment of more than m vertices can survive.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::Graph;
use crate::oracle::{find_power_hamilton, verify_power_hamilton, PowerHamiltonOutcome};

use super::gadget::{posa_gadget, GadgetSpec};
use super::gnp::gnp;

/// Largest n the exact power-Hamilton search is pointed at; beyond it the
/// experiment switches to the deletion proxy.
pub const FULL_SEARCH_VERTICES: u32 = 16;

/// Hard cap on experiment size; the proxy is quadratic-ish in n.
pub const MAX_ZERO_VERTICES: u32 = 1024;

/// Total DFS nodes the clique-hitting phase may spend before giving up.
const CLIQUE_HIT_NODE_CAP: u64 = 50_000_000;

/// What the experiment concluded about the union graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroVerdict {
    /// Witness cyclic order whose m-th power lies inside the union.
    Found { order: Vec<u32> },
    /// Exhaustive search ruled the power out.
    Absent,
    /// The search budget ran out before a decision.
    Unknown,
    /// n too large for the exact search: deletion-proxy metrics instead.
    Proxy(ProxyReport),
}

/// Metrics of the deletion proxy on a large instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProxyReport {
    /// ceil((m+1)/(k+1)): the within-class clique size that any window of
    /// m+1 consecutive vertices of an m-th power forces into some class.
    pub clique_size: u64,
    /// |W|, deleted first.
    pub removed_w: u64,
    /// Vertices deleted afterwards, one per surviving within-class clique.
    pub removed_clique_hits: u64,
    pub survivors: u64,
    /// Longest m-path segment among survivors found by greedy extension
    /// from every start; provably at most m once no forcing clique is left.
    pub greedy_segment: u64,
    /// Within-class edges among survivors, class by class.
    pub class_induced_edges: Vec<u64>,
}

/// Full record of one experiment, inputs echoed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroStatementReport {
    pub k: u32,
    pub m: u64,
    pub n: u32,
    pub p: Rational,
    pub eps: Rational,
    pub seed: u64,
    pub budget: u64,
    pub gadget_edges: u64,
    pub random_edges: u64,
    pub union_edges: u64,
    pub verdict: ZeroVerdict,
}

/// Run one zero-statement experiment on gadget(n, k, eps) union G(n, p).
///
/// Dispatch: n up to [`FULL_SEARCH_VERTICES`] gets the exact backtracking
/// search under `budget` (exhaustion reports `Unknown`, never `Absent`).
/// Larger n with m <= k is decided affirmatively by the round-robin order,
/// whose windows never need a within-class edge. Everything else gets the
/// deletion proxy.
pub fn zero_statement_experiment(
    k: u32,
    m: u64,
    n: u32,
    p: &Rational,
    eps: &Rational,
    seed: u64,
    budget: u64,
) -> Result<ZeroStatementReport> {
    if m == 0 {
        return Err(Error::domain("power order m must be >= 1"));
    }
    if n < 3 {
        return Err(Error::domain("a Hamilton cycle needs at least 3 vertices"));
    }
    if n > MAX_ZERO_VERTICES {
        return Err(Error::resource(format!(
            "zero-statement experiments stop at {MAX_ZERO_VERTICES} vertices, got {n}"
        )));
    }
    let spec = GadgetSpec::new(n, k, eps.clone())?;
    let gadget = posa_gadget(&spec)?;
    let random = gnp(n, p, seed)?;
    let union = union_graphs(&gadget, &random)?;

    let verdict = if n <= FULL_SEARCH_VERTICES {
        match find_power_hamilton(&union, m, budget)? {
            PowerHamiltonOutcome::Found(order) => ZeroVerdict::Found { order },
            PowerHamiltonOutcome::Absent => ZeroVerdict::Absent,
            PowerHamiltonOutcome::Unknown => ZeroVerdict::Unknown,
        }
    } else if m <= u64::from(k) {
        // Round-robin through the classes: any m+1 <= k+1 consecutive
        // vertices land in pairwise distinct classes, so every edge the
        // power needs is a cross edge the gadget already has.
        let order = round_robin_order(&spec);
        if !verify_power_hamilton(&union, m, &order) {
            return Err(Error::internal(
                "round-robin certificate failed verification",
            ));
        }
        ZeroVerdict::Found { order }
    } else {
        ZeroVerdict::Proxy(proxy_metrics(&spec, &union, m)?)
    };

    Ok(ZeroStatementReport {
        k,
        m,
        n,
        p: p.clone(),
        eps: eps.clone(),
        seed,
        budget,
        gadget_edges: gadget.edge_count(),
        random_edges: random.edge_count(),
        union_edges: union.edge_count(),
        verdict,
    })
}

/// Union of two graphs on the same vertex set.
fn union_graphs(a: &Graph, b: &Graph) -> Result<Graph> {
    debug_assert_eq!(a.n(), b.n());
    let edges: BTreeSet<(u32, u32)> = a.edges().chain(b.edges()).collect();
    let edges: Vec<(u32, u32)> = edges.into_iter().collect();
    Graph::from_edges(a.n(), &edges)
}

/// Visit classes 0, 1, ..., k, 0, 1, ... so that position q holds a vertex
/// of class q mod (k+1).
fn round_robin_order(spec: &GadgetSpec) -> Vec<u32> {
    let c = spec.class_size();
    let mut order = Vec::with_capacity(spec.n() as usize);
    for j in 0..c {
        for i in 0..spec.class_count() {
            order.push(i * c + j);
        }
    }
    order
}

/// Delete W, hit every surviving within-class clique of the forcing size,
/// then measure what is left.
fn proxy_metrics(spec: &GadgetSpec, union: &Graph, m: u64) -> Result<ProxyReport> {
    let k = u64::from(spec.k());
    let clique_size = (m + k + 1) / (k + 1); // ceil((m+1)/(k+1))
    debug_assert!(clique_size >= 2, "proxy only runs for m > k");

    let mut alive = vec![true; spec.n() as usize];
    let mut removed_w = 0u64;
    for v in 0..spec.n() {
        if spec.in_w(v) {
            alive[v as usize] = false;
            removed_w += 1;
        }
    }

    let mut removed_clique_hits = 0u64;
    let mut nodes_left = CLIQUE_HIT_NODE_CAP;
    while let Some(clique) =
        first_within_class_clique(spec, union, &alive, clique_size, &mut nodes_left)?
    {
        // one vertex per copy: drop the largest, keep searching
        alive[*clique.last().expect("cliques are nonempty") as usize] = false;
        removed_clique_hits += 1;
    }

    let survivors = alive.iter().filter(|&&a| a).count() as u64;
    let greedy_segment = greedy_longest_segment(union, &alive, m);

    let mut class_induced_edges = vec![0u64; spec.class_count() as usize];
    for (u, v) in union.edges() {
        if alive[u as usize] && alive[v as usize] && spec.class_of(u) == spec.class_of(v) {
            class_induced_edges[spec.class_of(u) as usize] += 1;
        }
    }

    Ok(ProxyReport {
        clique_size,
        removed_w,
        removed_clique_hits,
        survivors,
        greedy_segment,
        class_induced_edges,
    })
}

/// Lexicographically first clique of `size` surviving vertices inside a
/// single class, scanning classes in order. `None` once no class has one.
fn first_within_class_clique(
    spec: &GadgetSpec,
    g: &Graph,
    alive: &[bool],
    size: u64,
    nodes_left: &mut u64,
) -> Result<Option<Vec<u32>>> {
    let Ok(size) = usize::try_from(size) else {
        return Ok(None); // larger than any class, so no copies exist
    };
    for class in 0..spec.class_count() {
        let members: Vec<u32> = (class * spec.class_size()..(class + 1) * spec.class_size())
            .filter(|&v| alive[v as usize])
            .collect();
        if members.len() < size {
            continue;
        }
        let mut chosen = Vec::with_capacity(size);
        if let Some(clique) = extend_clique(g, &mut chosen, &members, size, nodes_left)? {
            return Ok(Some(clique));
        }
    }
    Ok(None)
}

/// Depth-first lexicographic clique extension over an ascending candidate
/// list; every candidate inspected costs one node of the shared budget.
fn extend_clique(
    g: &Graph,
    chosen: &mut Vec<u32>,
    candidates: &[u32],
    size: usize,
    nodes_left: &mut u64,
) -> Result<Option<Vec<u32>>> {
    if chosen.len() == size {
        return Ok(Some(chosen.clone()));
    }
    let need = size - chosen.len();
    if candidates.len() < need {
        return Ok(None);
    }
    for (i, &v) in candidates.iter().enumerate() {
        if *nodes_left == 0 {
            return Err(Error::resource(
                "clique hitting exceeded its search budget; the instance is \
                 denser than desk scale",
            ));
        }
        *nodes_left -= 1;
        chosen.push(v);
        let narrowed: Vec<u32> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        if let Some(clique) = extend_clique(g, chosen, &narrowed, size, nodes_left)? {
            return Ok(Some(clique));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Longest m-path segment among surviving vertices that greedy extension
/// finds: from every alive start, repeatedly append the smallest vertex
/// adjacent to the whole trailing window of min(m, length) vertices.
fn greedy_longest_segment(g: &Graph, alive: &[bool], m: u64) -> u64 {
    let n = g.n() as usize;
    let words = n.div_ceil(64);
    let mut nbr = vec![vec![0u64; words]; n];
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        for &w in g.neighbors(v as u32) {
            let w = w as usize;
            if alive[w] {
                nbr[v][w / 64] |= 1 << (w % 64);
            }
        }
    }
    let mut best = 0u64;
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for start in 0..n {
        if !alive[start] {
            continue;
        }
        path.clear();
        path.push(start);
        let mut used = vec![0u64; words];
        used[start / 64] |= 1 << (start % 64);
        loop {
            let window = path.len().min(m as usize);
            let mut cand = nbr[path[path.len() - 1]].clone();
            for &q in &path[path.len() - window..path.len() - 1] {
                for (c, w) in cand.iter_mut().zip(&nbr[q]) {
                    *c &= w;
                }
            }
            for (c, u) in cand.iter_mut().zip(&used) {
                *c &= !u;
            }
            let Some(next) = lowest_set(&cand) else { break };
            used[next / 64] |= 1 << (next % 64);
            path.push(next);
        }
        best = best.max(path.len() as u64);
    }
    best
}

fn lowest_set(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}
