//! Graph kernel: power paths/cycles, braids, blow-ups, the edge-partition
//! decomposition, clique counting, and exact maximum subgraph density
//! d_H = e_H / (v_H - 1).

mod build;
mod cliques;
mod decompose;
mod density;
mod io;

pub use build::{blow_up, braid, power_cycle, power_path, BraidSpec};
pub use cliques::clique_count;
pub use decompose::{decompose_power_path, Decomposition};
pub use density::max_density;
pub use io::{format_edge_list, parse_edge_list, parse_index_list};

use crate::error::{Error, Result};

/// Hard cap on vertex count at construction time.
pub const MAX_VERTICES: u32 = 100_000;
/// Hard cap on edge count at construction time.
pub const MAX_EDGES: u64 = 10_000_000;

/// Simple undirected graph with per-vertex sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    e: u64,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: u32) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::resource(format!(
                "vertex count {n} exceeds construction cap {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n as usize],
            e: 0,
        })
    }

    /// Builds from an explicit edge list; every pair must satisfy
    /// u < v < n and appear once.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        if edges.len() as u64 > MAX_EDGES {
            return Err(Error::resource(format!(
                "edge count {} exceeds construction cap {MAX_EDGES}",
                edges.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_new_edge(u, v)?;
            g.push_edge(u, v);
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn check_new_edge(&self, u: u32, v: u32) -> Result<()> {
        if u >= v {
            return Err(Error::domain(format!(
                "edge ({u},{v}) violates u < v (loops and reversed pairs rejected)"
            )));
        }
        if v >= self.n() {
            return Err(Error::domain(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n()
            )));
        }
        if self.adj[u as usize].contains(&v) {
            return Err(Error::domain(format!("duplicate edge ({u},{v})")));
        }
        Ok(())
    }

    /// Inserts without validation; constructors that cannot produce
    /// duplicates use this and sort once at the end.
    pub(crate) fn push_edge(&mut self, u: u32, v: u32) {
        debug_assert!(u < v && (v as usize) < self.adj.len());
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
        self.e += 1;
    }

    pub(crate) fn sort_adjacency(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
    }

    pub fn n(&self) -> u32 {
        self.adj.len() as u32
    }

    pub fn edge_count(&self) -> u64 {
        self.e
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Sorted neighbor list of v.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v
            && (u as usize) < self.adj.len()
            && (v as usize) < self.adj.len()
            && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as (u,v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}
