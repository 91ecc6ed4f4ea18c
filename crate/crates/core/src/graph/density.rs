//! Exact maximum subgraph density max_H e_H/(v_H - 1).
//!
//! The decision "is there H with e_H/(v_H - 1) > gamma" reduces, for
//! gamma = p/q, to an s-t min-cut on the standard density network with one
//! anchor vertex forced into H (the maximizer is connected, so some anchor
//! works). Binary search shrinks an interval around the optimum until it
//! contains a single rational with denominator < n, which a Stern-Brocot
//! walk then extracts exactly. No floating point is involved.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::Graph;

/// Density solving is capped well below the construction cap.
pub const MAX_DENSITY_VERTICES: u32 = 1_000;

const INF: u128 = u128::MAX >> 2;

pub fn max_density(g: &Graph) -> Result<Rational> {
    let n = g.n();
    if n < 2 {
        return Err(Error::domain("max_density requires at least 2 vertices"));
    }
    if g.edge_count() == 0 {
        return Err(Error::domain("max_density requires at least 1 edge"));
    }
    if n > MAX_DENSITY_VERTICES {
        return Err(Error::resource(format!(
            "density solving capped at {MAX_DENSITY_VERTICES} vertices, got {n}"
        )));
    }
    let edges: Vec<(u32, u32)> = g.edges().collect();

    // Invariant: decision(lo) holds, decision(hi) fails. The optimum is a
    // rational in (lo, hi] with denominator <= n-1; once the interval is
    // narrower than 1/(n-1)^2 it contains exactly one such rational.
    let mut lo = Rational::zero();
    let mut hi = Rational::from_u64(u64::from(n)) / Rational::from_u64(2);
    debug_assert!(decision(n, &edges, &lo));
    let gap = Rational::one() / Rational::from_u64(u64::from(n - 1)).square();
    while (&hi - &lo).cmp(&gap) != std::cmp::Ordering::Less {
        let mid = (&lo + &hi) / Rational::from_u64(2);
        if decision(n, &edges, &mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(simplest_in(&lo, true, Some(&hi), false))
}

/// True iff some subgraph H (|H| >= 2) has e_H/(v_H - 1) > gamma.
fn decision(n: u32, edges: &[(u32, u32)], gamma: &Rational) -> bool {
    let p = big_to_u128(gamma.numer());
    let q = big_to_u128(gamma.denom());
    let e_total = edges.len() as u128;
    // Every anchored min-cut is at most q*e_total (cut all edge arcs);
    // strict improvement witnesses q*e_H - p*(|H|-1) > 0 for some H
    // containing the anchor.
    (0..n)
        .into_par_iter()
        .find_any(|&anchor| anchored_min_cut(n, edges, p, q, anchor) < q * e_total)
        .is_some()
}

/// Min cut of the density-decision network with `anchor` forced into H:
/// source -> edge node (cap q), edge node -> endpoints (inf),
/// vertex -> sink (cap p) except the anchor, source -> anchor (inf).
/// Equals min over H containing anchor of q*(e_total - e_H) + p*(|H|-1).
fn anchored_min_cut(n: u32, edges: &[(u32, u32)], p: u128, q: u128, anchor: u32) -> u128 {
    let n = n as usize;
    let mut net = Dinic::new(2 + n + edges.len());
    let s = 0;
    let t = 1;
    let vnode = |v: u32| 2 + v as usize;
    for (j, &(u, v)) in edges.iter().enumerate() {
        let enode = 2 + n + j;
        net.add_edge(s, enode, q);
        net.add_edge(enode, vnode(u), INF);
        net.add_edge(enode, vnode(v), INF);
    }
    for v in 0..n as u32 {
        if v != anchor {
            net.add_edge(vnode(v), t, p);
        }
    }
    net.add_edge(s, vnode(anchor), INF);
    net.max_flow(s, t)
}

fn big_to_u128(v: &num_bigint::BigInt) -> u128 {
    v.to_u128()
        .expect("density search keeps numerators and denominators within u128")
}

/// Smallest-denominator rational within the interval, bounds included or
/// excluded per the flags; `hi = None` means unbounded above. Standard
/// continued-fraction descent on nonnegative bounds.
fn simplest_in(lo: &Rational, lo_strict: bool, hi: Option<&Rational>, hi_strict: bool) -> Rational {
    debug_assert!(!lo.is_negative());
    let c = if lo.is_integer() {
        if lo_strict {
            lo.floor_int() + 1
        } else {
            lo.floor_int()
        }
    } else {
        lo.ceil_int()
    };
    let c = Rational::from_int(c);
    let upper_ok = match hi {
        None => true,
        Some(h) => match c.cmp(h) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => !hi_strict,
            std::cmp::Ordering::Greater => false,
        },
    };
    if upper_ok {
        return c;
    }
    // No integer fits, so floor(lo) = floor(hi) and both bounds sit in the
    // same unit interval; shift to (0,1) and invert.
    let h = hi.expect("unbounded interval always admits an integer");
    let i = Rational::from_int(lo.floor_int());
    let lo2 = lo - &i;
    let hi2 = h - &i;
    let inv_hi = hi2.recip().expect("hi2 > lo2 >= 0");
    let inner = if lo2.is_zero() {
        simplest_in(&inv_hi, hi_strict, None, true)
    } else {
        let inv_lo = lo2.recip().expect("nonzero");
        simplest_in(&inv_hi, hi_strict, Some(&inv_lo), lo_strict)
    };
    i + inner.recip().expect("inner bounds exclude zero")
}

/// Dinic max-flow with u128 capacities; arc i pairs with its reverse i^1.
struct Dinic {
    to: Vec<u32>,
    cap: Vec<u128>,
    head: Vec<Vec<u32>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: u128) {
        let id = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(c);
        self.to.push(u as u32);
        self.cap.push(0);
        self.head[u].push(id);
        self.head[v].push(id + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        const UNSEEN: u32 = u32::MAX;
        self.level.fill(UNSEEN);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let v = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && self.level[v] == UNSEEN {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != UNSEEN
    }

    fn dfs(&mut self, u: usize, t: usize, limit: u128) -> u128 {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.head[u].len() {
            let id = self.head[u][self.iter[u]] as usize;
            let v = self.to[id] as usize;
            if self.cap[id] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[id]));
                if pushed > 0 {
                    self.cap[id] -= pushed;
                    self.cap[id ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u128 {
        let mut flow = 0u128;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(s, t, INF);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, braid, power_path, BraidSpec};

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn cliques_hit_half_ell() {
        for ell in 2..=8u32 {
            let g = power_path(ell, u64::from(ell)).unwrap(); // complete
            assert_eq!(
                max_density(&g).unwrap(),
                Rational::from_u64(u64::from(ell)) / Rational::from_u64(2)
            );
        }
    }

    #[test]
    fn braid_cases() {
        // ell >= r(r+1): clique term dominates, density = ell/2.
        let g = braid(&BraidSpec::new(4, 1, 3).unwrap()).unwrap();
        assert_eq!(max_density(&g).unwrap(), rat("2"));
        // ell < r(r+1): the whole braid is the densest subgraph.
        let g = braid(&BraidSpec::new(3, 2, 3).unwrap()).unwrap();
        assert_eq!(max_density(&g).unwrap(), rat("15/8"));
    }

    #[test]
    fn sparse_graphs() {
        // Trees have density 1 (any subtree: e = v-1).
        let path = power_path(7, 1).unwrap();
        assert_eq!(max_density(&path).unwrap(), rat("1"));
        // A single edge.
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(max_density(&k2).unwrap(), rat("1"));
    }

    #[test]
    fn disjoint_union_takes_max_part() {
        // K_4 plus an isolated triangle: densest part is K_4 at 2.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, 5), (4, 6), (5, 6)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        assert_eq!(max_density(&g).unwrap(), rat("2"));
    }

    #[test]
    fn blow_up_density() {
        // K_{3,3}: e=9, v=6, the full graph is densest: 9/5.
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = blow_up(&k2, 3).unwrap();
        assert_eq!(max_density(&g).unwrap(), rat("9/5"));
    }

    #[test]
    fn rejects_degenerate() {
        assert!(max_density(&Graph::empty(5).unwrap()).is_err());
        assert!(max_density(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn simplest_in_unit_cases() {
        let s = |a: &str, b: &str| simplest_in(&rat(a), true, Some(&rat(b)), false);
        assert_eq!(s("0", "1/2"), rat("1/2"));
        assert_eq!(s("2/3", "3/4"), rat("3/4"));
        assert_eq!(s("1/3", "2/3"), rat("1/2"));
        // (1.875, 1.9375]: denominators 2..8 all miss, 17/9 is first.
        assert_eq!(s("15/8", "31/16"), rat("17/9"));
        assert_eq!(s("3", "7/2"), rat("7/2"));
    }
}
