//! Edge partition of a power path into a blow-up part and braid copies.
//!
//! With m = k*ell + r and n = (k+1)*t*ell, the edges of P_n^m split into
//! (a) the trace on P_n^m of the ell-blow-up of P_{(k+1)t}^k taken over
//! consecutive ell-blocks, and (b) k+1 vertex-disjoint copies of the braid
//! B(ell, r, t), one per block-residue class mod k+1. Blow-up pairs
//! that stretch beyond distance m (possible only when r < ell-1) are not
//! power-path edges and are counted separately instead of included.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{power_path, Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub k: u32,
    pub ell: u64,
    pub r: u64,
    pub t: u64,
    /// Number of vertices (k+1)*t*ell of the host power path.
    pub n: u32,
    /// Power m = k*ell + r of the host path.
    pub m: u64,
    /// Blow-up edges at distance <= m, sorted.
    pub blowup_edges: Vec<(u32, u32)>,
    /// k+1 braid copies, one per block-residue class, each sorted.
    pub braid_edge_sets: Vec<Vec<(u32, u32)>>,
    /// Blow-up pairs at distance > m; zero exactly when r >= ell-1.
    pub omitted_blowup_pairs: u64,
    /// True iff the returned sets are disjoint and union to E(P_n^m).
    pub verified: bool,
}

/// Builds the decomposition for (k, ell, r, t); requires 1 <= r <= ell,
/// ell >= 2. `verified` is recomputed from the returned edge sets, not
/// assumed.
pub fn decompose_power_path(k: u32, ell: u64, r: u64, t: u64) -> Result<Decomposition> {
    if k < 1 {
        return Err(Error::domain("decomposition requires k >= 1"));
    }
    if ell < 2 {
        return Err(Error::domain("decomposition requires ell >= 2"));
    }
    if r < 1 || r > ell {
        return Err(Error::domain(format!(
            "decomposition requires 1 <= r <= ell, got r = {r}, ell = {ell}"
        )));
    }
    if t < 1 {
        return Err(Error::domain("decomposition requires t >= 1"));
    }
    let blocks = u64::from(k + 1) * t;
    let n = blocks
        .checked_mul(ell)
        .filter(|&n| n <= u64::from(MAX_VERTICES))
        .ok_or_else(|| {
            Error::resource(format!(
                "decomposition on (k+1)*t*ell = {}*{t}*{ell} vertices exceeds cap {MAX_VERTICES}",
                k + 1
            ))
        })?;
    let m = u64::from(k) * ell + r;

    // (a) Blow-up trace: complete bipartite pairs between ell-blocks at
    // block distance 1..k, filtered to path-power distance <= m.
    let mut blowup_edges = Vec::new();
    let mut omitted = 0u64;
    for b in 0..blocks {
        for d in 1..=u64::from(k) {
            let b2 = b + d;
            if b2 >= blocks {
                break;
            }
            for x in (b * ell)..((b + 1) * ell) {
                for y in (b2 * ell)..((b2 + 1) * ell) {
                    if y - x <= m {
                        blowup_edges.push((x as u32, y as u32));
                    } else {
                        omitted += 1;
                    }
                }
            }
        }
    }
    blowup_edges.sort_unstable();

    // (b) Braid copies: residue class c uses blocks c, c+(k+1), ... Cliques
    // fill each block; the r-bridge joins the last r vertices of a block to
    // the first r of the next block in its class, v_j to u_1..u_j.
    let mut braid_edge_sets = Vec::with_capacity(k as usize + 1);
    for c in 0..=u64::from(k) {
        let mut set = Vec::new();
        for i in 0..t {
            let base = (c + i * u64::from(k + 1)) * ell;
            for a in 0..ell {
                for b in (a + 1)..ell {
                    set.push(((base + a) as u32, (base + b) as u32));
                }
            }
            if i + 1 < t {
                let next = (c + (i + 1) * u64::from(k + 1)) * ell;
                for j in 1..=r {
                    let v = base + ell - r + (j - 1);
                    for u_idx in 1..=j {
                        set.push((v as u32, (next + u_idx - 1) as u32));
                    }
                }
            }
        }
        set.sort_unstable();
        braid_edge_sets.push(set);
    }

    let verified = verify(n as u32, m, &blowup_edges, &braid_edge_sets)?;
    Ok(Decomposition {
        k,
        ell,
        r,
        t,
        n: n as u32,
        m,
        blowup_edges,
        braid_edge_sets,
        omitted_blowup_pairs: omitted,
        verified,
    })
}

/// Disjointness plus exact cover of E(P_n^m), recomputed from scratch.
fn verify(n: u32, m: u64, blowup: &[(u32, u32)], braids: &[Vec<(u32, u32)>]) -> Result<bool> {
    let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &e in blowup.iter().chain(braids.iter().flatten()) {
        if !seen.insert(e) {
            return Ok(false);
        }
    }
    let host: Graph = power_path(n, m)?;
    if seen.len() as u64 != host.edge_count() {
        return Ok(false);
    }
    let covered = host.edges().all(|e| seen.contains(&e));
    Ok(covered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{braid, BraidSpec};

    #[test]
    fn figure_instance_k2() {
        // 8-path on 18 vertices: 81 blow-up edges + 3 braids of 9.
        let d = decompose_power_path(2, 3, 2, 2).unwrap();
        assert_eq!((d.n, d.m), (18, 8));
        assert_eq!(d.blowup_edges.len(), 81);
        assert_eq!(d.braid_edge_sets.len(), 3);
        assert!(d.braid_edge_sets.iter().all(|s| s.len() == 9));
        assert_eq!(d.omitted_blowup_pairs, 0, "r = ell-1 keeps every pair");
        assert!(d.verified);
        assert_eq!(81 + 3 * 9, 108);
    }

    #[test]
    fn k1_small_instance() {
        let d = decompose_power_path(1, 2, 1, 2).unwrap();
        assert_eq!((d.n, d.m), (8, 3));
        assert!(d.verified);
        assert_eq!(
            d.blowup_edges.len() + d.braid_edge_sets.iter().map(Vec::len).sum::<usize>(),
            18
        );
    }

    #[test]
    fn t1_degenerate_braids_are_cliques() {
        let d = decompose_power_path(2, 3, 2, 1).unwrap();
        assert_eq!((d.n, d.m), (9, 8));
        assert!(d.verified);
        for set in &d.braid_edge_sets {
            assert_eq!(set.len(), 3, "bare triangle per class");
        }
    }

    #[test]
    fn omitted_pairs_appear_when_r_small() {
        // r = 1 < ell-1 = 2: blow-up pairs at distance m+1..k*ell+ell-1 drop.
        let d = decompose_power_path(1, 3, 1, 2).unwrap();
        assert!(d.omitted_blowup_pairs > 0);
        assert!(d.verified, "trace + braids still partition the power path");
    }

    #[test]
    fn braid_sets_match_braid_constructor() {
        let d = decompose_power_path(2, 3, 2, 2).unwrap();
        let reference = braid(&BraidSpec::new(3, 2, 2).unwrap()).unwrap();
        // Each copy, relabeled through its vertex embedding, is B(ell,r,t).
        for (c, set) in d.braid_edge_sets.iter().enumerate() {
            let mut verts: Vec<u32> = set.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            let index = |x: u32| verts.binary_search(&x).unwrap() as u32;
            let mut mapped: Vec<(u32, u32)> = set.iter().map(|&(u, v)| (index(u), index(v))).collect();
            mapped.sort_unstable();
            let mut expect: Vec<(u32, u32)> = reference.edges().collect();
            expect.sort_unstable();
            assert_eq!(mapped, expect, "copy {c}");
        }
    }

    #[test]
    fn grid_verified() {
        for k in 1..=3u32 {
            for ell in 2..=4u64 {
                for r in 1..=ell {
                    for t in 1..=4u64 {
                        let d = decompose_power_path(k, ell, r, t).unwrap();
                        assert!(d.verified, "(k,ell,r,t)=({k},{ell},{r},{t})");
                        assert_eq!(d.omitted_blowup_pairs == 0, r >= ell - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(decompose_power_path(0, 3, 2, 2).is_err());
        assert!(decompose_power_path(2, 3, 0, 2).is_err());
        assert!(decompose_power_path(2, 3, 4, 2).is_err());
        assert!(decompose_power_path(2, 1, 1, 2).is_err());
        assert!(decompose_power_path(2, 3, 2, 0).is_err());
    }
}
