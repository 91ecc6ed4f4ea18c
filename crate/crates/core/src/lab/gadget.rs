//! The dense deterministic host graph of the augmentation experiments.
//!
//! Vertices split into k+1 equal classes U_0, ..., U_k (consecutive blocks).
//! All cross-class pairs are edges; inside each class, a small set W_i (the
//! first `w_size` vertices of the block) is joined completely to the rest of
//! the class and nothing else. The W-side pushes every degree past
//! k/(k+1) * n while keeping within-class cliques tiny, which is the whole
//! point of the construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::Graph;

/// Construction cap: the gadget is dense, so this matches the sampler cap.
pub const MAX_GADGET_VERTICES: u32 = 4096;

/// Validated shape of a gadget: class count, class size, and the size of
/// each class's completely-joined subset W_i.
///
/// Deserialization exists only to re-read emitted reports; `new` is the
/// sole validating constructor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetSpec {
    n: u32,
    k: u32,
    eps: Rational,
    class_size: u32,
    w_size: u32,
}

impl GadgetSpec {
    /// Validate and derive the class structure.
    ///
    /// Requirements: k >= 1; n a positive multiple of k+1; 0 < eps < 1/(k+1)
    /// exactly; and 2 * ceil(eps * n) <= class_size + 1. The last condition
    /// keeps W_i the minority of its class, and it is precisely what the
    /// promised minimum degree needs: a W-vertex reaches n - w_size others,
    /// and n - w_size >= ceil((k/(k+1) + eps) * n) - 1 iff
    /// 2 * w_size <= class_size + 1.
    pub fn new(n: u32, k: u32, eps: Rational) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("gadget needs k >= 1"));
        }
        let classes = u64::from(k) + 1;
        if n == 0 || u64::from(n) % classes != 0 {
            return Err(Error::domain(format!(
                "vertex count {n} must be a positive multiple of k + 1 = {classes}"
            )));
        }
        let upper = Rational::from_big(1.into(), classes.into());
        if !eps.is_positive() || eps >= upper {
            return Err(Error::domain(format!(
                "eps = {eps} must lie strictly between 0 and 1/(k+1) = {upper}"
            )));
        }
        let class_size = (u64::from(n) / classes) as u32;
        let w_size: u32 = (eps.clone() * Rational::from_u64(u64::from(n)))
            .ceil_int()
            .try_into()
            .map_err(|_| Error::internal("w_size does not fit the vertex type"))?;
        if 2 * u64::from(w_size) > u64::from(class_size) + 1 {
            return Err(Error::domain(format!(
                "w_size = ceil(eps * n) = {w_size} overfills a class of {class_size}: \
                 the minimum-degree guarantee needs 2 * w_size <= class_size + 1"
            )));
        }
        Ok(GadgetSpec {
            n,
            k,
            eps,
            class_size,
            w_size,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    /// Number of classes, k + 1.
    pub fn class_count(&self) -> u32 {
        self.k + 1
    }

    pub fn class_size(&self) -> u32 {
        self.class_size
    }

    pub fn w_size(&self) -> u32 {
        self.w_size
    }

    /// Class index of a vertex (classes are consecutive blocks).
    pub fn class_of(&self, v: u32) -> u32 {
        debug_assert!(v < self.n);
        v / self.class_size
    }

    /// Whether a vertex belongs to its class's completely-joined subset.
    pub fn in_w(&self, v: u32) -> bool {
        debug_assert!(v < self.n);
        v % self.class_size < self.w_size
    }

    /// All W-vertices, ascending.
    pub fn w_vertices(&self) -> Vec<u32> {
        (0..self.n).filter(|&v| self.in_w(v)).collect()
    }

    /// The promised minimum degree, ceil((k/(k+1) + eps) * n) - 1.
    ///
    /// (k/(k+1)) * n = n - class_size is an integer, so the ceiling is
    /// n - class_size + ceil(eps * n) = n - class_size + w_size exactly.
    pub fn required_min_degree(&self) -> u64 {
        u64::from(self.n) - u64::from(self.class_size) + u64::from(self.w_size) - 1
    }
}

/// Build the gadget graph for a validated spec.
///
/// Edges: every cross-class pair, plus the complete bipartite graph between
/// W_i and U_i minus W_i inside each class. The minimum-degree promise is
/// checked vertex by vertex after construction; a miss would be a bug, not
/// bad input, since the spec validated the arithmetic already.
pub fn posa_gadget(spec: &GadgetSpec) -> Result<Graph> {
    let n = spec.n();
    if n > MAX_GADGET_VERTICES {
        return Err(Error::resource(format!(
            "gadget construction stops at {MAX_GADGET_VERTICES} vertices, got {n}"
        )));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            let cross = spec.class_of(u) != spec.class_of(v);
            let within = !cross && (spec.in_w(u) != spec.in_w(v));
            if cross || within {
                g.push_edge(u, v);
            }
        }
    }
    g.sort_adjacency();
    let required = spec.required_min_degree();
    for v in 0..n {
        let d = g.degree(v) as u64;
        if d < required {
            return Err(Error::internal(format!(
                "gadget degree {d} at vertex {v} under the guaranteed minimum {required}"
            )));
        }
    }
    Ok(g)
}
