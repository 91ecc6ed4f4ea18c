//! Wire types for the JSON reports this binary emits itself (most
//! subcommands reuse a library record directly). Every report re-parses
//! into its emitting type; rationals and surds stay strings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use hampow_core::exact::Rational;
use hampow_core::oracle::PowerHamiltonOutcome;

/// Row of `pell`. The solution components grow without bound, so they
/// are emitted as decimal strings rather than machine integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellRow {
    pub p: String,
    pub q: String,
    pub m: String,
}

/// Report of `rewire`: the permuted order with the run/gap profile of
/// its marked set, plus validity and telemetry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewireReport {
    pub m: u64,
    pub order: Vec<u32>,
    /// Marked run sizes x_1..x_q in the output order.
    pub x: Vec<u64>,
    /// Interior gap sizes y_1..y_{q-1} in the output order.
    pub y: Vec<u64>,
    /// Certificate verdict: edge count did not increase and all four
    /// balance conditions hold.
    pub valid: bool,
    /// Largest y_i / x_i; exploratory telemetry, no claim attached.
    pub max_gap_to_run_ratio: Rational,
    /// Numbered-step entries the sweep took.
    pub steps: u64,
    /// Audit certificate {before, after, conds, x, y}, on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

/// Report of `far-min`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarMinReport {
    pub k: u32,
    pub m: u64,
    pub s: u32,
    pub i: u32,
    pub minimum: u64,
}

/// Report of `oracle min-partition`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinPartitionReport {
    #[serde(rename = "L")]
    pub l: u64,
    pub m: u64,
    pub k: u32,
    /// Least total within-class edge count over all labelings.
    pub minimum: u64,
    /// First canonical labeling attaining it.
    pub witness: Vec<u8>,
    /// Canonical labelings examined.
    pub enumerated: u64,
}

/// Report of `graph density` and `oracle density`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub n: u32,
    pub e: u64,
    pub density: Rational,
}

/// Report of `graph cliques`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCountReport {
    pub n: u32,
    pub e: u64,
    pub s: u32,
    pub count: u64,
}

/// Report of `oracle ham-power`; the outcome flattens to a "verdict"
/// tag with the witness order beside it when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamPowerReport {
    pub n: u32,
    pub e: u64,
    pub m: u64,
    pub budget: u64,
    #[serde(flatten)]
    pub outcome: PowerHamiltonOutcome,
}

/// Report of `graph decompose`; full edge sets only on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub k: u32,
    pub ell: u64,
    pub r: u64,
    pub t: u64,
    /// Vertices (k+1) * t * ell of the host power path.
    pub n: u32,
    /// Power m = k*ell + r of the host path.
    pub m: u64,
    pub blowup_edge_count: u64,
    /// One count per braid copy (k+1 of them).
    pub braid_edge_counts: Vec<u64>,
    /// Blow-up pairs at distance > m, omitted from the first set.
    pub omitted_blowup_pairs: u64,
    /// True iff the sets are disjoint and union to the host edge set;
    /// recomputed, not assumed.
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blowup_edges: Option<Vec<(u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid_edge_sets: Option<Vec<Vec<(u32, u32)>>>,
}

/// Report of `lab gnp`: inputs echoed, edge list written to `out`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnpReport {
    pub n: u32,
    pub p: Rational,
    pub seed: u64,
    pub edges: u64,
    pub out: String,
}

/// Report of `lab gadget`: inputs echoed, edge list written to `out`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub n: u32,
    pub k: u32,
    pub eps: Rational,
    pub class_count: u32,
    pub class_size: u32,
    pub w_size: u32,
    /// Minimum degree the gadget must meet: ceil((k/(k+1) + eps) n) - 1.
    pub required_min_degree: u64,
    pub edges: u64,
    pub out: String,
}
