//! Brute-force oracles that certify the nontrivial values computed
//! elsewhere: exhaustive partition minimization over power-path labelings,
//! exhaustive subgraph density, and backtracking search for m-th powers of
//! Hamilton cycles.
//!
//! Everything here is deliberately the dumb, obviously-correct algorithm.
//! The point is independence: these routines share no logic with the fast
//! paths they confirm (`graph::max_density`, the threshold calculus, the
//! rewiring engine), so agreement between the two is evidence, not
//! tautology. Enumeration bounds default to desk scale; callers that accept
//! long runs lift them through the `_with` variants.

mod density;
mod hamilton;
mod partition;

pub use density::{
    exhaustive_density, exhaustive_density_with, DEFAULT_DENSITY_SCAN_VERTICES,
    MAX_DENSITY_SCAN_VERTICES,
};
pub use hamilton::{find_power_hamilton, verify_power_hamilton, PowerHamiltonOutcome};
pub use partition::{
    conjecture_deficit, conjecture_deficit_with, default_position_limit, min_partition_edges,
    min_partition_edges_with, partition_edge_value, PartitionResult,
};
