//! Seeded desk-scale experiments: random graphs, the dense gadget host,
//! clique statistics, and end-to-end zero-statement probes.
//!
//! Everything here is reproducible. Randomness is counter-based, so a draw
//! is a pure function of (seed, index) and identical inputs give
//! bit-identical graphs and reports, no matter the thread schedule.
//! Statistics stay exact: means, variances, and acceptance bands are
//! rationals compared by cross-multiplication, never floats.

mod cliques;
mod gadget;
mod gnp;
mod rng;
mod zero;

pub use cliques::{
    clique_experiment, SampleReport, MAX_EXPERIMENT_CLIQUE, MAX_EXPERIMENT_TRIALS,
    MAX_EXPERIMENT_VERTICES,
};
pub use gadget::{posa_gadget, GadgetSpec, MAX_GADGET_VERTICES};
pub use gnp::{gnp, MAX_GNP_VERTICES};
pub use rng::{below, mix64, pair_index};
pub use zero::{
    zero_statement_experiment, ProxyReport, ZeroStatementReport, ZeroVerdict,
    FULL_SEARCH_VERTICES, MAX_ZERO_VERTICES,
};
