//! Exact computation around Dirac-type degree thresholds for powers of
//! Hamilton cycles in randomly perturbed graphs.
//!
//! Everything verdict-bearing is exact: rationals on arbitrary-precision
//! integers, quadratic surds with sign decided by squaring, and searches that
//! enumerate rather than sample. Floating point appears only in explicitly
//! lossy display helpers.

pub mod dirac;
pub mod graph;
pub mod error;
pub mod exact;
pub mod lab;
pub mod oracle;
pub mod rewire;

pub use error::{Error, Result};
