//! Command-line surface: one binary, a subcommand tree mirroring the
//! library modules, and four global flags.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hampow_core::dirac::{ScanMode, TableFormat};
use hampow_core::exact::Rational;

/// Exact toolkit for powers of Hamilton cycles under minimum-degree
/// conditions with random augmentation.
#[derive(Debug, Parser)]
#[command(name = "hampow", version, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Tabular commands (table, scan, pell) accept all
    /// three values; report commands emit json only; graph constructors
    /// emit edge-list text and take no format at all.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    /// Seed for the randomized lab subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Lift the default resource ceilings on exhaustive oracles.
    #[arg(long, global = true)]
    pub override_limits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Markdown,
    Csv,
    Json,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Markdown => TableFormat::Markdown,
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanModeArg {
    /// Sandwich ell between m/(k+1) and the wheel cap r(r+1).
    Ad,
    /// Reciprocal gap 1/f(lambda) - 1/f(ell) against 128 k^5 / m^3.
    Diff,
    /// Candidate-selection inequality f(ell*) <= ell_cr / 2.
    Rcr,
}

impl From<ScanModeArg> for ScanMode {
    fn from(m: ScanModeArg) -> Self {
        match m {
            ScanModeArg::Ad => ScanMode::FactAd,
            ScanModeArg::Diff => ScanMode::FactDiff,
            ScanModeArg::Rcr => ScanMode::PropRcr,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical parameters, threshold verdict, and settled value for one
    /// (k, m) pair.
    Params {
        /// Power of the Hamilton cycle sought in the augmented graph.
        #[arg(long)]
        k: u32,
        /// Power of the host path/cycle bounding the base graph; m > k.
        #[arg(long)]
        m: u64,
    },
    /// Parameter table over an inclusive range of m.
    Table {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Evaluate one inequality family for every m in a range.
    Scan {
        #[arg(long, value_enum)]
        mode: ScanModeArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Parameter families with integral lambda, from the Pell equation
    /// q^2 - 4(k^2+1) p^2 = 1.
    Pell {
        #[arg(long)]
        k: u32,
        /// How many solutions to list, ordered by p.
        #[arg(long)]
        count: u32,
    },
    /// Graph constructors and measurements.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Rewiring pass on a power path with a marked vertex set.
    Rewire {
        /// Power of the path (edges join positions at distance <= m).
        #[arg(long)]
        m: u64,
        /// File with the vertex order: whitespace-separated distinct ids.
        #[arg(long)]
        order: PathBuf,
        /// File with the marked positions (0-based into the order).
        #[arg(long)]
        v0: PathBuf,
        /// Also emit the audit certificate {before, after, conds, x, y}.
        #[arg(long)]
        emit_cert: bool,
    },
    /// Certified per-position floor on forced class-local edges.
    Slope {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Clique order excluded inside a class.
        #[arg(long)]
        s: u32,
    },
    /// Closed-form minimum of i-far vertices per segment.
    FarMin {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Clique order excluded inside a class.
        #[arg(long)]
        s: u32,
        /// Far distance.
        #[arg(long)]
        i: u32,
    },
    /// Exhaustive oracles (exponential; guarded by resource ceilings).
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Seeded randomized experiments.
    #[command(subcommand)]
    Lab(LabCommand),
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// m-th power of a path on n vertices.
    Path {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// m-th power of a cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Braid B(ell, r, t): t disjoint ell-cliques, consecutive ones
    /// joined by a triangular r-bridge.
    Braid {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace each vertex of the graph in FILE by ell twins.
    Blowup {
        file: PathBuf,
        #[arg(long)]
        ell: u32,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum subgraph density e_H / (v_H - 1) of the graph in FILE.
    Density { file: PathBuf },
    /// Number of s-cliques in the graph in FILE.
    Cliques {
        file: PathBuf,
        #[arg(long)]
        s: u32,
    },
    /// Partition the edges of a power path into a blow-up and k+1 braids.
    Decompose {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        /// Include the full edge sets, not only their sizes.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Exhaustive minimum of within-class edges over all (k+1)-labelings
    /// of the m-th power of a path on L vertices.
    MinPartition {
        /// Vertex count of the host path.
        #[arg(long = "L")]
        l: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
    },
    /// Maximum subgraph density by subset enumeration (cross-check for
    /// the fast kernel computation).
    Density { file: PathBuf },
    /// Backtracking search for the m-th power of a Hamilton cycle.
    HamPower {
        file: PathBuf,
        #[arg(long)]
        m: u64,
        /// Placement budget; exhausting it yields verdict "unknown".
        #[arg(long)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LabCommand {
    /// Sample G(n, p) with the seeded per-pair stream and write the edge
    /// list to --out; a JSON report goes to stdout.
    Gnp {
        #[arg(long)]
        n: u32,
        /// Edge probability as an exact rational, e.g. 1/2.
        #[arg(long)]
        p: Rational,
        /// Output file for the edge list.
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the extremal minimum-degree gadget and write the edge list
    /// to --out; a JSON report goes to stdout.
    Gadget {
        /// Vertex count; must be a positive multiple of k+1.
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Degree surplus as an exact rational in (0, 1/(k+1)).
        #[arg(long)]
        eps: Rational,
        /// Output file for the edge list.
        #[arg(long)]
        out: PathBuf,
    },
    /// Count s-cliques across seeded G(n, p) draws and compare the
    /// sample mean with the exact first moment.
    Cliques {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        /// Edge probability as an exact rational.
        #[arg(long)]
        p: Rational,
        #[arg(long)]
        trials: u64,
    },
    /// Search gadget(n, k, eps) union G(n, p) for the m-th power of a
    /// Hamilton cycle, or measure a deletion proxy when n is too large
    /// to decide exactly.
    Zero {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u32,
        /// Edge probability as an exact rational.
        #[arg(long)]
        p: Rational,
        /// Degree surplus as an exact rational in (0, 1/(k+1)).
        #[arg(long)]
        eps: Rational,
        /// Placement budget for the exact search on small n.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}
