//! Dispatch: each subcommand validates its flags, calls the library, and
//! renders one output string. File writes happen here; everything else is
//! pure. Verdict-bearing values stay exact on the wire.

use std::fs;
use std::path::Path;

use serde::Serialize;

use hampow_core::dirac::{emit_table, params_report, pell_integer_lambdas, scan_inequalities};
use hampow_core::graph::{
    blow_up, braid, clique_count, decompose_power_path, format_edge_list, max_density,
    parse_edge_list, parse_index_list, power_cycle, power_path, BraidSpec, Graph,
};
use hampow_core::lab::{
    clique_experiment, gnp, posa_gadget, zero_statement_experiment, GadgetSpec,
};
use hampow_core::oracle::{exhaustive_density_with, find_power_hamilton, min_partition_edges_with};
use hampow_core::rewire::{rewire, segment_far_minimum, zero_statement_slope, LabeledPowerPath};
use hampow_core::{Error, Result};

use crate::args::{Cli, Command, FormatArg, GraphCommand, LabCommand, OracleCommand};
use crate::render::{pell_table, scan_table};
use crate::reports::{
    CliqueCountReport, DecomposeReport, DensityReport, FarMinReport, GadgetReport, GnpReport,
    HamPowerReport, MinPartitionReport, PellRow, RewireReport,
};

/// Runs one parsed command to completion and returns what belongs on
/// stdout (may be empty when the only product is a file).
pub fn execute(cli: &Cli) -> Result<String> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::domain(format!("cannot size the thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Params { k, m } => {
            require_json(cli, "params")?;
            json_report(&params_report(*k, *m)?)
        }
        Command::Table { k, from, to } => {
            let format = cli.format.unwrap_or(FormatArg::Json);
            emit_table(*k, *from..=*to, format.into())
        }
        Command::Scan { mode, k, from, to } => {
            let rows = scan_inequalities((*mode).into(), *k, *from..=*to)?;
            match cli.format.unwrap_or(FormatArg::Json) {
                FormatArg::Json => json_report(&rows),
                FormatArg::Markdown => Ok(scan_table((*mode).into(), &rows, true)),
                FormatArg::Csv => Ok(scan_table((*mode).into(), &rows, false)),
            }
        }
        Command::Pell { k, count } => {
            let rows: Vec<PellRow> = pell_integer_lambdas(*k, *count)?
                .iter()
                .map(|s| PellRow {
                    p: s.p.to_string(),
                    q: s.q.to_string(),
                    m: s.m.to_string(),
                })
                .collect();
            match cli.format.unwrap_or(FormatArg::Json) {
                FormatArg::Json => json_report(&rows),
                FormatArg::Markdown => Ok(pell_table(&rows, true)),
                FormatArg::Csv => Ok(pell_table(&rows, false)),
            }
        }
        Command::Graph(sub) => graph_command(cli, sub),
        Command::Rewire {
            m,
            order,
            v0,
            emit_cert,
        } => rewire_command(cli, *m, order, v0, *emit_cert),
        Command::Slope { k, m, s } => {
            require_json(cli, "slope")?;
            json_report(&zero_statement_slope(*k, *m, *s)?)
        }
        Command::FarMin { k, m, s, i } => {
            require_json(cli, "far-min")?;
            json_report(&FarMinReport {
                k: *k,
                m: *m,
                s: *s,
                i: *i,
                minimum: segment_far_minimum(*k, *m, *s, *i)?,
            })
        }
        Command::Oracle(sub) => oracle_command(cli, sub),
        Command::Lab(sub) => lab_command(cli, sub),
    }
}

fn graph_command(cli: &Cli, sub: &GraphCommand) -> Result<String> {
    match sub {
        GraphCommand::Path { n, m, out } => emit_graph(cli, &power_path(*n, *m)?, out.as_deref()),
        GraphCommand::Cycle { n, m, out } => emit_graph(cli, &power_cycle(*n, *m)?, out.as_deref()),
        GraphCommand::Braid { ell, r, t, out } => {
            let spec = BraidSpec::new(*ell, *r, *t)?;
            emit_graph(cli, &braid(&spec)?, out.as_deref())
        }
        GraphCommand::Blowup { file, ell, out } => {
            let g = load_graph(file)?;
            emit_graph(cli, &blow_up(&g, *ell)?, out.as_deref())
        }
        GraphCommand::Density { file } => {
            require_json(cli, "graph density")?;
            let g = load_graph(file)?;
            json_report(&DensityReport {
                n: g.n(),
                e: g.edge_count(),
                density: max_density(&g)?,
            })
        }
        GraphCommand::Cliques { file, s } => {
            require_json(cli, "graph cliques")?;
            let g = load_graph(file)?;
            json_report(&CliqueCountReport {
                n: g.n(),
                e: g.edge_count(),
                s: *s,
                count: clique_count(&g, *s)?,
            })
        }
        GraphCommand::Decompose { k, ell, r, t, full } => {
            require_json(cli, "graph decompose")?;
            let d = decompose_power_path(*k, *ell, *r, *t)?;
            json_report(&DecomposeReport {
                k: d.k,
                ell: d.ell,
                r: d.r,
                t: d.t,
                n: d.n,
                m: d.m,
                blowup_edge_count: d.blowup_edges.len() as u64,
                braid_edge_counts: d.braid_edge_sets.iter().map(|s| s.len() as u64).collect(),
                omitted_blowup_pairs: d.omitted_blowup_pairs,
                verified: d.verified,
                blowup_edges: full.then(|| d.blowup_edges.clone()),
                braid_edge_sets: full.then(|| d.braid_edge_sets.clone()),
            })
        }
    }
}

fn rewire_command(cli: &Cli, m: u64, order: &Path, v0: &Path, emit_cert: bool) -> Result<String> {
    require_json(cli, "rewire")?;
    let order: Vec<u32> = parse_index_list(&read_text(order)?)?
        .into_iter()
        .map(|v| {
            u32::try_from(v).map_err(|_| Error::domain(format!("vertex id {v} exceeds u32")))
        })
        .collect::<Result<_>>()?;
    let v0: Vec<usize> = parse_index_list(&read_text(v0)?)?
        .into_iter()
        .map(|v| {
            usize::try_from(v).map_err(|_| Error::domain(format!("position {v} exceeds usize")))
        })
        .collect::<Result<_>>()?;
    let labels = vec![0; order.len()];
    let path = LabeledPowerPath::new(m, order, labels)?;
    let out = rewire(&path, &v0)?;
    let valid = out.certificate.is_valid();
    let report = RewireReport {
        m,
        order: out.order.clone(),
        x: out.partition.marked_sizes().iter().map(|&x| x as u64).collect(),
        y: out
            .partition
            .interior_gap_sizes()
            .iter()
            .map(|&y| y as u64)
            .collect(),
        valid,
        max_gap_to_run_ratio: out.partition.max_gap_to_run_ratio(),
        steps: out.certificate.steps(),
        certificate: emit_cert.then(|| out.certificate_json()),
    };
    if !valid {
        // The sweep must never hand back a broken certificate; doing so is
        // an invariant breach, reported with the evidence attached.
        return Err(Error::internal(format!(
            "rewire certificate failed: {}",
            out.certificate_json()
        )));
    }
    json_report(&report)
}

fn oracle_command(cli: &Cli, sub: &OracleCommand) -> Result<String> {
    match sub {
        OracleCommand::MinPartition { l, m, k } => {
            require_json(cli, "oracle min-partition")?;
            let res = min_partition_edges_with(*l, *m, *k, cli.override_limits)?;
            json_report(&MinPartitionReport {
                l: *l,
                m: *m,
                k: *k,
                minimum: res.minimum,
                witness: res.witness,
                enumerated: res.enumerated,
            })
        }
        OracleCommand::Density { file } => {
            require_json(cli, "oracle density")?;
            let g = load_graph(file)?;
            json_report(&DensityReport {
                n: g.n(),
                e: g.edge_count(),
                density: exhaustive_density_with(&g, cli.override_limits)?,
            })
        }
        OracleCommand::HamPower { file, m, budget } => {
            require_json(cli, "oracle ham-power")?;
            let g = load_graph(file)?;
            json_report(&HamPowerReport {
                n: g.n(),
                e: g.edge_count(),
                m: *m,
                budget: *budget,
                outcome: find_power_hamilton(&g, *m, *budget)?,
            })
        }
    }
}

fn lab_command(cli: &Cli, sub: &LabCommand) -> Result<String> {
    match sub {
        LabCommand::Gnp { n, p, out } => {
            require_json(cli, "lab gnp")?;
            let g = gnp(*n, p, cli.seed)?;
            write_text(out, &format_edge_list(&g))?;
            json_report(&GnpReport {
                n: *n,
                p: p.clone(),
                seed: cli.seed,
                edges: g.edge_count(),
                out: out.display().to_string(),
            })
        }
        LabCommand::Gadget { n, k, eps, out } => {
            require_json(cli, "lab gadget")?;
            let spec = GadgetSpec::new(*n, *k, eps.clone())?;
            let g = posa_gadget(&spec)?;
            write_text(out, &format_edge_list(&g))?;
            json_report(&GadgetReport {
                n: *n,
                k: *k,
                eps: eps.clone(),
                class_count: spec.class_count(),
                class_size: spec.class_size(),
                w_size: spec.w_size(),
                required_min_degree: spec.required_min_degree(),
                edges: g.edge_count(),
                out: out.display().to_string(),
            })
        }
        LabCommand::Cliques { n, s, p, trials } => {
            require_json(cli, "lab cliques")?;
            json_report(&clique_experiment(*n, *s, p, *trials, cli.seed)?)
        }
        LabCommand::Zero {
            k,
            m,
            n,
            p,
            eps,
            budget,
        } => {
            require_json(cli, "lab zero")?;
            json_report(&zero_statement_experiment(
                *k, *m, *n, p, eps, cli.seed, *budget,
            )?)
        }
    }
}

/// Report commands speak JSON and nothing else; an explicit markdown or
/// csv request is a usage error, not something to silently ignore.
fn require_json(cli: &Cli, what: &str) -> Result<()> {
    match cli.format {
        None | Some(FormatArg::Json) => Ok(()),
        Some(other) => Err(Error::domain(format!(
            "{what} emits JSON only; --format {} is not available here",
            match other {
                FormatArg::Markdown => "markdown",
                FormatArg::Csv => "csv",
                FormatArg::Json => unreachable!(),
            }
        ))),
    }
}

/// Graph constructors emit edge-list text, which is not one of the
/// --format values; any explicit choice is therefore rejected.
fn require_edge_list(cli: &Cli) -> Result<()> {
    if cli.format.is_some() {
        return Err(Error::domain(
            "graph constructors emit edge-list text; --format does not apply",
        ));
    }
    Ok(())
}

fn emit_graph(cli: &Cli, g: &Graph, out: Option<&Path>) -> Result<String> {
    require_edge_list(cli)?;
    let text = format_edge_list(g);
    match out {
        Some(path) => {
            write_text(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn json_report<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read_text(path)?)
}
