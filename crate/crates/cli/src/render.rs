//! Markdown and CSV renderers for the tabular subcommands whose rows are
//! not already tables in the library (scan, pell). Cell conventions match
//! the library's table emitter: absent values render as "-", rationals
//! and surds render exactly.

use std::fmt::Write as _;

use hampow_core::dirac::{ScanMode, ScanRow, ScanWitness};
use hampow_core::exact::Rational;

use crate::reports::PellRow;

fn table(columns: &[&str], rows: &[Vec<String>], markdown: bool) -> String {
    let mut out = String::new();
    if markdown {
        writeln!(out, "| {} |", columns.join(" | ")).unwrap();
        writeln!(out, "|{}", " --- |".repeat(columns.len())).unwrap();
        for row in rows {
            writeln!(out, "| {} |", row.join(" | ")).unwrap();
        }
    } else {
        writeln!(out, "{}", columns.join(",")).unwrap();
        for row in rows {
            writeln!(out, "{}", row.join(",")).unwrap();
        }
    }
    out
}

fn opt_bool(v: Option<bool>) -> String {
    v.map_or_else(|| "-".into(), |b| b.to_string())
}

fn opt_rational(v: &Option<Rational>) -> String {
    v.as_ref().map_or_else(|| "-".into(), |r| r.to_string())
}

/// Columns depend on the mode because each inequality has its own
/// witness values.
pub fn scan_table(mode: ScanMode, rows: &[ScanRow], markdown: bool) -> String {
    let columns: &[&str] = match mode {
        ScanMode::FactAd => &["m", "holds", "ell", "lower", "upper"],
        ScanMode::FactDiff => &["m", "holds", "difference", "bound", "in_proof_range"],
        ScanMode::PropRcr => &["m", "holds", "f_ell_star", "half_ell_cr"],
    };
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let mut cells = vec![row.m.to_string(), opt_bool(row.holds)];
            match &row.witness {
                ScanWitness::FactAd { ell, lower, upper } => {
                    cells.push(ell.to_string());
                    cells.push(lower.to_string());
                    cells.push(upper.to_string());
                }
                ScanWitness::FactDiff {
                    difference,
                    bound,
                    in_proof_range,
                } => {
                    cells.push(difference.to_string());
                    cells.push(bound.to_string());
                    cells.push(in_proof_range.to_string());
                }
                ScanWitness::PropRcr {
                    f_ell_star,
                    half_ell_cr,
                } => {
                    cells.push(opt_rational(f_ell_star));
                    cells.push(opt_rational(half_ell_cr));
                }
            }
            cells
        })
        .collect();
    table(columns, &body, markdown)
}

pub fn pell_table(rows: &[PellRow], markdown: bool) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.p.clone(), r.q.clone(), r.m.clone()])
        .collect();
    table(&["p", "q", "m"], &body, markdown)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_markdown_shapes() {
        let rows = [PellRow {
            p: "2".into(),
            q: "9".into(),
            m: "4".into(),
        }];
        assert_eq!(pell_table(&rows, false), "p,q,m\n2,9,4\n");
        assert_eq!(pell_table(&rows, true), "| p | q | m |\n| --- | --- | --- |\n| 2 | 9 | 4 |\n");
    }

    #[test]
    fn scan_cells_follow_the_mode() {
        let rows = hampow_core::dirac::scan_inequalities(ScanMode::PropRcr, 3, 10..=11).unwrap();
        let csv = scan_table(ScanMode::PropRcr, &rows, false);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("m,holds,f_ell_star,half_ell_cr"));
        // m=10 has a critical remainder but the braid bound loses to the
        // blow-up bound there; m=11 has no critical remainder at all, so
        // its row is all dashes after the index.
        assert_eq!(lines.next(), Some("10,false,11/2,3/2"));
        assert_eq!(lines.next(), Some("11,-,-,-"));
    }
}
