//! Parameter tables over a range of m, in markdown, CSV, or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{params_report, ParamsReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" | "md" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::domain(format!(
                "unknown table format {other:?}; expected markdown, csv or json"
            ))),
        }
    }
}

const COLUMNS: [&str; 9] = [
    "m",
    "r_cr",
    "ell_cr",
    "ell",
    "ell_star",
    "f_ell",
    "f_ell_star",
    "verdict",
    "known",
];

/// Emits one row per m in the (inclusive) range with the critical
/// parameters, the verdict, and the settled value when one exists. Cells
/// for absent parameters render as "-"; rational cells are exact.
pub fn emit_table(
    k: u32,
    m_range: std::ops::RangeInclusive<u64>,
    format: TableFormat,
) -> Result<String> {
    let (from, to) = (*m_range.start(), *m_range.end());
    if from > to {
        return Err(Error::domain(format!("empty table range {from}..={to}")));
    }
    let rows = (from..=to)
        .map(|m| params_report(k, m))
        .collect::<Result<Vec<_>>>()?;
    match format {
        TableFormat::Json => {
            serde_json::to_string_pretty(&rows).map_err(|e| Error::internal(e.to_string()))
        }
        TableFormat::Markdown => {
            let mut out = String::new();
            writeln!(out, "| {} |", COLUMNS.join(" | ")).unwrap();
            writeln!(out, "|{}", " --- |".repeat(COLUMNS.len())).unwrap();
            for row in &rows {
                writeln!(out, "| {} |", cells(row).join(" | ")).unwrap();
            }
            Ok(out)
        }
        TableFormat::Csv => {
            let mut out = String::new();
            writeln!(out, "{}", COLUMNS.join(",")).unwrap();
            for row in &rows {
                writeln!(out, "{}", cells(row).join(",")).unwrap();
            }
            Ok(out)
        }
    }
}

fn opt_u64(v: Option<u64>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn cells(row: &ParamsReport) -> [String; 9] {
    [
        row.m.to_string(),
        opt_u64(row.r_cr),
        opt_u64(row.ell_cr),
        row.ell.to_string(),
        opt_u64(row.ell_star),
        row.f_ell.to_string(),
        row.f_ell_star
            .as_ref()
            .map_or_else(|| "-".into(), |r| r.to_string()),
        row.verdict.as_str().to_string(),
        row.known.as_ref().map_or_else(
            || "-".into(),
            |kr| {
                format!(
                    "{} {}",
                    kr.reciprocal_exponent,
                    match kr.nature {
                        super::Nature::Ordinary => "ordinary",
                        super::Nature::Over => "over",
                    }
                )
            },
        ),
    ]
}
