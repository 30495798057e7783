//! Markdown, CSV and JSON renderings of count tables and ideal listings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{IdealRecord, ParabolicMask};
use crate::rootsys::{Kind, RootSystem, SimpleType};
use crate::tabulate::{TableOf, TableRowOf};
use crate::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (markdown, csv, json)")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    #[serde(rename = "type")]
    simple_type: String,
    rows: Vec<JsonRow>,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    #[serde(rename = "I")]
    parabolic: Vec<usize>,
    n: u64,
    ab: u64,
}

/// Pictograph of `I`: `•` for members, `∘` otherwise. For type E the bottom row
/// `α1 α3 … αl` comes first and the branch node α2 is shown separately.
pub fn diagram(mask: ParabolicMask, kind: Kind) -> String {
    let node = |i: usize| if mask.contains(i) { '•' } else { '∘' };
    let l = mask.rank();
    if kind == Kind::E {
        let bottom: String = std::iter::once(0).chain(2..l).map(node).collect();
        format!("{bottom} [α2:{}]", node(1))
    } else {
        (0..l).map(node).collect()
    }
}

fn csv_mask(mask: ParabolicMask) -> String {
    mask.simple_numbers()
        .iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_error(e: csv::Error) -> Error {
    Error::MalformedTable(e.to_string())
}

pub fn render_table(table: &Table, format: OutputFormat) -> String {
    let t = table.simple_type();
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "## {t}\n");
            out.push_str("| I | ♯N_I | ♯Ab_I | diagram |\n");
            out.push_str("|---|---:|---:|---|\n");
            for row in table.rows() {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    row.mask,
                    row.n_count,
                    row.ab_count,
                    diagram(row.mask, t.kind())
                );
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["mask", "n_count", "ab_count"]).unwrap();
            for row in table.rows() {
                w.write_record([
                    csv_mask(row.mask),
                    row.n_count.to_string(),
                    row.ab_count.to_string(),
                ])
                .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        OutputFormat::Json => {
            let doc = JsonTable {
                simple_type: t.to_string(),
                rows: table
                    .rows()
                    .iter()
                    .map(|r| JsonRow {
                        parabolic: r.mask.simple_numbers(),
                        n: r.n_count,
                        ab: r.ab_count,
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).unwrap();
            s.push('\n');
            s
        }
    }
}

fn parse_numbers(rank: usize, field: &str, sep: char) -> Result<ParabolicMask> {
    let numbers = field
        .split(sep)
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim_start_matches('α')
                .parse::<usize>()
                .map_err(|_| Error::MalformedTable(format!("bad simple root {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    ParabolicMask::from_simple_numbers(rank, &numbers)
}

fn parse_count(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::MalformedTable(format!("bad count {s:?}")))
}

/// Rows may come in any order; the result is sorted by mask.
fn assemble(t: SimpleType, mut rows: Vec<TableRowOf<u64>>) -> Result<Table> {
    rows.sort_by_key(|r| r.mask);
    TableOf::new(t, rows)
}

/// Reads the CSV rendering back (`mask,n_count,ab_count`).
pub fn parse_table_csv(t: SimpleType, text: &str) -> Result<Table> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(csv_error)?;
    if headers != vec!["mask", "n_count", "ab_count"] {
        return Err(Error::MalformedTable(format!(
            "unexpected header {headers:?}"
        )));
    }
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_error)?;
        rows.push(TableRowOf {
            mask: parse_numbers(t.rank(), &rec[0], ';')?,
            n_count: parse_count(&rec[1])?,
            ab_count: parse_count(&rec[2])?,
        });
    }
    assemble(t, rows)
}

pub fn parse_table_json(text: &str) -> Result<Table> {
    let doc: JsonTable =
        serde_json::from_str(text).map_err(|e| Error::MalformedTable(e.to_string()))?;
    let t: SimpleType = doc.simple_type.parse()?;
    let rows = doc
        .rows
        .into_iter()
        .map(|r| {
            Ok(TableRowOf {
                mask: ParabolicMask::from_simple_numbers(t.rank(), &r.parabolic)?,
                n_count: r.n,
                ab_count: r.ab,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(t, rows)
}

pub fn parse_table_markdown(text: &str) -> Result<Table> {
    let mut lines = text.lines();
    let t: SimpleType = lines
        .next()
        .and_then(|l| l.strip_prefix("## "))
        .ok_or_else(|| Error::MalformedTable("missing type heading".into()))?
        .parse()?;
    let mut rows = Vec::new();
    for line in lines.filter(|l| l.starts_with("| ")).skip(1) {
        let cells: Vec<&str> = line.trim_matches('|').split('|').map(str::trim).collect();
        if cells.len() < 3 {
            return Err(Error::MalformedTable(format!("short row {line:?}")));
        }
        let mask = match cells[0] {
            "∅" => ParabolicMask::empty(t.rank()),
            s => parse_numbers(
                t.rank(),
                s.trim_start_matches('{').trim_end_matches('}'),
                ',',
            )?,
        };
        rows.push(TableRowOf {
            mask,
            n_count: parse_count(cells[1])?,
            ab_count: parse_count(cells[2])?,
        });
    }
    assemble(t, rows)
}

#[derive(Serialize)]
struct JsonListing {
    #[serde(rename = "type")]
    simple_type: String,
    #[serde(rename = "I")]
    parabolic: Vec<usize>,
    abelian_only: bool,
    count: usize,
    ideals: Vec<JsonIdeal>,
}

#[derive(Serialize)]
struct JsonIdeal {
    min_roots: Vec<Vec<i32>>,
    size: usize,
    abelian: bool,
}

fn min_roots_text(rs: &RootSystem, rec: &IdealRecord, sep: &str) -> String {
    rec.min_roots
        .iter()
        .map(|i| rs.root(i).to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Renders the ideals of one parabolic, as produced by `ideals_of`.
pub fn render_listing(
    rs: &RootSystem,
    parabolic: ParabolicMask,
    abelian_only: bool,
    ideals: &[IdealRecord],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            let kind = if abelian_only {
                "abelian ideals"
            } else {
                "ad-nilpotent ideals"
            };
            let _ = writeln!(out, "## {} I = {parabolic}: {kind}\n", rs.simple_type());
            out.push_str("| Φ_min | \\|Φ\\| | abelian |\n");
            out.push_str("|---|---:|---|\n");
            for rec in ideals {
                let min = if rec.min_roots.is_empty() {
                    "∅".to_string()
                } else {
                    format!("{{{}}}", min_roots_text(rs, rec, ", "))
                };
                let ab = if rec.abelian { "yes" } else { "no" };
                let _ = writeln!(out, "| {min} | {} | {ab} |", rec.size);
            }
            let _ = writeln!(out, "\n{} ideals", ideals.len());
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["min_roots", "size", "abelian"]).unwrap();
            for rec in ideals {
                w.write_record([
                    min_roots_text(rs, rec, ";"),
                    rec.size.to_string(),
                    rec.abelian.to_string(),
                ])
                .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        OutputFormat::Json => {
            let doc = JsonListing {
                simple_type: rs.simple_type().to_string(),
                parabolic: parabolic.simple_numbers(),
                abelian_only,
                count: ideals.len(),
                ideals: ideals
                    .iter()
                    .map(|rec| JsonIdeal {
                        min_roots: rec
                            .min_roots
                            .iter()
                            .map(|i| rs.root(i).coords().to_vec())
                            .collect(),
                        size: rec.size,
                        abelian: rec.abelian,
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).unwrap();
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabulate::golden;

    #[test]
    fn g2_csv() {
        let csv = render_table(&golden(SimpleType::G2).unwrap(), OutputFormat::Csv);
        assert_eq!(csv, "mask,n_count,ab_count\n,8,4\n1,3,2\n2,4,3\n1;2,1,1\n");
    }

    #[test]
    fn json_shape() {
        let json = render_table(&golden(SimpleType::E6).unwrap(), OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["type"], "E6");
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 64);
        assert_eq!(rows[0]["I"], serde_json::json!([]));
        assert_eq!(rows[0]["n"], 833);
        let r25 = &rows[0b010010];
        assert_eq!(r25["I"], serde_json::json!([2, 5]));
    }

    #[test]
    fn all_formats_round_trip() {
        for t in SimpleType::EXCEPTIONAL {
            let g = golden(t).unwrap();
            let csv = render_table(&g, OutputFormat::Csv);
            assert_eq!(parse_table_csv(t, &csv).unwrap(), g);
            let json = render_table(&g, OutputFormat::Json);
            assert_eq!(parse_table_json(&json).unwrap(), g);
            let md = render_table(&g, OutputFormat::Markdown);
            assert_eq!(parse_table_markdown(&md).unwrap(), g);
        }
    }

    #[test]
    fn diagrams() {
        let e6 = ParabolicMask::from_simple_numbers(6, &[2, 5]).unwrap();
        assert_eq!(diagram(e6, Kind::E), "∘∘∘•∘ [α2:•]");
        let g2 = ParabolicMask::from_simple_numbers(2, &[1]).unwrap();
        assert_eq!(diagram(g2, Kind::G), "•∘");
    }

    #[test]
    fn malformed_csv() {
        assert!(parse_table_csv(SimpleType::G2, "mask,n,ab\n").is_err());
        assert!(parse_table_csv(SimpleType::G2, "mask,n_count,ab_count\n,8,4\n").is_err());
        assert!(parse_table_csv(SimpleType::G2, "mask,n_count,ab_count\n9,8,4\n").is_err());
    }
}
