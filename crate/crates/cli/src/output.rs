//! Serialized output. Every command produces a list of [`Record`]s.

use std::fmt::Write as _;

use clap::ValueEnum;
use gcm_core::bounds::BoundResult;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// The JSON schema. Non-finite numbers are written as `null`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub kind: String,
    pub n: Option<u32>,
    pub alpha: Option<f64>,
    pub rho: Option<f64>,
    /// Rounded to 8 significant digits.
    pub value: Option<f64>,
    pub log_value: Option<f64>,
    pub terms_used: usize,
    pub tail_bound: Option<f64>,
    pub notes: Vec<String>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

/// `v` rounded to 8 significant digits.
pub fn round8(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.7e}").parse().expect("formatted float parses")
}

/// Shortest round-trip text for `v` after [`round8`]; `inf`/`nan` as such.
pub fn fmt8(v: f64) -> String {
    fmt_full(round8(v))
}

/// Eight decimal places, truncated toward zero, as in published energy
/// tables; values of `1e9` and beyond fall back to [`fmt8`].
pub fn fmt_table(v: f64) -> String {
    if !v.is_finite() || v.abs() >= 1e9 {
        return fmt8(v);
    }
    // rounding at 1e-12 first keeps decimal constants such as 0.23153532,
    // stored just below their literal, from losing their last digit
    let s = format!("{v:.12}");
    let dot = s.find('.').expect("fixed notation has a point");
    s[..dot + 9].to_string()
}

pub fn fmt_full(v: f64) -> String {
    if v.is_finite() {
        serde_json::to_string(&v).expect("finite float serializes")
    } else {
        v.to_string()
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_full).unwrap_or_default()
}

impl Record {
    pub fn new(kind: impl Into<String>, value: f64, log_value: f64) -> Self {
        Record {
            kind: kind.into(),
            n: None,
            alpha: None,
            rho: None,
            value: finite(round8(value)),
            log_value: finite(log_value),
            terms_used: 0,
            tail_bound: Some(0.0),
            notes: Vec::new(),
        }
    }
}

impl From<&BoundResult> for Record {
    fn from(b: &BoundResult) -> Self {
        Record {
            kind: b.kind.label().to_string(),
            n: Some(b.n),
            alpha: b.alpha(),
            rho: Some(b.rho),
            value: finite(round8(b.value)),
            log_value: finite(b.log_value),
            terms_used: b.terms_used,
            tail_bound: finite(b.tail_bound),
            notes: b.notes.clone(),
        }
    }
}

/// One row of `table`.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub bound: BoundResult,
    pub record: f64,
    pub source: &'static str,
    pub label: String,
}

pub fn render_records(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = if records.len() == 1 {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(records)
            }
            .expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("kind,n,alpha,rho,value,log_value,terms_used,tail_bound\n");
            for r in records {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    r.kind,
                    r.n.map(|n| n.to_string()).unwrap_or_default(),
                    fmt_opt(r.alpha),
                    fmt_opt(r.rho),
                    fmt_opt(r.value),
                    fmt_opt(r.log_value),
                    r.terms_used,
                    fmt_opt(r.tail_bound)
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in records {
                let _ = write!(s, "{}", r.kind);
                if let Some(n) = r.n {
                    let _ = write!(s, " n={n}");
                }
                if let Some(a) = r.alpha {
                    let _ = write!(s, " alpha={}", fmt_full(a));
                }
                if let Some(rho) = r.rho {
                    let _ = write!(s, " rho={}", fmt_full(rho));
                }
                let _ = writeln!(
                    s,
                    ": {} (log {}, {} terms, tail {})",
                    fmt_opt(r.value),
                    fmt_opt(r.log_value),
                    r.terms_used,
                    fmt_opt(r.tail_bound)
                );
                for note in &r.notes {
                    let _ = writeln!(s, "  {note}");
                }
            }
            s
        }
    }
}

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("n,our_bound,record,record_source\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.bound.n,
                    fmt_table(r.bound.value),
                    fmt_table(r.record),
                    r.source
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:>5}  {:>14}  {:>14}  {}\n",
                "n", "our_bound", "record", "source"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>5}  {:>14}  {:>14}  {} ({})",
                    r.bound.n,
                    fmt_table(r.bound.value),
                    fmt_table(r.record),
                    r.source,
                    r.label
                );
            }
            s
        }
        Format::Json => {
            let records: Vec<Record> = rows
                .iter()
                .map(|r| {
                    let mut rec = Record::from(&r.bound);
                    rec.notes.push(format!(
                        "record = {} ({}: {})",
                        fmt8(r.record),
                        r.source,
                        r.label
                    ));
                    rec
                })
                .collect();
            render_records(&records, Format::Json)
        }
    }
}
