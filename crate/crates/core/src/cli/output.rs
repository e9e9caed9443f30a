use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::Result;
use crate::identities::{IdentityId, IdentityReport};
use crate::numkernel::ComplexVal;
use crate::sums::{SumMethod, SumResult, SumSpec};
use crate::zeros::write_atomically;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    Csv,
    #[default]
    Text,
}

/// A record that can be written in each output format.
pub trait Row {
    fn json(&self) -> String;
    fn header() -> &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

/// Shortest round-trip form, in exponent notation for very large or small
/// magnitudes.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn opt_num(v: Option<f64>) -> String {
    v.map_or_else(String::new, num)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

#[derive(Serialize)]
struct Complex {
    re: f64,
    im: f64,
}

impl From<ComplexVal> for Complex {
    fn from(z: ComplexVal) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroRow {
    pub family: &'static str,
    pub nu: f64,
    pub n: usize,
    pub zero: f64,
}

impl Row for ZeroRow {
    fn json(&self) -> String {
        to_json(self)
    }

    fn header() -> &'static [&'static str] {
        &["family", "nu", "n", "zero"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.into(),
            num(self.nu),
            self.n.to_string(),
            num(self.zero),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexZeroRow {
    pub family: &'static str,
    pub n: usize,
    pub nu: f64,
    pub j: usize,
    pub re: f64,
    pub im: f64,
}

impl Row for ComplexZeroRow {
    fn json(&self) -> String {
        to_json(self)
    }

    fn header() -> &'static [&'static str] {
        &["family", "n", "nu", "j", "re", "im"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.into(),
            self.n.to_string(),
            num(self.nu),
            self.j.to_string(),
            num(self.re),
            num(self.im),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumRow {
    pub family: &'static str,
    pub nu: f64,
    pub power: u32,
    pub sign: &'static str,
    pub k: Option<usize>,
    pub x: Option<f64>,
    pub exclude_center: bool,
    pub method: SumMethod,
    pub value: f64,
    #[serde(rename = "truncation_N")]
    pub truncation_n: usize,
    pub tail_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl SumRow {
    pub fn new(spec: &SumSpec, k: Option<usize>, x: Option<f64>, result: SumResult) -> Self {
        SumRow {
            family: spec.family().as_str(),
            nu: spec.nu(),
            power: spec.power(),
            sign: match spec.sign() {
                crate::sums::ShiftSign::Minus => "minus",
                crate::sums::ShiftSign::Plus => "plus",
            },
            k,
            x,
            exclude_center: spec.exclude_center(),
            method: result.method,
            value: result.value,
            truncation_n: result.truncation_n,
            tail_bound: result.tail_bound,
            warning: result.warning,
        }
    }
}

impl Row for SumRow {
    fn json(&self) -> String {
        to_json(self)
    }

    fn header() -> &'static [&'static str] {
        &[
            "family",
            "nu",
            "power",
            "sign",
            "k",
            "x",
            "exclude_center",
            "method",
            "value",
            "truncation_N",
            "tail_bound",
            "warning",
        ]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.into(),
            num(self.nu),
            self.power.to_string(),
            self.sign.into(),
            opt(self.k),
            opt_num(self.x),
            self.exclude_center.to_string(),
            match self.method {
                SumMethod::DirectTail => "direct_tail".into(),
                SumMethod::ClosedForm => "closed_form".into(),
            },
            num(self.value),
            self.truncation_n.to_string(),
            num(self.tail_bound),
            self.warning.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Serialize)]
struct ParamsJson {
    nu: Option<f64>,
    k: Option<usize>,
    n: Option<usize>,
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<Complex>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    tool_version: &'static str,
    identity_id: IdentityId,
    params: ParamsJson,
    lhs: Complex,
    rhs: Complex,
    abs_residual: f64,
    rel_residual: f64,
    #[serde(rename = "truncation_N")]
    truncation_n: usize,
    tail_bound: f64,
    tolerance: f64,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    notes: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

impl Row for IdentityReport {
    fn json(&self) -> String {
        let p = &self.params;
        to_json(&ReportJson {
            tool_version: TOOL_VERSION,
            identity_id: self.identity_id,
            params: ParamsJson {
                nu: p.nu,
                k: p.k,
                n: p.n,
                j: p.j,
                z: p.z.map(Complex::from),
            },
            lhs: self.lhs.into(),
            rhs: self.rhs.into(),
            abs_residual: self.abs_residual,
            rel_residual: self.rel_residual,
            truncation_n: self.truncation_n,
            tail_bound: self.tail_bound,
            tolerance: self.tolerance,
            passed: self.passed,
            notes: self.notes.as_deref(),
            error: self.error.as_deref(),
        })
    }

    fn header() -> &'static [&'static str] {
        &[
            "tool_version",
            "identity_id",
            "nu",
            "k",
            "n",
            "j",
            "z_re",
            "z_im",
            "lhs_re",
            "lhs_im",
            "rhs_re",
            "rhs_im",
            "abs_residual",
            "rel_residual",
            "truncation_N",
            "tail_bound",
            "tolerance",
            "passed",
            "notes",
            "error",
        ]
    }

    fn fields(&self) -> Vec<String> {
        let p = &self.params;
        vec![
            TOOL_VERSION.into(),
            self.identity_id.to_string(),
            opt_num(p.nu),
            opt(p.k),
            opt(p.n),
            opt(p.j),
            opt_num(p.z.map(|z| z.re)),
            opt_num(p.z.map(|z| z.im)),
            num(self.lhs.re),
            num(self.lhs.im),
            num(self.rhs.re),
            num(self.rhs.im),
            num(self.abs_residual),
            num(self.rel_residual),
            self.truncation_n.to_string(),
            num(self.tail_bound),
            num(self.tolerance),
            self.passed.to_string(),
            self.notes.clone().unwrap_or_default(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Per-identity totals over a set of reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub identity_id: IdentityId,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
}

pub fn summarize(reports: &[IdentityReport]) -> Vec<SummaryRow> {
    let mut by_id: BTreeMap<IdentityId, SummaryRow> = BTreeMap::new();
    for r in reports {
        let row = by_id.entry(r.identity_id).or_insert(SummaryRow {
            identity_id: r.identity_id,
            cases: 0,
            passed: 0,
            failed: 0,
            errors: 0,
            max_abs_residual: 0.0,
            max_rel_residual: 0.0,
        });
        row.cases += 1;
        if r.error.is_some() {
            row.errors += 1;
        } else if r.passed {
            row.passed += 1;
        } else {
            row.failed += 1;
        }
        if r.abs_residual.is_finite() {
            row.max_abs_residual = row.max_abs_residual.max(r.abs_residual);
            row.max_rel_residual = row.max_rel_residual.max(r.rel_residual);
        }
    }
    by_id.into_values().collect()
}

pub fn summary_text(summary: &[SummaryRow]) -> String {
    let mut out = String::from("summary:\n");
    for s in summary {
        out.push_str(&format!(
            "  {:<12} cases {:>4}  passed {:>4}  failed {:>3}  errors {:>3}  max abs {:.3e}  max rel {:.3e}\n",
            s.identity_id.as_str(),
            s.cases,
            s.passed,
            s.failed,
            s.errors,
            s.max_abs_residual,
            s.max_rel_residual
        ));
    }
    out
}

fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, f) in widths.iter_mut().zip(row) {
            *w = (*w).max(f.len());
        }
    }
    let line = |fields: Vec<&str>| {
        let cells: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, &w)| format!("{f:<w$}"))
            .collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Renders rows, with an optional summary: a final `{"summary": [...]}`
/// line in JSON, a trailing block in text, and nothing in CSV.
pub fn render<R: Row>(
    rows: &[R],
    format: Format,
    summary: Option<&[SummaryRow]>,
) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&r.json());
                out.push('\n');
            }
            if let Some(s) = summary {
                #[derive(Serialize)]
                struct Wrapper<'a> {
                    summary: &'a [SummaryRow],
                }
                out.push_str(&to_json(&Wrapper { summary: s }));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(R::header()).map_err(csv_error)?;
            for r in rows {
                w.write_record(r.fields()).map_err(csv_error)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| crate::error::Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
        Format::Text => {
            let fields: Vec<Vec<String>> = rows.iter().map(Row::fields).collect();
            let mut out = text_table(R::header(), &fields);
            if let Some(s) = summary {
                out.push_str(&summary_text(s));
            }
            Ok(out)
        }
    }
}

fn csv_error(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e))
}

/// Writes the whole output at once: to `path` through a temporary file and
/// a rename, or to stdout.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => write_atomically(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
