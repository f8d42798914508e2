//! Fixed-format JSON and CSV writers. Numbers always use 17 significant
//! digits in lowercase scientific notation so repeated runs are
//! byte-identical.

use std::collections::BTreeMap;
use std::io::Write;

use harmonia::verify::{EvalReport, Rule};
use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::eval::{ParamValue, Record};
use crate::CliError;

pub const SCHEMA: &str = "harmonia/1";

pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// A float serialized in the fixed format; non-finite values become `null`.
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            RawValue::from_string(fmt_num(self.0)).map_err(S::Error::custom)?.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => s.serialize_u64(*v),
            ParamValue::Num(v) => Num(*v).serialize(s),
            ParamValue::Text(t) => s.serialize_str(t),
        }
    }
}

#[derive(Serialize)]
struct RecordJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    schema: Option<&'static str>,
    kind: &'static str,
    params: &'a BTreeMap<&'static str, ParamValue>,
    value: Num,
    err_estimate: Option<Num>,
    oracle: Option<Num>,
    limit: Option<Num>,
    discrepancy: Option<Num>,
}

impl<'a> From<&'a Record> for RecordJson<'a> {
    fn from(r: &'a Record) -> Self {
        RecordJson {
            schema: None,
            kind: r.kind.name(),
            params: &r.params,
            value: Num(r.value),
            err_estimate: r.err_estimate.map(Num),
            oracle: r.oracle.map(Num),
            limit: r.limit.map(Num),
            discrepancy: r.discrepancy().map(Num),
        }
    }
}

pub fn compute_json(r: &Record) -> Result<String, CliError> {
    let doc = RecordJson { schema: Some(SCHEMA), ..r.into() };
    serde_json::to_string(&doc).map_err(|e| CliError::Io(e.to_string()))
}

#[derive(Serialize)]
struct Table<'a> {
    schema: &'static str,
    kind: &'static str,
    rows: Vec<RecordJson<'a>>,
}

pub fn table_json(kind: &'static str, rows: &[Record]) -> Result<String, CliError> {
    let doc = Table { schema: SCHEMA, kind, rows: rows.iter().map(RecordJson::from).collect() };
    serde_json::to_string_pretty(&doc).map_err(|e| CliError::Io(e.to_string()))
}

const RESULT_COLUMNS: [&str; 5] = ["value", "err_estimate", "oracle", "limit", "discrepancy"];

/// CSV with one column per parameter (sorted by name) then the result columns.
pub fn table_csv<W: Write>(out: W, columns: &[&'static str], rows: &[Record]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let header = columns.iter().copied().chain(RESULT_COLUMNS);
    w.write_record(header).map_err(CliError::io)?;
    for r in rows {
        let mut fields: Vec<String> = columns
            .iter()
            .map(|c| r.params.get(c).map(ToString::to_string).unwrap_or_default())
            .collect();
        fields.push(fmt_num(r.value));
        fields.push(fmt_opt(r.err_estimate));
        fields.push(fmt_opt(r.oracle));
        fields.push(fmt_opt(r.limit));
        fields.push(fmt_opt(r.discrepancy()));
        w.write_record(&fields).map_err(CliError::io)?;
    }
    w.flush().map_err(CliError::io)
}

fn rule_name(rule: Rule) -> &'static str {
    match rule {
        Rule::Near => "near",
        Rule::AtMost => "at-most",
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    id: &'a str,
    expected: Num,
    got: Num,
    tol: Num,
    rule: &'static str,
    pass: bool,
    gating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema: &'static str,
    suite: &'a str,
    tol_scale: Num,
    failed: usize,
    rows: Vec<ReportJson<'a>>,
}

pub fn verify_json(suite: &str, tol_scale: f64, rows: &[EvalReport]) -> Result<String, CliError> {
    let doc = VerifyJson {
        schema: SCHEMA,
        suite,
        tol_scale: Num(tol_scale),
        failed: rows.iter().filter(|r| !r.ok()).count(),
        rows: rows
            .iter()
            .map(|r| ReportJson {
                id: &r.id,
                expected: Num(r.expected),
                got: Num(r.got),
                tol: Num(r.tol),
                rule: rule_name(r.rule),
                pass: r.pass,
                gating: r.gating,
                note: r.note.as_deref(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| CliError::Io(e.to_string()))
}

pub fn verify_csv<W: Write>(out: W, rows: &[EvalReport]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["id", "expected", "got", "tol", "rule", "pass", "gating", "note"])
        .map_err(CliError::io)?;
    for r in rows {
        w.write_record([
            r.id.clone(),
            fmt_num(r.expected),
            fmt_num(r.got),
            fmt_num(r.tol),
            rule_name(r.rule).to_string(),
            r.pass.to_string(),
            r.gating.to_string(),
            r.note.clone().unwrap_or_default(),
        ])
        .map_err(CliError::io)?;
    }
    w.flush().map_err(CliError::io)
}
