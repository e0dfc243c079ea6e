//! The machine-readable result of one command and its three renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use weaving_core::{BigInt, LaurentPoly, Variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Alexander,
    Jones,
    Determinant,
    Zeros,
    Table,
    Verify,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    /// `t`, `s` or `x`.
    pub variable: String,
    pub offset: i64,
    /// Decimal strings, lowest exponent first.
    pub coefficients: Vec<String>,
    pub extras: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(kind: Kind, variable: Variable, offset: i64, coefficients: &[BigInt]) -> Self {
        OutputRecord {
            kind,
            variable: variable.name().to_string(),
            offset,
            coefficients: coefficients.iter().map(|c| c.to_string()).collect(),
            extras: Map::new(),
        }
    }

    pub fn from_poly(kind: Kind, variable: Variable, p: &LaurentPoly) -> Self {
        let mut r = Self::new(kind, variable, p.offset(), p.coeffs());
        r.extras.insert("polynomial".into(), p.display_in(variable).into());
        r
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extras.insert(key.to_string(), value.into());
        self
    }

    /// Coefficients parsed back to integers.
    pub fn coefficient_values(&self) -> Result<Vec<BigInt>, String> {
        self.coefficients
            .iter()
            .map(|c| BigInt::from_str(c).map_err(|e| format!("bad coefficient {c:?}: {e}")))
            .collect()
    }

    /// Leading CSV column: `n` when the record has one, otherwise the offset.
    fn csv_key(&self) -> String {
        match self.extras.get("n") {
            Some(Value::Number(n)) => n.to_string(),
            _ => self.offset.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Json => {
            let body = if records.len() == 1 {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(records)
            };
            body.expect("records serialize") + "\n"
        }
        Format::Csv => records.iter().fold(String::new(), |mut out, r| {
            let _ = writeln!(out, "{},{}", r.csv_key(), r.coefficients.join(","));
            out
        }),
        Format::Text => records.iter().map(render_text).collect::<Vec<_>>().join("\n"),
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(r: &OutputRecord) -> String {
    let mut out = String::new();
    let kind = serde_json::to_value(r.kind).map(|v| render_value(&v)).unwrap_or_default();
    let _ = writeln!(out, "{kind}");
    if r.kind == Kind::Verify {
        render_verify_text(r, &mut out);
        return out;
    }
    let _ = writeln!(out, "  variable: {}", r.variable);
    let _ = writeln!(out, "  offset: {}", r.offset);
    let _ = writeln!(out, "  coefficients: {}", r.coefficients.join(" "));
    for (k, v) in &r.extras {
        match v {
            Value::Array(items) => {
                let _ = writeln!(out, "  {k}:");
                for item in items {
                    let _ = writeln!(out, "    {}", render_value(item));
                }
            }
            _ => {
                let _ = writeln!(out, "  {k}: {}", render_value(v));
            }
        }
    }
    out
}

fn render_verify_text(r: &OutputRecord, out: &mut String) {
    if let Some(Value::Array(suites)) = r.extras.get("suites") {
        for s in suites {
            let name = s.get("suite").map(render_value).unwrap_or_default();
            let passed = s.get("passed").and_then(Value::as_bool).unwrap_or(false);
            let items = s.get("items").map(render_value).unwrap_or_default();
            let secs = s.get("seconds").and_then(Value::as_f64).unwrap_or(0.0);
            let _ = writeln!(
                out,
                "  {:<12} {}  items={items}  {secs:.3}s",
                name,
                if passed { "PASS" } else { "FAIL" }
            );
            if let Some(Value::String(f)) = s.get("first_failure") {
                let _ = writeln!(out, "    first failure: {f}");
            }
        }
    }
    if let Some(Value::Array(notes)) = r.extras.get("notes") {
        let _ = writeln!(out, "  notes:");
        for n in notes {
            let _ = writeln!(out, "    - {}", render_value(n));
        }
    }
    if let Some(Value::Bool(p)) = r.extras.get("passed") {
        let _ = writeln!(out, "  overall: {}", if *p { "PASS" } else { "FAIL" });
    }
}
