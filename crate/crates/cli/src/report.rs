use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use u1kepler::suites::Check;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    /// Exact value rendered as a string: big integers, `p/q` rationals,
    /// bracketed weights.
    Exact(String),
    Float(f64),
    Text(String),
    Bool(bool),
}

/// Shortest round-trip rendering, switching to exponent form far from 1.
pub fn fmt_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::Float(v) => fmt_float(*v),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Exact(s) | Cell::Text(s) => json!(s),
            Cell::Float(v) => json!(v),
            Cell::Bool(b) => json!(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub suite: String,
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Check> for Failure {
    fn from(c: &Check) -> Self {
        Failure {
            suite: c.suite.name().to_string(),
            case: c.case.clone(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub params: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Report {
            params: Map::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_json(&self) -> String {
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({"suite": f.suite, "case": f.case, "lhs": f.lhs, "rhs": f.rhs}))
            .collect();
        let doc = json!({
            "params": self.params,
            "results": results,
            "failures": failures,
            "version": SCHEMA_VERSION,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::plain)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    fn to_text(&self) -> String {
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for (k, v) in &self.params {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "# {k}: {v}");
        }
        let line = |cells: &mut dyn Iterator<Item = String>| {
            let parts: Vec<String> = cells.zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            parts.join("  ").trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(&mut self.columns.iter().map(|c| c.to_string())));
        for row in body {
            let _ = writeln!(out, "{}", line(&mut row.into_iter()));
        }
        if self.failures.is_empty() {
            let _ = writeln!(out, "# all checks passed");
        } else {
            let _ = writeln!(out, "# {} check(s) failed", self.failures.len());
            for f in &self.failures {
                let _ = writeln!(out, "# FAIL {} {}: {} vs {}", f.suite, f.case, f.lhs, f.rhs);
            }
        }
        out
    }
}
