//! Machine-readable report emitted by every subcommand.

use std::collections::BTreeMap;

use betamat::exact::{format_scalar, ExactMatrix, ExactScalar, InertiaTriple};
use betamat::orthogonality::Interval;
use betamat::report::{VerificationReport, Witness};
use betamat::sweeps::SweepReport;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rationals are serialized as `"p/q"` strings, or `"p"` when `q = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Value,
    pub seed: Option<u64>,
    pub version: String,
}

impl Report {
    pub fn new(command: impl Into<String>, parameters: BTreeMap<String, String>, results: Value, seed: Option<u64>) -> Self {
        Self { command: command.into(), parameters, results, seed, version: VERSION.to_string() }
    }

    /// `results.all_passed`, when present.
    pub fn all_passed(&self) -> Option<bool> {
        self.results.get("all_passed").and_then(Value::as_bool)
    }
}

pub fn scalar_json(x: &ExactScalar) -> Value {
    Value::String(format_scalar(x))
}

pub fn matrix_json(m: &ExactMatrix) -> Value {
    json!(m.to_string_rows())
}

pub fn inertia_json(i: &InertiaTriple) -> Value {
    json!({ "positive": i.positive, "zero": i.zero, "negative": i.negative })
}

pub fn interval_json(i: &Interval) -> Value {
    json!({ "lo": format_scalar(&i.lo), "hi": format_scalar(&i.hi) })
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Cell { row, col, lhs, rhs } => {
            json!({ "kind": "cell", "row": row, "col": col, "lhs": format_scalar(lhs), "rhs": format_scalar(rhs) })
        }
        Witness::Value { lhs, rhs } => json!({ "kind": "value", "lhs": format_scalar(lhs), "rhs": format_scalar(rhs) }),
        Witness::Minor { index, value } => {
            json!({ "kind": "minor", "rows": index.rows, "cols": index.cols, "value": format_scalar(value) })
        }
        Witness::Inertia { observed, expected } => {
            json!({ "kind": "inertia", "observed": inertia_json(observed), "expected": inertia_json(expected) })
        }
    }
}

pub fn verification_json(r: &VerificationReport) -> Value {
    json!({
        "identity": r.identity_name,
        "n": r.n,
        "holds": r.holds,
        "witness": r.witness.as_ref().map(witness_json),
    })
}

pub fn sweep_json(r: &SweepReport) -> Value {
    json!({
        "sweep": r.name,
        "seed": r.seed,
        "samples": r.samples,
        "passed": r.passed(),
        "failures": r.failures.iter().map(|f| json!({ "sample": f.sample, "detail": f.detail })).collect::<Vec<_>>(),
    })
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Flat CSV rendering: matrices as one row per line, arrays of objects as a
/// table keyed by the first object's fields, everything else as `key,value`.
pub fn to_csv(report: &Report) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    let results = &report.results;
    if let Some(Value::Array(rows)) = results.get("entries") {
        for row in rows {
            if let Value::Array(cells) = row {
                w.write_record(cells.iter().map(cell_text))?;
            }
        }
    } else if let Some(Value::Array(items)) = results.get("instances") {
        let keys: Vec<String> = items
            .first()
            .and_then(Value::as_object)
            .map(|o| o.keys().cloned().collect())
            .unwrap_or_default();
        w.write_record(&keys)?;
        for item in items {
            w.write_record(keys.iter().map(|k| cell_text(item.get(k).unwrap_or(&Value::Null))))?;
        }
    } else if let Value::Object(map) = results {
        w.write_record(["key", "value"])?;
        for (k, v) in map {
            w.write_record([k.as_str(), &cell_text(v)])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
