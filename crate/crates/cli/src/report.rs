//! Rendering of suite reports as text and JSON.

use std::fmt::Write as _;

use morphic_core::suite::{Report, Status, Value};
use serde_json::{json, Map};

pub fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Int(i) => json!(i),
        Value::Bool(b) => json!(b),
        Value::Text(s) => json!(s),
        Value::List(items) => items.iter().map(value_json).collect(),
    }
}

/// `{check, status, bounds, witness}`. Repeated witness keys, such as one
/// `failure` per counterexample, are gathered into an array.
pub fn report_json(r: &Report) -> serde_json::Value {
    let bounds: Map<String, serde_json::Value> = r
        .bounds
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let mut witness = Map::new();
    for (key, value) in &r.witness {
        let repeated = key == "failure" || r.witness.iter().filter(|(k, _)| k == key).count() > 1;
        if repeated {
            witness
                .entry(key.clone())
                .or_insert_with(|| json!([]))
                .as_array_mut()
                .expect("array")
                .push(value_json(value));
        } else {
            witness.insert(key.clone(), value_json(value));
        }
    }
    json!({
        "check": r.check,
        "status": r.status.as_str(),
        "bounds": bounds,
        "witness": witness,
    })
}

pub fn reports_json(reports: &[Report]) -> serde_json::Value {
    reports.iter().map(report_json).collect()
}

/// Text form of a witness value; empty words print as `eps`.
pub fn value_text(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) if s.is_empty() => "eps".into(),
        Value::Text(s) => s.clone(),
        Value::List(items) => {
            let inner: Vec<String> = items.iter().map(value_text).collect();
            format!("[{}]", inner.join(", "))
        }
    }
}

fn witness_line(key: &str, value: &Value) -> String {
    match (key, value) {
        ("failure", Value::List(parts)) if parts.len() == 2 => {
            format!(
                "failure: {}: {}",
                value_text(&parts[0]),
                value_text(&parts[1])
            )
        }
        _ => format!("{key}: {}", value_text(value)),
    }
}

/// One line per check, witnesses indented below failing checks (or every
/// check when `verbose`), then a summary line.
pub fn reports_text(reports: &[Report], verbose: bool) -> String {
    let width = reports.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let bounds: Vec<String> = r.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let line = format!(
            "{:<7} {:<width$}  {}",
            r.status.as_str(),
            r.check,
            bounds.join(" ")
        );
        let _ = writeln!(out, "{}", line.trim_end());
        if verbose || r.status != Status::Pass {
            for (k, v) in &r.witness {
                let _ = writeln!(out, "        {}", witness_line(k, v));
            }
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} passed, {} failed, {} skipped",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    out
}
