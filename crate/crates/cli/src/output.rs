//! Rendering of serializable reports as JSON, CSV or aligned text.
//!
//! CSV and text are both derived from the JSON value, so their fields match
//! the JSON output: nested objects flatten to dotted keys, arrays of scalars
//! join with spaces and arrays of arrays join with `;`.

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let nested = items.iter().any(Value::is_array);
            let sep = if nested { ";" } else { " " };
            items.iter().map(scalar).collect::<Vec<_>>().join(sep)
        }
        other => other.to_string(),
    }
}

/// Flattens an object into `(key, value)` pairs, sorted by key.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    walk("", v, &mut out);
    out
}

pub fn csv_rows(rows: &[Vec<(String, String)>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = rows.first() {
        w.write_record(first.iter().map(|(k, _)| k))?;
    }
    for r in rows {
        w.write_record(r.iter().map(|(_, v)| v))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn text(pairs: &[(String, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Renders a single report object.
pub fn render<T: Serialize>(value: &T, format: Format) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&v)? + "\n",
        Format::Csv => csv_rows(&[flatten(&v)])?,
        Format::Text => text(&flatten(&v)),
    })
}
