//! Report emission: JSON as-is, or a flat key/value TSV with identical
//! semantic content. A closed stdout (downstream `head`, etc.) ends the
//! process quietly instead of panicking.

use serde_json::Value;
use std::io::{ErrorKind, Write};

#[derive(Clone, Copy)]
pub enum Format {
    Json,
    Tsv,
}

pub fn emit(format: Format, value: &Value) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(value).unwrap()),
        Format::Tsv => {
            let mut rows = Vec::new();
            flatten("", value, &mut rows);
            rows.iter()
                .try_for_each(|(k, v)| writeln!(out, "{k}\t{v}"))
        }
    };
    if let Err(e) = result {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing report: {e}");
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
