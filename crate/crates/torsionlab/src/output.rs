//! JSON and CSV emission with fixed float formatting, and atomic file writes.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Number, Value};
use tempfile::NamedTempFile;

use crate::error::{CliError, CliResult};

pub const SCHEMA: &str = "torsionlab/1";

/// A float with 17 significant digits, as a JSON number (`null` if not finite).
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&fmt17(x)).expect("formatted float is a JSON number"))
}

/// `x` with 17 significant digits in exponent notation.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

/// Wraps a payload as `{schema, command, ...payload}`.
pub fn document(command: &str, payload: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), Value::String(SCHEMA.into()));
    map.insert("command".into(), Value::String(command.into()));
    if let Value::Object(fields) = payload {
        map.extend(fields);
    } else {
        map.insert("result".into(), payload);
    }
    Value::Object(map)
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Writes `bytes` to a temporary file next to `path` and renames it into place.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    if !dir.is_dir() {
        return Err(CliError::io(format!("output directory {} does not exist", dir.display())));
    }
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(format!("{}: {e}", dir.display())))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::io(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}

/// CSV text from a header and rows of already formatted fields.
pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| CliError::io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}
