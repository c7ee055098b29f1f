//! Report records, printed as `key=value` lines or as one JSON object per
//! line.
//!
//! Text mode writes scalar fields as `key=value` in insertion order. A
//! field holding a list of objects becomes one line per element, `key`
//! followed by that element's `name=value` pairs. Records are separated by
//! a blank line.

use std::io::{self, Write};

use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Default)]
pub struct Record(Map<String, Value>);

impl Record {
    /// A record opening with the command name and the tool version.
    pub fn new(command: &str) -> Self {
        let mut r = Record::default();
        r.set("command", command);
        r.set("version", VERSION);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

fn write_text(out: &mut impl Write, record: &Record) -> io::Result<()> {
    for (key, value) in &record.0 {
        match value {
            Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                for row in rows {
                    let cells: Vec<String> = row
                        .as_object()
                        .expect("checked above")
                        .iter()
                        .map(|(k, v)| format!("{k}={}", scalar(v)))
                        .collect();
                    writeln!(out, "{key} {}", cells.join(" "))?;
                }
            }
            _ => writeln!(out, "{key}={}", scalar(value))?,
        }
    }
    Ok(())
}

pub struct Printer {
    json: bool,
    first: bool,
}

impl Printer {
    pub fn new(json: bool) -> Self {
        Printer { json, first: true }
    }

    pub fn is_json(&self) -> bool {
        self.json
    }

    pub fn emit(&mut self, record: Record) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        if self.json {
            writeln!(out, "{}", record.into_value())?;
        } else {
            if !self.first {
                writeln!(out)?;
            }
            write_text(&mut out, &record)?;
        }
        self.first = false;
        out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_layout() {
        let mut r = Record::new("classify");
        r.set("k", 6).set("verts", json!([0, 2]));
        r.set("edge", json!([{"e": "0-3", "after": 4}, {"e": "1-3", "after": 4}]));
        let mut buf = Vec::new();
        write_text(&mut buf, &r).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let expected = format!(
            "command=classify\nversion={VERSION}\nk=6\nverts=0,2\nedge e=0-3 after=4\nedge e=1-3 after=4\n"
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn empty_lists_print_as_empty_values() {
        let mut r = Record::default();
        r.set("found", json!([]));
        let mut buf = Vec::new();
        write_text(&mut buf, &r).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "found=\n");
    }
}
