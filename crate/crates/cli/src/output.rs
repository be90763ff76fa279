use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde_json::{json, Map, Value};

use crate::input::output_path;
use crate::{Format, VERSION};

pub enum Mode {
    Table,
    Json,
    Csv(Option<PathBuf>),
}

impl Mode {
    pub fn of(f: &Format) -> Self {
        match (&f.csv, f.json) {
            (Some(path), _) => Mode::Csv(path.clone()),
            (None, true) => Mode::Json,
            (None, false) => Mode::Table,
        }
    }
}

/// Start of every JSON record: tool version, command and the full input.
pub fn record(command: &str, input: Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("gassoc"));
    m.insert("version".into(), json!(VERSION));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), input);
    m
}

/// First line of every table.
pub fn title(command: &str, input: &Value) -> String {
    format!("gassoc {VERSION} {command} {input}\n")
}

/// Key/value table with aligned keys.
pub fn table(title: String, rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = title;
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

/// Column table with a header row.
pub fn grid(title: String, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = title;
    out += &line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

/// CSV with a header row; `version` and `input` columns are appended to
/// every row.
pub fn csv(header: &[&str], rows: &[Vec<String>], input: &Value) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut head: Vec<&str> = header.to_vec();
    head.extend(["version", "input"]);
    w.write_record(&head)?;
    let input = input.to_string();
    for row in rows {
        let mut r: Vec<&str> = row.iter().map(String::as_str).collect();
        r.extend([VERSION, input.as_str()]);
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Writes to stdout, or to the CSV file named in `mode`.
pub fn emit(mode: &Mode, text: &str) -> Result<()> {
    match mode {
        Mode::Csv(Some(path)) => {
            let path = output_path(path);
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn json_line(m: Map<String, Value>) -> String {
    Value::Object(m).to_string() + "\n"
}

pub fn report_error(kind: &str, message: &str) {
    let line = json!({ "error": kind, "message": message, "version": VERSION });
    eprintln!("{line}");
}
