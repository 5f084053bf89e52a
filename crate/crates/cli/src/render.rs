use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Rows of one command, rendered identically in every format.
///
/// Rationals and polynomials are carried as strings so that all three
/// renderings print the same digits.
pub struct Output {
    pub command: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Output {
    pub fn new(command: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self {
            command: command.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn table(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.columns[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let header = self.columns.iter().map(|s| s.to_string());
        for line in std::iter::once(header.collect::<Vec<_>>()).chain(cells) {
            let padded: Vec<_> = line
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<_> = row.iter().map(|v| csv_field(&cell(v))).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "results": results,
        });
        let mut s = serde_json::to_string_pretty(&doc).unwrap();
        s.push('\n');
        s
    }
}
