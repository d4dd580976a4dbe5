//! Tabular output as CSV with `# key=value` header lines, or as JSON.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Numeric columns plus the parameters that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Parameters in output order.
    pub header: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("header line {line} is not of the form '# key=value'")]
    Header { line: usize },

    #[error("row {row} has {found} fields, expected {expected}")]
    Width {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}, column '{column}': {message}")]
    Value {
        row: usize,
        column: String,
        message: String,
    },

    #[error("duplicate header key '{0}'")]
    DuplicateKey(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    header: BTreeMap<String, String>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            header: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        match self.header.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value,
            None => self.header.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.header
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// First non-finite value as `(row, column)`.
    pub fn first_non_finite(&self) -> Option<(usize, &str)> {
        self.rows.iter().enumerate().find_map(|(i, r)| {
            r.iter()
                .position(|v| !v.is_finite())
                .map(|j| (i, self.columns[j].as_str()))
        })
    }

    /// Writes header lines then a CSV block. Values use the shortest
    /// representation that parses back to the same `f64`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<(), TableError> {
        for (k, v) in &self.header {
            writeln!(out, "# {k}={v}")?;
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(|v| v.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), TableError> {
        let doc = JsonTable {
            header: self.header.iter().cloned().collect(),
            columns: self.columns.clone(),
            rows: self.rows.clone(),
        };
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
        Ok(())
    }

    /// Reads and validates a CSV produced by [`Table::write_csv`]: every
    /// header line is `# key=value` with a unique key, every row has one
    /// finite number per column.
    pub fn read_csv(text: &str) -> Result<Self, TableError> {
        let mut header = Vec::new();
        let mut body = 0;
        for (i, line) in text.lines().enumerate() {
            let Some(rest) = line.strip_prefix('#') else {
                break;
            };
            let (k, v) = rest
                .strip_prefix(' ')
                .and_then(|kv| kv.split_once('='))
                .ok_or(TableError::Header { line: i + 1 })?;
            if header.iter().any(|(key, _): &(String, String)| key == k) {
                return Err(TableError::DuplicateKey(k.to_string()));
            }
            header.push((k.to_string(), v.to_string()));
            body += line.len() + 1;
        }
        let mut reader = csv::ReaderBuilder::new().from_reader(&text.as_bytes()[body..]);
        let columns: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for (i, rec) in reader.records().enumerate() {
            let rec = rec.map_err(|e| match e.kind() {
                csv::ErrorKind::UnequalLengths {
                    expected_len, len, ..
                } => TableError::Width {
                    row: i + 1,
                    expected: *expected_len as usize,
                    found: *len as usize,
                },
                _ => TableError::Csv(e),
            })?;
            let row = rec
                .iter()
                .zip(&columns)
                .map(|(field, column)| {
                    let v: f64 = field.parse().map_err(|e: std::num::ParseFloatError| {
                        TableError::Value {
                            row: i + 1,
                            column: column.clone(),
                            message: e.to_string(),
                        }
                    })?;
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(TableError::Value {
                            row: i + 1,
                            column: column.clone(),
                            message: format!("non-finite value {field}"),
                        })
                    }
                })
                .collect::<Result<Vec<f64>, _>>()?;
            rows.push(row);
        }
        Ok(Self {
            header,
            columns,
            rows,
        })
    }

    /// Reads a JSON document produced by [`Table::write_json`]. Header keys
    /// come back in sorted order.
    pub fn read_json(text: &str) -> Result<Self, TableError> {
        let doc: JsonTable = serde_json::from_str(text)?;
        for (i, r) in doc.rows.iter().enumerate() {
            if r.len() != doc.columns.len() {
                return Err(TableError::Width {
                    row: i + 1,
                    expected: doc.columns.len(),
                    found: r.len(),
                });
            }
        }
        Ok(Self {
            header: doc.header.into_iter().collect(),
            columns: doc.columns,
            rows: doc.rows,
        })
    }
}
