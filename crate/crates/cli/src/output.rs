use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Command result: rows for table/csv plus a JSON payload.
pub struct Output {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// Free text printed after the table.
    pub notes: Vec<String>,
    pub ok: bool,
    /// Failed checks, reported on stderr when `ok` is false.
    pub failures: Vec<String>,
    /// Replaces `headers`/`rows` in table format only.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Output {
    pub fn new(headers: &[&str], json: Value) -> Self {
        Output {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            json,
            notes: Vec::new(),
            ok: true,
            failures: Vec::new(),
            table: None,
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json)?),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Table => {
                let (headers, rows) = match &self.table {
                    Some((h, r)) => (h, r),
                    None => (&self.headers, &self.rows),
                };
                let cols = rows
                    .iter()
                    .map(Vec::len)
                    .chain(std::iter::once(headers.len()))
                    .max()
                    .unwrap_or(0);
                let widths: Vec<usize> = (0..cols)
                    .map(|c| {
                        rows.iter()
                            .filter_map(|r| r.get(c))
                            .chain(headers.get(c))
                            .map(|s| s.chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:<w$}", w = *w))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                if !headers.is_empty() {
                    writeln!(out, "{}", line(headers))?;
                    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
                    writeln!(out, "{}", rule.join("  "))?;
                }
                for r in rows {
                    writeln!(out, "{}", line(r))?;
                }
                for n in &self.notes {
                    writeln!(out, "{n}")?;
                }
                Ok(())
            }
        }
    }
}
