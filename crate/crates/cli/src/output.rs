//! Rendering as an aligned table, a single JSON document, or CSV.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One command result: a JSON document, flat CSV records whose fields are a
/// subset of the document's field names, and a human-readable table.
pub struct Rendered<D, R> {
    pub document: D,
    pub records: Vec<R>,
    pub table: String,
}

impl<D: Serialize, R: Serialize> Rendered<D, R> {
    pub fn emit(&self, format: Format) -> CliResult<()> {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let io = |e: std::io::Error| CliError::Output(e.to_string());
        match format {
            Format::Table => out.write_all(self.table.as_bytes()).map_err(io)?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.document)
                    .map_err(|e| CliError::Output(e.to_string()))?;
                writeln!(out).map_err(io)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                for r in &self.records {
                    w.serialize(r)
                        .map_err(|e| CliError::Output(e.to_string()))?;
                }
                w.flush().map_err(io)?;
            }
        }
        Ok(())
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for r in rows {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}
