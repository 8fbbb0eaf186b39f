use std::fs;
use std::io::Write;

use serde::Serialize;

use crate::{Failure, Format, OutputOpts};

/// A report that can be rendered as JSON or as CSV rows.
pub trait Report: Serialize {
    fn csv_header(&self) -> Vec<String>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn emit<R: Report>(report: &R, opts: &OutputOpts) -> Result<(), Failure> {
    let text = match opts.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Failure::input(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::input(e.to_string());
            writer.write_record(report.csv_header()).map_err(io)?;
            for row in report.csv_rows() {
                writer.write_record(row).map_err(io)?;
            }
            let bytes = writer.into_inner().map_err(|e| Failure::input(e.to_string()))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
    };
    match &opts.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::input(e.to_string()))
        }
    }
}

/// Matrix rows as CSV records.
pub fn matrix_rows(m: &flagpos::exact::Mat) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

pub fn matrix_header(m: &flagpos::exact::Mat) -> Vec<String> {
    (1..=m.cols()).map(|j| format!("c{j}")).collect()
}
