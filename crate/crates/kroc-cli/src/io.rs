//! CSV ingestion and emission for the `score,label` schema.
//!
//! Input files must carry the exact header `score,label`, scores must be
//! finite decimal floats, and labels must be 0 or 1 (1 = target class).
//! UTF-8 with LF or CRLF line endings is accepted.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use kroc::{ClassLabel, LabeledSample};

use crate::CliError;

pub fn read_sample(path: &Path) -> Result<LabeledSample, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::parse(format!("cannot open {}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);

    let headers = reader
        .headers()
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    if headers.len() != 2 || &headers[0] != "score" || &headers[1] != "label" {
        return Err(CliError::parse(format!(
            "{}: expected header \"score,label\", got \"{}\"",
            path.display(),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut entries = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        let line = row + 2; // header is line 1
        if record.len() != 2 {
            return Err(CliError::parse(format!(
                "{} line {line}: expected 2 fields, got {}",
                path.display(),
                record.len()
            )));
        }
        let score: f64 = record[0].trim().parse().map_err(|_| {
            CliError::parse(format!(
                "{} line {line}: score \"{}\" is not a decimal float",
                path.display(),
                &record[0]
            ))
        })?;
        if !score.is_finite() {
            return Err(CliError::parse(format!(
                "{} line {line}: score must be finite, got {score}",
                path.display()
            )));
        }
        let label = match record[1].trim() {
            "1" => ClassLabel::Target,
            "0" => ClassLabel::Complement,
            other => {
                return Err(CliError::parse(format!(
                    "{} line {line}: label must be 0 or 1, got \"{other}\"",
                    path.display()
                )))
            }
        };
        entries.push((score, label));
    }
    Ok(LabeledSample::new(entries))
}

pub fn write_sample<W: Write>(writer: &mut W, sample: &LabeledSample) -> std::io::Result<()> {
    writeln!(writer, "score,label")?;
    for &(score, label) in sample.entries() {
        writeln!(writer, "{score},{}", label.to_binary())?;
    }
    Ok(())
}

pub fn create_file(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", path.display())))
}
