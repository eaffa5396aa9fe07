//! Square matrices from JSON (array of rows) or headerless CSV.

use std::io::Read;

use gentrig::SquareMatrix;
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// Reads `path`, or stdin when `path` is `-`.
pub fn read_matrix(path: &str) -> CliResult<SquareMatrix> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read '{path}': {e}")))?
    };
    parse_matrix(&text)
}

/// JSON when the text starts with `[` or `{`, CSV otherwise. A JSON object
/// is accepted if it carries a `matrix` key, so `expm` output reads back in.
pub fn parse_matrix(text: &str) -> CliResult<SquareMatrix> {
    let trimmed = text.trim_start();
    let rows = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        json_rows(trimmed)?
    } else {
        csv_rows(trimmed)?
    };
    if rows.is_empty() {
        return Err(CliError::Input("matrix is empty".into()));
    }
    if rows.len() != rows[0].len() {
        return Err(CliError::Input(format!(
            "matrix is not square: {} rows of {} entries",
            rows.len(),
            rows[0].len()
        )));
    }
    SquareMatrix::from_rows(&rows).map_err(|e| CliError::Input(e.to_string()))
}

fn json_rows(text: &str) -> CliResult<Vec<Vec<f64>>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid JSON matrix: {e}")))?;
    let rows = match &value {
        Value::Object(map) => map
            .get("matrix")
            .ok_or_else(|| CliError::Input("JSON object has no 'matrix' key".into()))?,
        other => other,
    };
    let Value::Array(rows) = rows else {
        return Err(CliError::Input("matrix must be an array of rows".into()));
    };
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let Value::Array(entries) = row else {
                return Err(CliError::Input(format!("row {i} is not an array")));
            };
            entries
                .iter()
                .map(|v| {
                    v.as_f64()
                        .ok_or_else(|| CliError::Input(format!("row {i}: '{v}' is not a number")))
                })
                .collect()
        })
        .collect()
}

fn csv_rows(text: &str) -> CliResult<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .map_err(|_| CliError::Input(format!("row {i}: '{field}' is not a number")))
            })
            .collect::<CliResult<Vec<f64>>>()?;
        rows.push(row);
    }
    Ok(rows)
}
