//! JSON and CSV rendering with 17 significant digits for every float.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::error::CliResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    List(Vec<f64>),
    Matrix(Vec<Vec<f64>>),
}

pub type Record = Vec<(&'static str, Field)>;

/// A command result: scalar fields plus, for tabulations, a list of rows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub fields: Record,
    pub rows: Option<Vec<Record>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// `{:.16e}` keeps 17 significant digits, enough to round-trip any f64.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    // arbitrary_precision keeps the digits exactly as written
    Value::Number(format_f64(x).parse::<Number>().expect("valid JSON number"))
}

fn json_field(f: &Field) -> Value {
    match f {
        Field::Num(x) => json_num(*x),
        Field::Int(i) => Value::from(*i),
        Field::Bool(b) => Value::Bool(*b),
        Field::Text(s) => Value::String(s.clone()),
        Field::List(v) => Value::Array(v.iter().map(|&x| json_num(x)).collect()),
        Field::Matrix(rows) => Value::Array(
            rows.iter()
                .map(|r| Value::Array(r.iter().map(|&x| json_num(x)).collect()))
                .collect(),
        ),
    }
}

fn json_record(r: &Record) -> Map<String, Value> {
    r.iter()
        .map(|(k, f)| (k.to_string(), json_field(f)))
        .collect()
}

pub fn to_json(report: &Report) -> Value {
    let mut map = json_record(&report.fields);
    if let Some(rows) = &report.rows {
        map.insert(
            "rows".into(),
            Value::Array(rows.iter().map(|r| Value::Object(json_record(r))).collect()),
        );
    }
    Value::Object(map)
}

/// Flattens lists to `key_i` and matrices to `key_i_j` columns.
fn csv_cells(r: &Record) -> (Vec<String>, Vec<String>) {
    let mut header = Vec::new();
    let mut cells = Vec::new();
    for (k, f) in r {
        match f {
            Field::Num(x) => {
                header.push(k.to_string());
                cells.push(format_f64(*x));
            }
            Field::Int(i) => {
                header.push(k.to_string());
                cells.push(i.to_string());
            }
            Field::Bool(b) => {
                header.push(k.to_string());
                cells.push(b.to_string());
            }
            Field::Text(s) => {
                header.push(k.to_string());
                cells.push(s.clone());
            }
            Field::List(v) => {
                for (i, x) in v.iter().enumerate() {
                    header.push(format!("{k}_{i}"));
                    cells.push(format_f64(*x));
                }
            }
            Field::Matrix(rows) => {
                for (i, row) in rows.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        header.push(format!("{k}_{i}_{j}"));
                        cells.push(format_f64(*x));
                    }
                }
            }
        }
    }
    (header, cells)
}

/// Tabulations write one line per row; everything else is a single row
/// under a header of field names.
pub fn write_csv<W: Write>(report: &Report, out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    match &report.rows {
        Some(rows) => {
            for (i, r) in rows.iter().enumerate() {
                let (header, cells) = csv_cells(r);
                if i == 0 {
                    w.write_record(&header)?;
                }
                w.write_record(&cells)?;
            }
        }
        None => {
            let (header, cells) = csv_cells(&report.fields);
            w.write_record(&header)?;
            w.write_record(&cells)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_report<W: Write>(report: &Report, format: Format, mut out: W) -> CliResult<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &to_json(report))?;
            writeln!(out)?;
        }
        Format::Csv => write_csv(report, out)?,
    }
    Ok(())
}
