//! Tabular results and their CSV / JSON renderings.
//!
//! Both renderings go through [`format_sig`], so a number printed in CSV and
//! the same number in JSON always parse to the same `f64`.

use std::io::{self, Write};

use serde_json::{Map, Number, Value as Json};

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Text(String),
    /// Rounded to nine significant digits.
    Num(f64),
    /// Printed with every digit needed to round-trip; used for pinned constants.
    Exact(f64),
    Missing,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

/// Nine significant digits, fixed-point for moderate magnitudes and
/// scientific otherwise.
///
/// Rounding is done once on the exact binary value; halfway cases go to even.
pub fn format_sig(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.00000000".into();
    }
    let sci = format!("{x:.8e}");
    let (_, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        format!("{:.*}", (8 - exp) as usize, x)
    } else {
        sci
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => format_sig(*x),
            Cell::Exact(x) => format!("{x}"),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Json {
        let number = |s: String| {
            s.parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Json::Null, Json::Number)
        };
        match self {
            Cell::Int(i) => Json::from(*i),
            Cell::Text(s) => Json::String(s.clone()),
            Cell::Num(_) | Cell::Exact(_) => number(self.text()),
            Cell::Missing => Json::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// The header row is written even when there are no data rows.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> Json {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Json> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| ((*k).to_owned(), v.json()))
                    .collect();
                Json::Object(obj)
            })
            .collect();
        Json::Array(rows)
    }

    pub fn write<W: Write>(&self, format: Format, mut out: W) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.to_json())?;
                out.write_all(b"\n")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(format_sig(0.054437031234), "0.0544370312");
        assert_eq!(format_sig(-1.0), "-1.00000000");
        assert_eq!(format_sig(-0.25), "-0.250000000");
        assert_eq!(format_sig(1973.269804), "1973.26980");
        assert_eq!(format_sig(9.9999999999), "10.0000000");
        assert_eq!(format_sig(123456789.4), "123456789");
        assert_eq!(format_sig(1.5e9), "1.50000000e9");
        assert_eq!(format_sig(2.5e-7), "2.50000000e-7");
        assert_eq!(format_sig(-0.0), "0.00000000");
    }

    #[test]
    fn json_and_csv_agree() {
        let mut t = Table::new(vec!["name", "x", "y", "k"]);
        t.push(vec![
            "a,b".into(),
            Cell::Num(1.0 / 3.0),
            Cell::Missing,
            Cell::Int(-2),
        ]);
        let mut csv = Vec::new();
        t.write_csv(&mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert_eq!(csv, "name,x,y,k\n\"a,b\",0.333333333,,-2\n");
        let json = t.to_json();
        assert_eq!(
            json[0]["x"].as_f64().unwrap(),
            "0.333333333".parse::<f64>().unwrap()
        );
        assert!(json[0]["y"].is_null());
    }

    #[test]
    fn header_without_rows() {
        let t = Table::new(vec!["r", "R"]);
        let mut out = Vec::new();
        t.write(Format::Csv, &mut out).unwrap();
        assert_eq!(out, b"r,R\n");
    }
}
