//! Record serialization: CSV, JSON lines and gnuplot columns.
//!
//! Floating-point fields are written with 17 significant digits so that a
//! value read back is bit-identical to the value written. Non-finite values
//! are written as `nan`/`inf` in CSV and `null` in JSON.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::sweep::{FigureColumns, SweepRow};

/// Column names shared by the CSV header and the JSON keys.
pub const FIELDS: [&str; 11] = ["n", "l", "m", "Z", "p", "kind", "method", "regime", "value", "error", "note"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" | "jsonl" | "json-lines" => Ok(Format::JsonLines),
            other => Err(Error::Config(format!("unknown format '{other}' (expected csv or json-lines)"))),
        }
    }
}

/// One output line.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub n: u32,
    pub l: u32,
    pub m: i32,
    pub z: f64,
    /// `None` for Shannon entropies.
    pub p: Option<f64>,
    pub kind: String,
    pub method: String,
    pub regime: String,
    pub value: f64,
    pub error: f64,
    pub note: String,
}

impl From<&SweepRow> for OutputRecord {
    fn from(r: &SweepRow) -> Self {
        OutputRecord {
            n: r.state.n(),
            l: r.state.l(),
            m: r.state.m(),
            z: r.state.charge(),
            p: r.p,
            kind: r.kind.to_string(),
            method: r.method.to_string(),
            regime: r.regime.to_string(),
            value: r.value,
            error: r.error_estimate,
            note: r.note.clone(),
        }
    }
}

/// `x` with 17 significant digits.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}").to_ascii_lowercase()
    }
}

fn parse_float(field: &str, s: &str) -> Result<f64> {
    s.trim().parse().map_err(|_| Error::Record(format!("field {field}: '{s}' is not a number")))
}

fn parse_int<T: FromStr>(field: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Record(format!("field {field}: '{s}' is not an integer")))
}

impl OutputRecord {
    fn csv_fields(&self) -> [String; 11] {
        [
            self.n.to_string(),
            self.l.to_string(),
            self.m.to_string(),
            format_float(self.z),
            self.p.map(format_float).unwrap_or_default(),
            self.kind.clone(),
            self.method.clone(),
            self.regime.clone(),
            format_float(self.value),
            format_float(self.error),
            self.note.clone(),
        ]
    }

    fn from_csv_fields(f: &csv::StringRecord) -> Result<Self> {
        if f.len() != FIELDS.len() {
            return Err(Error::Record(format!("expected {} fields, found {}", FIELDS.len(), f.len())));
        }
        Ok(OutputRecord {
            n: parse_int("n", &f[0])?,
            l: parse_int("l", &f[1])?,
            m: parse_int("m", &f[2])?,
            z: parse_float("Z", &f[3])?,
            p: if f[4].trim().is_empty() { None } else { Some(parse_float("p", &f[4])?) },
            kind: f[5].to_string(),
            method: f[6].to_string(),
            regime: f[7].to_string(),
            value: parse_float("value", &f[8])?,
            error: parse_float("error", &f[9])?,
            note: f[10].to_string(),
        })
    }

    /// A JSON object with the same keys as the CSV header.
    pub fn to_json_line(&self) -> String {
        // numbers are spliced in as raw tokens to keep all 17 digits
        let num = |x: f64| if x.is_finite() { format_float(x) } else { "null".to_string() };
        let text = |s: &str| Value::String(s.to_string()).to_string();
        format!(
            "{{\"n\":{},\"l\":{},\"m\":{},\"Z\":{},\"p\":{},\"kind\":{},\"method\":{},\"regime\":{},\"value\":{},\"error\":{},\"note\":{}}}",
            self.n,
            self.l,
            self.m,
            num(self.z),
            self.p.map_or("null".to_string(), num),
            text(&self.kind),
            text(&self.method),
            text(&self.regime),
            num(self.value),
            num(self.error),
            text(&self.note),
        )
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let v: Map<String, Value> = serde_json::from_str(line).map_err(|e| Error::Record(e.to_string()))?;
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Record(format!("missing key {k}")));
        let float = |k: &str| -> Result<f64> {
            match get(k)? {
                Value::Null => Ok(f64::NAN),
                x => x.as_f64().ok_or_else(|| Error::Record(format!("key {k} is not a number"))),
            }
        };
        let int = |k: &str| -> Result<i64> { get(k)?.as_i64().ok_or_else(|| Error::Record(format!("key {k} is not an integer"))) };
        let text = |k: &str| -> Result<String> {
            get(k)?.as_str().map(str::to_string).ok_or_else(|| Error::Record(format!("key {k} is not a string")))
        };
        let narrow = |k: &str, x: i64| Error::Record(format!("key {k} out of range: {x}"));
        let (n, l, m) = (int("n")?, int("l")?, int("m")?);
        Ok(OutputRecord {
            n: u32::try_from(n).map_err(|_| narrow("n", n))?,
            l: u32::try_from(l).map_err(|_| narrow("l", l))?,
            m: i32::try_from(m).map_err(|_| narrow("m", m))?,
            z: float("Z")?,
            p: if get("p")?.is_null() { None } else { Some(float("p")?) },
            kind: text("kind")?,
            method: text("method")?,
            regime: text("regime")?,
            value: float("value")?,
            error: float("error")?,
            note: text("note")?,
        })
    }
}

/// Streams records in one format; the CSV header is written on creation.
pub struct RecordWriter<W: Write> {
    inner: Inner<W>,
}

enum Inner<W: Write> {
    Csv(csv::Writer<W>),
    Json(W),
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format) -> Result<Self> {
        let inner = match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
                w.write_record(FIELDS)?;
                Inner::Csv(w)
            }
            Format::JsonLines => Inner::Json(out),
        };
        Ok(RecordWriter { inner })
    }

    pub fn write(&mut self, record: &OutputRecord) -> Result<()> {
        match &mut self.inner {
            Inner::Csv(w) => w.write_record(record.csv_fields())?,
            Inner::Json(w) => writeln!(w, "{}", record.to_json_line())?,
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        match &mut self.inner {
            Inner::Csv(w) => w.flush()?,
            Inner::Json(w) => w.flush()?,
        }
        Ok(())
    }
}

/// Parses what [`RecordWriter`] wrote.
pub fn read_records<R: BufRead>(input: R, format: Format) -> Result<Vec<OutputRecord>> {
    match format {
        Format::Csv => {
            let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
            let header = r.headers()?.clone();
            if header.iter().ne(FIELDS) {
                return Err(Error::Record(format!("unexpected header {:?}", header.iter().collect::<Vec<_>>())));
            }
            r.records().map(|f| OutputRecord::from_csv_fields(&f?)).collect()
        }
        Format::JsonLines => input
            .lines()
            .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
            .map(|l| OutputRecord::from_json_line(&l?))
            .collect(),
    }
}

/// Whitespace-separated columns under a `#` header, readable by gnuplot.
pub fn write_gnuplot<W: Write>(mut out: W, title: impl fmt::Display, cols: &FigureColumns) -> Result<()> {
    writeln!(out, "# {title}")?;
    writeln!(out, "# {}", cols.header.join(" "))?;
    for row in &cols.rows {
        let line: Vec<String> = row.iter().map(|&x| format_float(x)).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// The same columns as CSV.
pub fn write_columns_csv<W: Write>(out: W, cols: &FigureColumns) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(&cols.header)?;
    for row in &cols.rows {
        w.write_record(row.iter().map(|&x| format_float(x)))?;
    }
    w.flush()?;
    Ok(())
}
