//! Two-column `x,y` point files.
//!
//! One point per line, `,` separated, `\n` or `\r\n` endings. An optional
//! first line `x,y` is skipped and blank lines are ignored.

use std::fmt;
use std::io::{self, Write};

use linefit::{PairedSample, Point};

#[derive(Debug, Clone, PartialEq)]
pub enum CsvError {
    NotUtf8,
    Malformed { line: usize, reason: String },
    TooFewPoints(usize),
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CsvError::NotUtf8 => f.write_str("input is not valid UTF-8"),
            CsvError::Malformed { line, reason } => write!(f, "line {line}: {reason}"),
            CsvError::TooFewPoints(n) => write!(f, "need at least 2 points, got {n}"),
        }
    }
}

impl std::error::Error for CsvError {}

fn parse_field(field: &str, line: usize, name: &str) -> Result<f64, CsvError> {
    let value: f64 = field.trim().parse().map_err(|_| CsvError::Malformed {
        line,
        reason: format!("{name} value '{}' is not a number", field.trim()),
    })?;
    if !value.is_finite() {
        return Err(CsvError::Malformed {
            line,
            reason: format!("{name} value '{}' is not finite", field.trim()),
        });
    }
    Ok(value)
}

pub fn parse_csv(bytes: &[u8]) -> Result<PairedSample, CsvError> {
    let text = std::str::from_utf8(bytes).map_err(|_| CsvError::NotUtf8)?;
    let mut points = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let row = raw.strip_suffix('\r').unwrap_or(raw);
        if row.trim().is_empty() {
            continue;
        }
        let first = !seen_content;
        seen_content = true;
        let fields: Vec<&str> = row.split(',').collect();
        if first && fields.len() == 2 && fields[0].trim() == "x" && fields[1].trim() == "y" {
            continue;
        }
        if fields.len() != 2 {
            return Err(CsvError::Malformed {
                line,
                reason: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        points.push(Point::new(
            parse_field(fields[0], line, "x")?,
            parse_field(fields[1], line, "y")?,
        ));
    }
    if points.len() < 2 {
        return Err(CsvError::TooFewPoints(points.len()));
    }
    Ok(PairedSample::from_points(&points).expect("validated points"))
}

/// Writes a header and one row per point; `{}` on `f64` round-trips exactly.
pub fn write_csv(p: &PairedSample, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "x,y")?;
    for q in p.points() {
        writeln!(out, "{},{}", q.x, q.y)?;
    }
    Ok(())
}
