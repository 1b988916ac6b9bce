use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::cli::Format;

/// Where and how a command writes its result.
pub struct Sink {
    pub format: Format,
    path: Option<PathBuf>,
}

impl Sink {
    pub fn new(format: Format, path: Option<PathBuf>) -> Self {
        Self { format, path }
    }

    pub fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    pub fn json<T: Serialize>(&self, value: &T) -> Result<()> {
        let mut w = self.writer()?;
        serde_json::to_writer_pretty(&mut w, value)?;
        writeln!(w)?;
        w.flush()?;
        Ok(())
    }

    /// Writes CSV through `csv`, or JSON otherwise.
    pub fn table<T: Serialize>(&self, value: &T, csv: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
        match self.format {
            Format::Json => self.json(value),
            Format::Csv => {
                let mut w = self.writer()?;
                csv(&mut w)?;
                w.flush()?;
                Ok(())
            }
        }
    }
}

/// Parses `2`, `-0.5`, `3i`, `0.5+14.13i`, `1e-3-2i`.
pub fn parse_complex(text: &str) -> Result<num_complex::Complex<f64>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || anyhow::anyhow!("cannot parse complex number {text:?}");
    let Some(body) = t.strip_suffix('i') else {
        return Ok(num_complex::Complex::new(t.parse().map_err(|_| bad())?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => Ok(num_complex::Complex::new(
            body[..k].parse().map_err(|_| bad())?,
            imag(&body[k..])?,
        )),
        None => Ok(num_complex::Complex::new(0.0, imag(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let c = |s| parse_complex(s).unwrap();
        assert_eq!(c("2"), num_complex::Complex::new(2.0, 0.0));
        assert_eq!(c("2+0i"), num_complex::Complex::new(2.0, 0.0));
        assert_eq!(c("0.5+14.134725i"), num_complex::Complex::new(0.5, 14.134725));
        assert_eq!(c("-0.5-3i"), num_complex::Complex::new(-0.5, -3.0));
        assert_eq!(c("1e-3-2i"), num_complex::Complex::new(1e-3, -2.0));
        assert_eq!(c("-i"), num_complex::Complex::new(0.0, -1.0));
        assert_eq!(c("2.5e1i"), num_complex::Complex::new(0.0, 25.0));
        assert!(parse_complex("2+").is_err());
        assert!(parse_complex("abc").is_err());
    }
}
