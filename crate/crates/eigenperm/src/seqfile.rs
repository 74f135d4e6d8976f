//! Text formats shared by the library and the CLI.
//!
//! Sequence files are UTF-8 with one coefficient per line in index order
//! starting at index 1; each line is an integer or a `p/q` rational. Blank
//! lines and lines starting with `#` are ignored. Permutations are written
//! as space-separated positive integers.

use std::path::Path;

use num::BigInt;

use crate::coeff::{is_integer, parse_coeff, Coeff};
use crate::error::{Error, Result};
use crate::lagrange::CountSequence;
use crate::series::TruncatedSeries;

/// Parse sequence-file text into coefficients.
pub fn parse_sequence(text: &str) -> Result<Vec<Coeff>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let c = parse_coeff(line)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        out.push(c);
    }
    Ok(out)
}

/// Parse sequence-file text that must contain only integers.
pub fn parse_integer_sequence(text: &str) -> Result<CountSequence> {
    let coeffs = parse_sequence(text)?;
    let mut terms: Vec<BigInt> = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.iter().enumerate() {
        if !is_integer(c) {
            return Err(Error::Parse(format!(
                "entry {} is {c}, but an integer sequence is required",
                i + 1
            )));
        }
        terms.push(c.numer().clone());
    }
    Ok(CountSequence::new(terms))
}

pub fn read_series(path: &Path) -> Result<TruncatedSeries> {
    let text = std::fs::read_to_string(path)?;
    Ok(TruncatedSeries::new(parse_sequence(&text)?))
}

pub fn read_count_sequence(path: &Path) -> Result<CountSequence> {
    let text = std::fs::read_to_string(path)?;
    parse_integer_sequence(&text)
}

/// Render coefficients in the sequence file format, one per line.
pub fn format_sequence(coeffs: &[Coeff]) -> String {
    let mut out = String::new();
    for c in coeffs {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}
