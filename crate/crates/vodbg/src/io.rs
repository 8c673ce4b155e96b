//! Read-set input parsing: FASTA, one read per line, or one (K+1)-mer
//! per line.

use std::io::BufRead;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// FASTA: description lines ignored, sequence lines of a record
    /// concatenated; one read per record.
    Fasta,
    /// Plain text, one read per line.
    Reads,
    /// Plain text, one (K+1)-mer per line; skips k-mer extraction.
    Kmers,
}

impl std::str::FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fasta" => Ok(InputFormat::Fasta),
            "reads" => Ok(InputFormat::Reads),
            "kmers" => Ok(InputFormat::Kmers),
            other => Err(Error::Input(format!(
                "unknown input format {other:?} (expected fasta, reads or kmers)"
            ))),
        }
    }
}

/// Parse reads (or k-mer lines) from a buffered source. Empty lines are
/// skipped; whitespace is trimmed.
pub fn read_sequences(source: impl BufRead, format: InputFormat) -> Result<Vec<String>> {
    let mut out = Vec::new();
    match format {
        InputFormat::Fasta => {
            let mut current = String::new();
            for line in source.lines() {
                let line = line?;
                let line = line.trim();
                if let Some(rest) = line.strip_prefix('>') {
                    let _ = rest;
                    if !current.is_empty() {
                        out.push(std::mem::take(&mut current));
                    }
                } else if !line.is_empty() {
                    current.push_str(line);
                }
            }
            if !current.is_empty() {
                out.push(current);
            }
        }
        InputFormat::Reads | InputFormat::Kmers => {
            for line in source.lines() {
                let line = line?;
                let line = line.trim();
                if !line.is_empty() {
                    out.push(line.to_string());
                }
            }
        }
    }
    Ok(out)
}
