//! Read-only graph6 decoding. Decoded graphs carry all-positive signs.

use std::path::Path;

use sigrank_core::SignedGraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Graph6Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("record {index}: {reason}")]
    Malformed { index: usize, reason: &'static str },
}

const HEADER: &str = ">>graph6<<";

fn sextets(bytes: &[u8]) -> Result<Vec<u8>, &'static str> {
    bytes
        .iter()
        .map(|&b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err("byte outside the printable graph6 range")
            }
        })
        .collect()
}

/// Decodes one graph6 record (without trailing newline).
pub fn decode(record: &str) -> Result<SignedGraph, &'static str> {
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    if record.starts_with(':') || record.starts_with(';') {
        return Err("sparse6 records are not supported");
    }
    if record.starts_with('&') {
        return Err("digraph6 records are not supported");
    }
    let data = sextets(record.as_bytes())?;
    let (n, rest) = match data.as_slice() {
        [] => return Err("empty record"),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err("truncated vertex count");
            }
            let n = rest[..6].iter().fold(0usize, |acc, &x| acc << 6 | usize::from(x));
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err("truncated vertex count");
            }
            let n = rest[..3].iter().fold(0usize, |acc, &x| acc << 6 | usize::from(x));
            (n, &rest[3..])
        }
        [x, rest @ ..] => (usize::from(*x), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err("edge data has the wrong length for the vertex count");
    }
    let bit = |k: usize| rest[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SignedGraph::all_positive(n, pairs).expect("decoded pairs are simple"))
}

/// Decodes every non-empty line; errors name the 1-based record index.
pub fn parse_all(text: &str) -> Result<Vec<SignedGraph>, Graph6Error> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| decode(l).map_err(|reason| Graph6Error::Malformed { index: i + 1, reason }))
        .collect()
}

pub fn read_file(path: &Path) -> Result<Vec<SignedGraph>, Graph6Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Graph6Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_all(&text)
}
