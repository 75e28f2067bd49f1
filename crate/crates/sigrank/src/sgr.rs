//! The `.sgr` signed edge-list format.
//!
//! ```text
//! # unbalanced C4
//! 4 4
//! 0 1 +
//! 0 3 -
//! 1 2 +
//! 2 3 +
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. The header gives
//! the vertex and edge counts; each edge line is `u v s` with `u < v` and
//! `s` one of `+` or `-`.

use std::fmt::Write as _;

use sigrank_core::{Sign, SignedGraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SgrError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("malformed header at line {line}: expected `n m`")]
    BadHeader { line: usize },
    #[error("malformed edge at line {line}: expected `u v s` with s in {{+, -}}")]
    BadEdge { line: usize },
    #[error("self-loop at line {line}")]
    SelfLoop { line: usize },
    #[error("edge endpoints out of order at line {line}: need u < v")]
    Unordered { line: usize },
    #[error("vertex {vertex} out of range at line {line} (n = {order})")]
    OutOfRange { line: usize, vertex: usize, order: usize },
    #[error("duplicate edge at line {line}")]
    Duplicate { line: usize },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse(text: &str) -> Result<SignedGraph, SgrError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(SgrError::MissingHeader)?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums[..] else {
        return Err(SgrError::BadHeader { line: hline });
    };
    let n: usize = n.parse().map_err(|_| SgrError::BadHeader { line: hline })?;
    let m: usize = m.parse().map_err(|_| SgrError::BadHeader { line: hline })?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v, s] = fields[..] else {
            return Err(SgrError::BadEdge { line });
        };
        let u: usize = u.parse().map_err(|_| SgrError::BadEdge { line })?;
        let v: usize = v.parse().map_err(|_| SgrError::BadEdge { line })?;
        let sign = match s {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            _ => return Err(SgrError::BadEdge { line }),
        };
        if u == v {
            return Err(SgrError::SelfLoop { line });
        }
        for vertex in [u, v] {
            if vertex >= n {
                return Err(SgrError::OutOfRange { line, vertex, order: n });
            }
        }
        if u > v {
            return Err(SgrError::Unordered { line });
        }
        if !seen.insert((u, v)) {
            return Err(SgrError::Duplicate { line });
        }
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(SgrError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(SignedGraph::new(n, edges).expect("edges were validated line by line"))
}

/// Canonical text: header, then edges in sorted order, no comments.
pub fn format(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.sign.as_char()).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# C4 with one negative edge\n4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 -\n";
        let g = parse(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.sign(0, 3), Some(Sign::Negative));
        let canonical = format(&g);
        assert_eq!(canonical, "4 4\n0 1 +\n0 3 -\n1 2 +\n2 3 +\n");
        assert_eq!(parse(&canonical).unwrap(), g);
    }

    #[test]
    fn empty_graph() {
        let g = parse("3 0\n").unwrap();
        assert_eq!(g, SignedGraph::edgeless(3));
        assert_eq!(format(&g), "3 0\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse("# nothing\n"), Err(SgrError::MissingHeader));
        assert_eq!(parse("3\n"), Err(SgrError::BadHeader { line: 1 }));
        assert_eq!(parse("3 2\n0 1 +\n0 1 -\n"), Err(SgrError::Duplicate { line: 3 }));
        assert_eq!(parse("3 1\n\n1 1 +\n"), Err(SgrError::SelfLoop { line: 3 }));
        assert_eq!(
            parse("3 1\n0 3 +\n"),
            Err(SgrError::OutOfRange {
                line: 2,
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(parse("3 1\n2 1 +\n"), Err(SgrError::Unordered { line: 2 }));
        assert_eq!(parse("3 1\n0 1 x\n"), Err(SgrError::BadEdge { line: 2 }));
        assert_eq!(
            parse("3 2\n0 1 +\n"),
            Err(SgrError::EdgeCount { expected: 2, found: 1 })
        );
    }

    #[test]
    fn duplicate_message_names_the_line() {
        let err = parse("3 2\n0 1 +\n0 1 +\n").unwrap_err();
        assert_eq!(err.to_string(), "duplicate edge at line 3");
    }
}
