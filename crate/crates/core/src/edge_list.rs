//! Line-oriented edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is `n m`, followed by exactly `m` lines `u v`
//! with 0-based indices. Blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: malformed: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {edge}")]
    Duplicate { line: usize, edge: Edge },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let malformed = || EdgeListError::Malformed { line, text: text.to_string() };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    let b = it.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header)?;

    let mut g = Graph::new(n);
    let mut seen = HashSet::with_capacity(m);
    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::OutOfRange { line, vertex, n });
            }
        }
        let edge = Edge::new(u, v).map_err(|_| EdgeListError::Loop { line, vertex: u })?;
        if !seen.insert(edge) {
            return Err(EdgeListError::Duplicate { line, edge });
        }
        g.add_edge(u, v).expect("validated above");
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { declared: m, found });
    }
    Ok(g)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}
