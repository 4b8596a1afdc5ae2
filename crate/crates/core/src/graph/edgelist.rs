//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The header holds `n m`, followed by exactly `m` lines `u v` with
//! `0 <= u < v < n`. Lines starting with `#` and blank lines are skipped.
//! The writer emits edges in ascending `(u, v)` order, one LF-terminated
//! line each.

use std::fmt::Write as _;

use super::{EdgeError, Graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("expected two nonnegative integers, found `{0}`")]
    Malformed(String),
    #[error("edge {0} {1} is not written with u < v")]
    Unordered(usize, usize),
    #[error(transparent)]
    Edge(#[from] EdgeError),
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut g = Graph::empty(n);
    let mut found = 0;
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (u, v) = parse_pair(body).ok_or_else(|| err(ParseErrorKind::Malformed(body.to_string())))?;
        found += 1;
        if found > m {
            return Err(err(ParseErrorKind::CountMismatch { declared: m, found }));
        }
        if u > v {
            return Err(err(ParseErrorKind::Unordered(u, v)));
        }
        g.try_add_edge(u, v).map_err(|e| err(e.into()))?;
    }
    if found != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::CountMismatch { declared: m, found },
        });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
