//! Signed edge-list text format.
//!
//! ```text
//! c optional comment lines
//! p sg <n> <m>
//! e <u> <v> <+|->
//! ```
//!
//! Vertex ids are 0-based, `u = v` is a loop, and repeated lines are parallel
//! edges. Exactly `m` edge lines must follow the header. Blank lines are
//! ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Edge, SignedGraph};
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p sg <n> <m>` header")]
    MissingHeader,
    #[error("malformed header")]
    MalformedHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("edge line before header")]
    EdgeBeforeHeader,
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("bad sign token `{0}`, expected `+` or `-`")]
    BadSign(String),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn integer(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, ParseErrorKind::BadInteger(tok.to_string())))
}

pub fn parse(text: &str) -> Result<SignedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&kind) = tokens.first() else {
            continue;
        };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                if tokens.len() != 4 || tokens[1] != "sg" {
                    return Err(err(line, ParseErrorKind::MalformedHeader));
                }
                header = Some((integer(line, tokens[2])?, integer(line, tokens[3])?));
            }
            "e" => {
                let Some((n, m)) = header else {
                    return Err(err(line, ParseErrorKind::EdgeBeforeHeader));
                };
                if tokens.len() != 4 {
                    return Err(err(line, ParseErrorKind::MalformedEdge));
                }
                let u = integer(line, tokens[1])?;
                let v = integer(line, tokens[2])?;
                for vertex in [u, v] {
                    if vertex >= n {
                        return Err(err(
                            line,
                            ParseErrorKind::VertexOutOfRange {
                                vertex,
                                vertex_count: n,
                            },
                        ));
                    }
                }
                let sign = match tokens[3] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(err(line, ParseErrorKind::BadSign(other.to_string()))),
                };
                if edges.len() == m {
                    return Err(err(
                        line,
                        ParseErrorKind::EdgeCountMismatch {
                            declared: m,
                            found: m + 1,
                        },
                    ));
                }
                edges.push(Edge::new(u, v, sign));
            }
            other => return Err(err(line, ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }
    let Some((n, m)) = header else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingHeader));
    };
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    Ok(SignedGraph::new(n, edges).expect("ids validated while parsing"))
}

/// Canonical text: header then one edge line per edge, no comments.
pub fn emit(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p sg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.sign).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_negative_edge() {
        let g = parse("p sg 2 1\ne 0 1 -\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 1, Sign::Negative)]);
    }

    #[test]
    fn canonical_round_trip() {
        let text = "p sg 3 4\ne 0 1 +\ne 0 1 +\ne 1 1 -\ne 2 0 -\n";
        assert_eq!(emit(&parse(text).unwrap()), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse("c hello\n\np sg 1 1\nc mid\ne 0 0 +\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn out_of_range_reports_line() {
        let e = parse("p sg 2 1\ne 0 2 +\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(
            e.kind,
            ParseErrorKind::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            }
        );
    }

    #[test]
    fn error_kinds() {
        let kind = |s: &str| parse(s).unwrap_err().kind;
        assert_eq!(kind("e 0 1 +\n"), ParseErrorKind::EdgeBeforeHeader);
        assert_eq!(kind("c only\n"), ParseErrorKind::MissingHeader);
        assert_eq!(kind(""), ParseErrorKind::MissingHeader);
        assert_eq!(kind("p cnf 2 1\n"), ParseErrorKind::MalformedHeader);
        assert_eq!(kind("p sg 2\n"), ParseErrorKind::MalformedHeader);
        assert_eq!(
            kind("p sg 2 0\np sg 2 0\n"),
            ParseErrorKind::DuplicateHeader
        );
        assert_eq!(kind("p sg x 0\n"), ParseErrorKind::BadInteger("x".into()));
        assert_eq!(
            kind("p sg 2 1\ne 0 1 *\n"),
            ParseErrorKind::BadSign("*".into())
        );
        assert_eq!(
            kind("p sg 2 1\ne 0 1 +1\n"),
            ParseErrorKind::BadSign("+1".into())
        );
        assert_eq!(kind("p sg 2 1\ne 0 1\n"), ParseErrorKind::MalformedEdge);
        assert_eq!(
            kind("p sg 2 2\ne 0 1 +\n"),
            ParseErrorKind::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        );
        assert_eq!(
            kind("p sg 2 0\ne 0 1 +\n"),
            ParseErrorKind::EdgeCountMismatch {
                declared: 0,
                found: 1
            }
        );
        assert_eq!(kind("x\n"), ParseErrorKind::UnknownLine("x".into()));
        assert!(matches!(
            kind("p sg 2 1\ne 99999999999999999999999 1 +\n"),
            ParseErrorKind::BadInteger(_)
        ));
    }
}
