//! The plain-text hypergraph format.
//!
//! ```text
//! # optional comment lines
//! n m
//! 0 1 2
//! ...
//! ```
//!
//! The header gives the order and the number of edges; each following line
//! is one edge as strictly increasing 0-based vertex ids. Lines starting
//! with `#` are comments and blank lines are ignored. Writing always emits
//! the canonical form: comments, header, edges in lexicographic order, LF
//! line endings.

use super::FormatError;
use crate::hypercore::{validate, Hypergraph, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgDocument {
    /// Comment text following the leading `#` of each comment line.
    pub comments: Vec<String>,
    pub hypergraph: Hypergraph,
}

impl HgDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut comments = Vec::new();
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                comments.push(comment.to_string());
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let ids = parse_ids(line, line_no)?;
            match header {
                None => {
                    let [n, m] = ids[..] else {
                        return Err(FormatError::BadHeader {
                            line: line_no,
                            reason: "expected two integers \"n m\"".into(),
                        });
                    };
                    header = Some((n, m));
                }
                Some((n, _)) => {
                    if let Some(v) = validate(n, std::slice::from_ref(&ids)).into_iter().next() {
                        return Err(FormatError::BadEdge {
                            line: line_no,
                            violation: v.at_edge(edges.len()),
                        });
                    }
                    edges.push(ids);
                    edge_lines.push(line_no);
                }
            }
        }

        let (n, m) = header.ok_or(FormatError::BadHeader {
            line: 0,
            reason: "missing header line".into(),
        })?;
        if n == 0 {
            return Err(FormatError::BadHeader { line: 0, reason: "order must be at least 1".into() });
        }
        if edges.len() != m {
            return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
        }
        // per-line checks passed, so only duplicates remain
        if let Some(v) = validate(n, &edges).into_iter().next() {
            let line = match v {
                Violation::DuplicateEdge { edge, .. } => edge_lines[edge],
                _ => 0,
            };
            return Err(FormatError::BadEdge { line, violation: v });
        }
        let hypergraph = Hypergraph::new(n, edges)?;
        Ok(HgDocument { comments, hypergraph })
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push('#');
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&write_hg(&self.hypergraph));
        out
    }
}

fn parse_ids(line: &str, line_no: usize) -> Result<Vec<usize>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| FormatError::BadToken {
                line: line_no,
                token: tok.to_string(),
            })
        })
        .collect()
}

pub fn parse_hg(text: &str) -> Result<Hypergraph, FormatError> {
    HgDocument::parse(text).map(|d| d.hypergraph)
}

pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.order(), h.size());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
