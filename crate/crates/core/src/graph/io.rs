//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! Blank lines are skipped on parse. Serialization emits edges sorted with
//! `u < v` and always ends with a newline.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            return Err(Error::EdgeCountMismatch {
                declared: m,
                found: edges.len() + 1,
            });
        }
        let (u, v) = parse_pair(line, content, "edge")?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {w} out of range for order {n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, content: &str, what: &str) -> Result<(usize, usize)> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("malformed {what}: expected two integers, got `{content}`"),
        });
    }
    let parse = |t: &str| {
        t.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("malformed {what}: `{t}` is not a non-negative integer"),
        })
    };
    Ok((parse(tokens[0])?, parse(tokens[1])?))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
