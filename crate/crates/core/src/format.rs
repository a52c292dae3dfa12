//! The `p dcs` text format.
//!
//! ```text
//! # comment
//! p dcs <n> <m>
//! e <i> <j> <c>        (m lines; 1-based nodes; c is `-2`, `0.5` or `-3/2`)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{normalize, NormalizeWarning, PrecedenceGraph};
use crate::weight::Weight;

/// A parsed file before normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSystem {
    pub n: usize,
    pub edges: Vec<(usize, usize, Weight)>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_raw(text: &str) -> Result<RawSystem> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "dcs" {
                    return Err(parse_err(lineno, "expected `p dcs <n> <m>`"));
                }
                let n = fields[2].parse().map_err(|_| parse_err(lineno, "bad node count"))?;
                let m = fields[3].parse().map_err(|_| parse_err(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(lineno, "edge line before `p dcs` line"));
                };
                if fields.len() != 4 {
                    return Err(parse_err(lineno, "expected `e <i> <j> <c>`"));
                }
                let node = |s: &str| -> Result<usize> {
                    let v: usize = s.parse().map_err(|_| parse_err(lineno, format!("bad node `{s}`")))?;
                    if v == 0 || v > n {
                        return Err(parse_err(lineno, format!("node {v} out of range 1..={n}")));
                    }
                    Ok(v)
                };
                let i = node(fields[1])?;
                let j = node(fields[2])?;
                let c: Weight = fields[3].parse().map_err(|e| parse_err(lineno, format!("{e}")))?;
                edges.push((i, j, c));
            }
            other => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing `p dcs` line"));
    };
    if edges.len() != m {
        return Err(parse_err(last_line.max(1), format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(RawSystem { n, edges })
}

/// Parses and normalizes a system.
pub fn parse(text: &str) -> Result<(PrecedenceGraph, Vec<NormalizeWarning>)> {
    let raw = parse_raw(text)?;
    normalize(raw.n, raw.edges)
}

/// Canonical rendering: edges sorted by `(i, j)`, weights as integers or `p/q`.
pub fn serialize(g: &PrecedenceGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p dcs {} {}", g.node_count(), g.edge_count()).unwrap();
    for ((i, j), c) in g.edges() {
        writeln!(out, "e {i} {j} {c}").unwrap();
    }
    out
}
