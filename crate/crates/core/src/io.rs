//! Graph file formats and DOT rendering.
//!
//! Edge list: an optional header line `n <count>`, then one `u v` pair per
//! line with 0-based ids. Blank lines and lines starting with `#` are
//! skipped. Without a header the vertex count is one more than the largest
//! id seen. Repeated pairs are kept as parallel edges.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` line, then exactly `m`
//! lines `e <u> <v>` with 1-based ids.

use std::fmt::Write as _;

use crate::certificate::{CheckOutcome, Side};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("`{token}` is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_content {
                return Err(parse_err(line, "the `n` header must come before any edge"));
            }
            if tokens.len() != 2 {
                return Err(parse_err(line, "expected `n <count>`"));
            }
            declared = Some(parse_id(tokens[1], line)?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(parse_err(
                line,
                format!("expected two vertex ids, found {} tokens", tokens.len()),
            ));
        }
        let (u, v) = (parse_id(tokens[0], line)?, parse_id(tokens[1], line)?);
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(parse_err(
                    line,
                    format!("edge ({u}, {v}) is out of range for n = {n}"),
                ));
            }
        }
        pairs.push((u, v));
    }
    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, &pairs)
}

/// Writes the edge-list format with an explicit header, so isolated
/// vertices survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "n {}", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate `p` line"));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(parse_err(line, "expected `p edge <n> <m>`"));
                }
                header = Some((parse_id(tokens[2], line)?, parse_id(tokens[3], line)?, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line, "`e` line before the `p` line"));
                };
                if tokens.len() != 3 {
                    return Err(parse_err(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (parse_id(tokens[1], line)?, parse_id(tokens[2], line)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(
                        line,
                        format!("edge ({u}, {v}) is outside 1..={n}"),
                    ));
                }
                pairs.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let Some((n, m, p_line)) = header else {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing `p edge` line",
        ));
    };
    if pairs.len() != m {
        return Err(parse_err(
            p_line,
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, &pairs)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(24 + 14 * g.edge_count());
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
    }
    out
}

const X_FILL: &str = "#9ecae1";
const Y_FILL: &str = "#fdae6b";
const CYCLE_COLOR: &str = "#d62728";

/// Renders `g` as an undirected DOT graph annotated with a verified
/// outcome: bipartitions color the two sides, odd cycles highlight their
/// edges.
pub fn write_dot(g: &Graph, outcome: &CheckOutcome) -> Result<String> {
    if !outcome.verify(g) {
        return Err(Error::InvalidInput(
            "outcome does not verify against the graph".into(),
        ));
    }
    let mut out = String::new();
    out.push_str("graph G {\n");
    match outcome {
        CheckOutcome::Bipartite(bp) => {
            out.push_str("  node [style=filled];\n");
            for v in 0..g.vertex_count() {
                let fill = if bp.side(v) == Side::X {
                    X_FILL
                } else {
                    Y_FILL
                };
                let _ = writeln!(out, "  {v} [fillcolor=\"{fill}\"];");
            }
            for e in g.edges() {
                let _ = writeln!(out, "  {} -- {};", e.u, e.v);
            }
        }
        CheckOutcome::OddCycle(c) => {
            let mut on_cycle = vec![false; g.edge_count()];
            for &id in &c.edge_ids {
                on_cycle[id] = true;
            }
            for v in 0..g.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
            for e in g.edges() {
                if on_cycle[e.id] {
                    let _ = writeln!(
                        out,
                        "  {} -- {} [color=\"{CYCLE_COLOR}\", penwidth=3];",
                        e.u, e.v
                    );
                } else {
                    let _ = writeln!(out, "  {} -- {};", e.u, e.v);
                }
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
