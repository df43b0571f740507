//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 1-based vertices. Blank lines are ignored.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Subgraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Header `(n, m)` and the 1-based edge pairs.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than {m} edges")));
        }
        edges.push(parse_pair(line, text)?);
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok((n, edges))
}

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let (n, edges) = parse_edge_list(text)?;
    Digraph::from_one_based(n, &edges)
}

/// A subgraph file; its header must name the parent's vertex count.
pub fn parse_subgraph<'g>(parent: &'g Digraph, text: &str) -> Result<Subgraph<'g>> {
    let (n, edges) = parse_edge_list(text)?;
    if n != parent.n() {
        return Err(parse_err(
            1,
            format!("subgraph has {n} vertices, parent has {}", parent.n()),
        ));
    }
    Subgraph::from_one_based_pairs(parent, &edges)
}

fn format_pairs(n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("{n} {}\n", pairs.len());
    for (u, v) in pairs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_graph(g: &Digraph) -> String {
    format_pairs(g.n(), &g.edges_one_based())
}

pub fn format_subgraph(h: &Subgraph<'_>) -> String {
    format_pairs(h.parent().n(), &h.edges_one_based())
}
