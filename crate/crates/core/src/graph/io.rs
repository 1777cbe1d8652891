//! Text formats: edge lists and Graphviz DOT.
//!
//! Edge list: first line `n`, then one `u v` pair per line, 0-indexed, with
//! pairs written `u < v` in ascending order.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads the edge-list format. Blank lines and `#` comments are skipped;
/// pairs may appear in any order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected vertex count, found '{header}'")))?;
    let mut g = Graph::new(n);
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(no, format!("expected 'u v', found '{line}'")));
        };
        let u: usize = a.parse().map_err(|_| parse_err(no, format!("bad vertex '{a}'")))?;
        let v: usize = b.parse().map_err(|_| parse_err(no, format!("bad vertex '{b}'")))?;
        if u == v || u >= n || v >= n {
            return Err(parse_err(no, format!("invalid edge ({u}, {v}) for n = {n}")));
        }
        if !g.add_edge(u, v) {
            return Err(parse_err(no, format!("duplicate edge ({u}, {v})")));
        }
    }
    Ok(g)
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
