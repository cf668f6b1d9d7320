use std::fmt::Write;

use crate::error::{Error, Result};

use super::Graph;

/// Parses `p edge <n> <m>` followed by `m` lines `e <u> <v>` (1-based ids).
/// Lines starting with `c` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: line_no, message };
        match fields.as_slice() {
            ["p", "edge", n, m] => {
                if graph.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                let n: u32 = n.parse().map_err(|_| err(format!("bad vertex count {n:?}")))?;
                let m: usize = m.parse().map_err(|_| err(format!("bad edge count {m:?}")))?;
                graph = Some((Graph::empty(n), m));
            }
            ["e", u, v] => {
                let Some((g, _)) = graph.as_mut() else {
                    return Err(err("edge before problem line".into()));
                };
                let u: u32 = u.parse().map_err(|_| err(format!("bad vertex {u:?}")))?;
                let v: u32 = v.parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
                if !g.has_vertex(u) || !g.has_vertex(v) {
                    return Err(Error::InvariantViolation(format!("line {line_no}: edge {u}-{v} names a missing vertex")));
                }
                if u == v {
                    return Err(Error::InvariantViolation(format!("line {line_no}: self-loop on {u}")));
                }
                if !g.add_edge(u, v) {
                    return Err(Error::InvariantViolation(format!("line {line_no}: parallel edge {u}-{v}")));
                }
                seen += 1;
            }
            _ => return Err(err(format!("unrecognised line {line:?}"))),
        }
    }
    let (g, m) = graph.ok_or(Error::Parse { line: 0, message: "missing `p edge` line".into() })?;
    if seen != m {
        return Err(Error::Parse { line: 0, message: format!("header declares {m} edges, found {seen}") });
    }
    Ok(g)
}

/// Inverse of [`parse_graph`] for graphs on `1..=n`.
pub fn write_graph(g: &Graph) -> String {
    let n = g.vertices().max().unwrap_or(0);
    let mut out = format!("p edge {n} {}\n", g.edge_count());
    for e in g.edges() {
        let (u, v) = e.endpoints();
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
