//! Line-based graph files.
//!
//! ```text
//! # comment
//! graph schauz_gadget
//! v 0 erasers=1
//! v 1
//! e 0 1
//! ```

use std::fmt::Write;

use super::{EraserMap, Graph};
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("bad vertex id `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<(Graph, EraserMap)> {
    let mut name = None;
    let mut declared: Vec<Option<u32>> = Vec::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("graph") => {
                let rest: Vec<&str> = toks.collect();
                if rest.is_empty() {
                    return Err(parse_err(line, "`graph` needs a name"));
                }
                name = Some(rest.join(" "));
            }
            Some("v") => {
                let id = parse_id(
                    toks.next().ok_or_else(|| parse_err(line, "`v` needs an id"))?,
                    line,
                )?;
                if id >= MAX_VERTICES {
                    return Err(parse_err(
                        line,
                        format!("vertex id {id} exceeds the {MAX_VERTICES}-vertex budget"),
                    ));
                }
                let mut erasers = 0;
                for attr in toks {
                    let (key, value) = attr
                        .split_once('=')
                        .ok_or_else(|| parse_err(line, format!("bad attribute `{attr}`")))?;
                    if key != "erasers" {
                        return Err(parse_err(line, format!("unknown attribute `{key}`")));
                    }
                    erasers = value
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad eraser count `{value}`")))?;
                }
                if declared.len() <= id {
                    declared.resize(id + 1, None);
                }
                if declared[id].is_some() {
                    return Err(parse_err(line, format!("duplicate vertex id {id}")));
                }
                declared[id] = Some(erasers);
            }
            Some("e") => {
                let u = parse_id(
                    toks.next().ok_or_else(|| parse_err(line, "`e` needs two ids"))?,
                    line,
                )?;
                let v = parse_id(
                    toks.next().ok_or_else(|| parse_err(line, "`e` needs two ids"))?,
                    line,
                )?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v, line));
            }
            Some(other) => {
                return Err(parse_err(line, format!("unknown record `{other}`")));
            }
            None => unreachable!("blank lines skipped"),
        }
    }

    if let Some(gap) = declared.iter().position(Option::is_none) {
        return Err(parse_err(
            0,
            format!("vertex ids must be 0..n-1; id {gap} is missing"),
        ));
    }
    let erasers = EraserMap(declared.into_iter().map(|e| e.unwrap_or(0)).collect());
    let mut g = Graph::new(erasers.len())?;
    for (u, v, line) in edges {
        for w in [u, v] {
            if w >= g.n() {
                return Err(parse_err(line, format!("edge endpoint {w} undeclared")));
            }
        }
        g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
    }
    g.set_name(name);
    Ok((g, erasers))
}

pub fn serialize_graph(g: &Graph, erasers: &EraserMap) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        writeln!(out, "graph {name}").unwrap();
    }
    for v in 0..g.n() {
        match erasers.get(v) {
            0 => writeln!(out, "v {v}").unwrap(),
            k => writeln!(out, "v {v} erasers={k}").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Graphviz digraph text with one node per vertex labelled `id (erasers)`.
/// Each undirected edge is written once, low id first, drawn without arrows.
pub fn export_dot(g: &Graph, erasers: &EraserMap) -> String {
    let mut out = String::new();
    let name = g.name().unwrap_or("G").replace(|c: char| !c.is_alphanumeric(), "_");
    writeln!(out, "digraph {name} {{").unwrap();
    out.push_str("  edge [dir=none];\n");
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{v} ({})\"];", erasers.get(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    #[test]
    fn smallest_edge() {
        let (g, e) = parse_graph("v 0\nv 1\ne 0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(e, EraserMap(vec![0, 0]));
    }

    #[test]
    fn self_loop_rejected() {
        let err = parse_graph("e 0 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, ref message } if message.contains("self-loop")));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("v 0\nv 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, ref message } if message.contains("duplicate")));
        let err = parse_graph("# c\nv 0\ne 0 3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, ref message } if message.contains("undeclared")));
        let err = parse_graph("v 0\nx 1 2").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("v 0 erasers=abc").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_graph("v 0\nv 2").is_err());
    }

    #[test]
    fn attributes_and_comments() {
        let text = "# demo\ngraph demo\n  v 0 erasers=2\nv 1\n\ne 1 0\n";
        let (g, e) = parse_graph(text).unwrap();
        assert_eq!(g.name(), Some("demo"));
        assert_eq!(e.0, vec![2, 0]);
        assert_eq!(serialize_graph(&g, &e), "graph demo\nv 0 erasers=2\nv 1\ne 0 1\n");
    }

    #[test]
    fn gadget_round_trips() {
        let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
        let (g2, e2) = parse_graph(&serialize_graph(&g, &e)).unwrap();
        assert_eq!(g, g2);
        assert_eq!(e, e2);
    }

    #[test]
    fn dot_shapes() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let dot = export_dot(&k2, &EraserMap::zeros(2));
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 2);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 1);

        let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
        let dot = export_dot(&g, &e);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 10);

        let empty = Graph::new(0).unwrap();
        assert_eq!(export_dot(&empty, &EraserMap::zeros(0)), "digraph G {\n  edge [dir=none];\n}\n");
    }
}
