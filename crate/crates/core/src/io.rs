//! Plain-text edge lists and DOT export.
//!
//! Edge-list format: optional `#` comment lines, a header `n m`, then exactly
//! `m` lines `u v`. Written output always uses single spaces and LF endings.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, UndirectedGraph, VertexId};

#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Directed(DirectedGraph),
    Undirected(UndirectedGraph),
}

struct RawEdgeList {
    vertex_count: usize,
    edges: Vec<(usize, VertexId, VertexId)>,
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("{what}: missing {name}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("{what}: bad {name} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::parse(line_no, format!("{what}: trailing fields")));
    }
    Ok((a, b))
}

fn parse_raw(text: &str) -> Result<RawEdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line_no,
                format!("more than the {m} edges announced in the header"),
            ));
        }
        let (u, v) = parse_pair(line_no, line, "edge")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex id out of range in edge {u} {v} (n = {n})"),
            ));
        }
        edges.push((line_no, u, v));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok(RawEdgeList {
        vertex_count: n,
        edges,
    })
}

pub fn parse_edge_list(text: &str, directed: bool) -> Result<ParsedGraph> {
    if directed {
        parse_directed(text).map(ParsedGraph::Directed)
    } else {
        parse_undirected(text).map(ParsedGraph::Undirected)
    }
}

pub fn parse_directed(text: &str) -> Result<DirectedGraph> {
    let raw = parse_raw(text)?;
    Ok(DirectedGraph::from_edges(
        raw.vertex_count,
        raw.edges.into_iter().map(|(_, u, v)| (u, v)),
    ))
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    let raw = parse_raw(text)?;
    let mut g = UndirectedGraph::new(raw.vertex_count);
    for (line_no, u, v) in raw.edges {
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop {u} {v}")));
        }
        g.add_edge(u, v)
            .map_err(|_| Error::parse(line_no, format!("duplicate edge {u} {v}")))?;
    }
    Ok(g)
}

/// Serializes live edges in [`DirectedGraph::edges`] order. The header counts
/// vertex slots, so removed vertices show up as isolated ids.
pub fn write_directed(g: &DirectedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (_, u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering with one statement per edge instance.
pub fn to_dot(g: &DirectedGraph, labels: Option<&HashMap<VertexId, String>>) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..g.vertex_count() {
        if !g.is_vertex_alive(v) {
            continue;
        }
        match labels.and_then(|l| l.get(&v)) {
            Some(label) => writeln!(out, "    {v} [label=\"{}\"];", dot_escape(label)).unwrap(),
            None => writeln!(out, "    {v};").unwrap(),
        }
    }
    for (_, u, v) in g.edges() {
        writeln!(out, "    {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::CONTRACTION_EXAMPLE;

    #[test]
    fn empty_edge_set() {
        let g = parse_directed("2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn contraction_example_file() {
        let g = parse_directed(CONTRACTION_EXAMPLE).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.indegree(2), 1);
        assert_eq!(write_directed(&g).lines().count(), 11);
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_directed("# a comment\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.edge_multiset(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn undirected_self_loop_rejected() {
        let err = parse_edge_list("3 1\n0 0\n", false).unwrap_err();
        assert_eq!(err, Error::parse(2, "self-loop 0 0"));
    }

    #[test]
    fn undirected_duplicate_rejected() {
        let err = parse_undirected("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_directed("x 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_directed("2 1\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_directed("2 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_directed("2 1\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_directed("2 1\n0 1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_directed(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn dot_output() {
        let empty = to_dot(&DirectedGraph::new(0), None);
        assert_eq!(empty, "digraph {\n}\n");

        let one = to_dot(&DirectedGraph::from_edges(2, [(0, 1)]), None);
        assert_eq!(one.matches("->").count(), 1);
        assert!(one.contains("0 -> 1;"));

        let fig = to_dot(&parse_directed(CONTRACTION_EXAMPLE).unwrap(), None);
        assert_eq!(fig.matches("->").count(), 10);

        let twice = to_dot(&DirectedGraph::from_edges(2, [(0, 1), (0, 1)]), None);
        assert_eq!(twice.matches("0 -> 1;").count(), 2);

        let labels = HashMap::from([(0, "a \"q\"".to_string())]);
        let labelled = to_dot(&DirectedGraph::new(1), Some(&labels));
        assert!(labelled.contains("0 [label=\"a \\\"q\\\"\"];"));
    }
}
