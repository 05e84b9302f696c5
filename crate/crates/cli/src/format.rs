//! The edge-list text format.
//!
//! UTF-8 lines; `#` starts a comment; `vertex <id>` declares an isolated
//! vertex; `edge <id> <id>` adds one edge (repeating a line adds a parallel
//! edge, `edge x x` adds a loop). Identifiers are whitespace-free tokens.
//! Vertices referenced by edges are created on first sight.

use arcgraph::{MultiGraph, VertexId};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A multigraph together with the external names of its vertices.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub graph: MultiGraph,
    pub names: BTreeMap<VertexId, String>,
}

impl NamedGraph {
    /// Wraps a graph whose vertices are named by their numeric ids.
    pub fn from_graph(graph: MultiGraph) -> NamedGraph {
        let names = graph.vertex_ids().map(|v| (v, v.0.to_string())).collect();
        NamedGraph { graph, names }
    }

    pub fn name_of(&self, v: VertexId) -> String {
        self.names.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().find(|(_, n)| n.as_str() == name).map(|(&v, _)| v)
    }
}

pub fn parse_graph(text: &str) -> Result<NamedGraph, ParseError> {
    let mut graph = MultiGraph::new();
    let mut ids: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut names: BTreeMap<VertexId, String> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(ParseError {
                        line: line_no,
                        message: format!("expected 'vertex <id>', found '{line}'"),
                    });
                }
                let name = tokens[1];
                if !ids.contains_key(name) {
                    let v = graph.add_vertex();
                    ids.insert(name.to_string(), v);
                    names.insert(v, name.to_string());
                }
            }
            "edge" => {
                if tokens.len() != 3 {
                    return Err(ParseError {
                        line: line_no,
                        message: format!("expected 'edge <id> <id>', found '{line}'"),
                    });
                }
                let mut endpoint = |name: &str| {
                    *ids.entry(name.to_string()).or_insert_with(|| {
                        let v = graph.add_vertex();
                        names.insert(v, name.to_string());
                        v
                    })
                };
                let u = endpoint(tokens[1]);
                let v = endpoint(tokens[2]);
                graph.add_edge(u, v);
            }
            other => {
                return Err(ParseError {
                    line: line_no,
                    message: format!("unknown directive '{other}'"),
                });
            }
        }
    }
    Ok(NamedGraph { graph, names })
}

/// Writes the graph back out: isolated vertices first, then the edges in id
/// order. Parsing the output reproduces the graph up to id relabeling.
pub fn serialize_graph(g: &NamedGraph) -> String {
    let mut out = String::new();
    let mut incident: BTreeMap<VertexId, bool> =
        g.graph.vertex_ids().map(|v| (v, false)).collect();
    for (_, u, v) in g.graph.edges() {
        incident.insert(u, true);
        incident.insert(v, true);
    }
    for (v, has_edge) in &incident {
        if !has_edge {
            out.push_str(&format!("vertex {}\n", g.name_of(*v)));
        }
    }
    for (_, u, v) in g.graph.edges() {
        out.push_str(&format!("edge {} {}\n", g.name_of(u), g.name_of(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_graph("edge a b\nedge b c\n").unwrap();
        assert_eq!(g.graph.vertex_count(), 3);
        assert_eq!(g.graph.edge_count(), 2);

        let lp = parse_graph("edge a a\n").unwrap();
        assert_eq!(lp.graph.loop_count(), 1);

        let double = parse_graph("edge a b\nedge a b\n").unwrap();
        assert_eq!(double.graph.vertex_count(), 2);
        assert_eq!(double.graph.edge_count(), 2);
    }

    #[test]
    fn comments_and_vertices() {
        let g = parse_graph("# a triangle and a spare point\nedge a b # one\nedge b c\nedge c a\nvertex z\n").unwrap();
        assert_eq!(g.graph.vertex_count(), 4);
        assert_eq!(g.graph.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("edge a b\nedge oops\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_graph("verteks a\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn serialize_round_trip() {
        let text = "vertex lonely\nedge a b\nedge a b\nedge b c\nedge c c\n";
        let g = parse_graph(text).unwrap();
        let again = parse_graph(&serialize_graph(&g)).unwrap();
        assert!(arcgraph::iso::is_isomorphic(&g.graph, &again.graph));
        assert_eq!(g.graph.vertex_count(), again.graph.vertex_count());
    }

    #[test]
    fn round_trip_over_the_corpus() {
        for name in arcgraph::atlas::NAMED {
            let g = NamedGraph::from_graph(arcgraph::atlas::named(name).unwrap());
            let again = parse_graph(&serialize_graph(&g)).unwrap();
            assert!(arcgraph::iso::is_isomorphic(&g.graph, &again.graph), "{name}");
        }
        for g in arcgraph::atlas::enumerate_connected_multigraphs(4).unwrap() {
            let named = NamedGraph::from_graph(g);
            let again = parse_graph(&serialize_graph(&named)).unwrap();
            assert!(arcgraph::iso::is_isomorphic(&named.graph, &again.graph));
        }
    }
}
