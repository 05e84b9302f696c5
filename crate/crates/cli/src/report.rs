//! Machine-readable report documents.
//!
//! A report is a flat sequence of `key value` lines under a versioned
//! schema header. Keys are dotted paths; values are the rest of the line.
//! Documents round-trip losslessly through `parse`.

use crate::format::NamedGraph;
use arcgraph::classify::Certificate;
use arcgraph::{EdgeId, MultiGraph};
use std::fmt::Write as _;

pub const SCHEMA: &str = "arcgraph.report.v1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Doc {
    pub pairs: Vec<(String, String)>,
}

impl Doc {
    pub fn new(command: &str) -> Doc {
        let mut doc = Doc::default();
        doc.push("schema", SCHEMA);
        doc.push("command", command);
        doc
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.pairs {
            if v.is_empty() {
                let _ = writeln!(out, "{k}");
            } else {
                let _ = writeln!(out, "{k} {v}");
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Doc, String> {
        let mut doc = Doc::default();
        for line in text.lines() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            match line.split_once(' ') {
                Some((k, v)) => doc.push(k, v),
                None => doc.push(line, ""),
            }
        }
        match doc.get("schema") {
            Some(SCHEMA) => Ok(doc),
            Some(other) => Err(format!("unsupported schema '{other}'")),
            None => Err("missing schema header".to_string()),
        }
    }
}

fn edge_label(g: &NamedGraph, graph: &MultiGraph, e: EdgeId) -> String {
    match graph.endpoints(e) {
        Ok((u, v)) => format!("{}:{}-{}", e, g.name_of(u), g.name_of(v)),
        Err(_) => e.to_string(),
    }
}

/// Renders a certificate as a single replayable line. Certificates of the
/// six-point decider refer to the suppressed graph, whose surviving
/// vertices keep their original names.
pub fn certificate_string(g: &NamedGraph, cert: &Certificate) -> String {
    let base = &g.graph;
    match cert {
        Certificate::None => "none".to_string(),
        Certificate::Shape(s) => format!("shape {s}"),
        Certificate::ComponentCount(k) => format!("components {k}"),
        Certificate::BranchCutVertex(v) => format!("branch-cut-vertex {}", g.name_of(*v)),
        Certificate::BranchBlock(edges) => {
            let labels: Vec<String> = edges.iter().map(|&e| edge_label(g, base, e)).collect();
            format!("branch-block {}", labels.join(" "))
        }
        Certificate::CutSet { vertices, pieces } => {
            let names: Vec<String> = vertices.iter().map(|&v| g.name_of(v)).collect();
            format!("cut {{{}}} pieces {}", names.join(" "), pieces)
        }
        Certificate::HighDegreeVertex { vertex, degree } => {
            format!("vertex {} degree {}", g.name_of(*vertex), degree)
        }
        Certificate::ThreeLinkCycle { apex, coanchors } => format!(
            "apex {} coanchors {} {}",
            g.name_of(*apex),
            g.name_of(coanchors.0),
            g.name_of(coanchors.1)
        ),
        Certificate::TwoAnchorSplit { apex, anchor, pieces } => format!(
            "apex {} anchor {} pieces {}",
            g.name_of(*apex),
            g.name_of(*anchor),
            pieces
        ),
        Certificate::InflatedKFour(parts) => {
            let rendered: Vec<String> = parts
                .iter()
                .map(|p| p.iter().map(|&v| g.name_of(v)).collect::<Vec<_>>().join(" "))
                .collect();
            format!("parts {}", rendered.join(" | "))
        }
        Certificate::InteriorLink { link_index, edges } => {
            let labels: Vec<String> = edges.iter().map(|&e| edge_label(g, base, e)).collect();
            format!("link {} edges {}", link_index, labels.join(" "))
        }
        Certificate::LinkDegree { vertex, link_index, degree } => {
            format!("vertex {} link {} degree {}", g.name_of(*vertex), link_index, degree)
        }
        Certificate::LinkCut { link_index, vertices, pieces } => {
            let names: Vec<String> = vertices.iter().map(|&v| g.name_of(v)).collect();
            format!("link {} cut {{{}}} pieces {}", link_index, names.join(" "), pieces)
        }
        Certificate::NotSimpleEdge(e) => {
            let (h, _) = base.suppress_degree2();
            format!("edge {}", edge_label(g, &h, *e))
        }
        Certificate::WrongDegree { vertex, degree } => {
            format!("vertex {} degree {}", g.name_of(*vertex), degree)
        }
        Certificate::SmallSeparator(vs) => {
            let names: Vec<String> = vs.iter().map(|&v| g.name_of(v)).collect();
            format!("cut {{{}}}", names.join(" "))
        }
        Certificate::Bridge(e) => format!("bridge {}", edge_label(g, base, *e)),
    }
}
