use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Adjacency-list JSON: `{"n": .., "edges": [[u, v], ..]}` with `u < v`,
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.vcount(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        SimpleGraph::from_edges(self.n, &edges)
    }

    pub fn parse(text: &str) -> Result<SimpleGraph> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::GraphJson(e.to_string()))?;
        raw.to_graph()
    }
}

impl SimpleGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph json serialises")
    }
}

/// DOT rendering; with `orders`, vertex labels read `5(o=6)`.
pub fn to_dot(graph: &SimpleGraph, name: &str, orders: Option<&[u64]>) -> String {
    let mut out = String::new();
    let id: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    writeln!(out, "graph {id} {{").unwrap();
    for v in 0..graph.vcount() {
        match orders {
            Some(o) => writeln!(out, "  {v} [label=\"{v}(o={})\"];", o[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
