//! DIMACS and JSON edge-list export.
//!
//! Both formats number vertices `1..=n` with the `U` block first:
//! `u_i ↦ i` and `v_j ↦ h + j`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::KnodelGraph;
use crate::vertex::{Side, VertexId};

pub fn vertex_number(g: &KnodelGraph, v: VertexId) -> usize {
    match v.side {
        Side::U => v.index,
        Side::V => g.half() + v.index,
    }
}

fn numbered_edges(g: &KnodelGraph) -> Vec<[usize; 2]> {
    g.edges()
        .map(|(a, b)| [vertex_number(g, a), vertex_number(g, b)])
        .collect()
}

/// `p edge <n> <m>` followed by one `e <a> <b>` line per edge.
pub fn to_dimacs(g: &KnodelGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for [a, b] in numbered_edges(g) {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub delta: usize,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl JsonGraph {
    pub fn from_graph(g: &KnodelGraph) -> Self {
        JsonGraph { delta: g.delta(), n: g.n(), edges: numbered_edges(g) }
    }
}

/// Compact `{"delta":Δ,"n":n,"edges":[[a,b],...]}` with a trailing newline.
pub fn to_json(g: &KnodelGraph) -> String {
    let mut s = serde_json::to_string(&JsonGraph::from_graph(g)).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_w38() {
        let g = KnodelGraph::new(3, 8).unwrap();
        let text = to_dimacs(&g);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("p edge 8 12"));
        // N(u_1) = {v_1, v_2, v_4} -> 5, 6, 8
        assert_eq!(lines.clone().take(3).collect::<Vec<_>>(), vec!["e 1 5", "e 1 6", "e 1 8"]);
        assert_eq!(lines.count(), 12);
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }

    #[test]
    fn json_w416() {
        let g = KnodelGraph::new(4, 16).unwrap();
        let text = to_json(&g);
        assert!(text.starts_with("{\"delta\":4,\"n\":16,\"edges\":[[1,9],"));
        let parsed: JsonGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.edges.len(), 32);
        assert!(parsed.edges.iter().all(|[a, b]| *a <= 8 && *b > 8 && *b <= 16));
    }
}
