//! Graph export: Graphviz DOT with `r_c` vertex names, and a JSON edge list.

use std::fmt::Write as _;

use polyhex_core::{Graph, GraphError, NanotubeSpec};
use serde::{Deserialize, Serialize};

/// JSON form of a built nanotube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub kind: String,
    pub m: u32,
    pub n: u32,
    pub vertex_count: usize,
    /// Canonical `(low, high)` pairs in sorted order.
    pub edges: Vec<(usize, usize)>,
}

pub fn to_json(spec: &NanotubeSpec, g: &Graph) -> GraphJson {
    GraphJson {
        kind: spec.kind().name().to_string(),
        m: spec.m(),
        n: spec.n(),
        vertex_count: g.vertex_count(),
        edges: g.edges().to_vec(),
    }
}

/// Rebuilds and revalidates the graph from its JSON form.
pub fn graph_from_json(json: &GraphJson) -> Result<Graph, GraphError> {
    Graph::new(json.vertex_count, json.edges.iter().copied())
}

/// Undirected DOT; every vertex is named `"row_col"` and every edge is
/// listed once.
pub fn to_dot(spec: &NanotubeSpec, g: &Graph) -> String {
    let label = |v: usize| {
        let (r, c) = spec.row_col(v);
        format!("\"{r}_{c}\"")
    };
    let mut out = String::new();
    writeln!(out, "graph \"{spec}\" {{").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {};", label(v)).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {} -- {};", label(u), label(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyhex_core::{build_nanotube, NanotubeKind};

    #[test]
    fn smallest_zigzag_dot() {
        let spec = NanotubeSpec::new(NanotubeKind::Zigzag, 2, 1).unwrap();
        let dot = to_dot(&spec, &build_nanotube(&spec));
        assert!(dot.starts_with("graph \"TUZC6[2,1]\" {\n  \"0_0\";\n"));
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert!(dot.contains("  \"0_2\" -- \"1_2\";\n"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn json_round_trip() {
        let spec = NanotubeSpec::new(NanotubeKind::Armchair, 3, 2).unwrap();
        let g = build_nanotube(&spec);
        let text = serde_json::to_string(&to_json(&spec, &g)).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(graph_from_json(&back).unwrap(), g);
    }
}
