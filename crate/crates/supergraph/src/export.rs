//! DOT and JSON adjacency-list output for built graphs.

use std::fmt::Write;

use serde::Serialize;
use supergraph_core::supergraph::SuperGraph;

/// Undirected DOT graph; vertex labels are `index/order/class`.
pub fn to_dot(sg: &SuperGraph) -> String {
    let mut out = String::new();
    let g = sg.graph();
    writeln!(out, "graph \"{}({})\" {{", sg.name(), sg.group_name()).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label=\"{v}/{}/{}\"];", sg.orders()[v], sg.class_ids()[v]).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub order: u64,
    pub class: usize,
    pub neighbors: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct AdjacencyList {
    pub group: String,
    pub graph: String,
    pub kind: &'static str,
    pub rel: &'static str,
    pub class_cliques: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<Vertex>,
}

pub fn adjacency_list(sg: &SuperGraph) -> AdjacencyList {
    let g = sg.graph();
    AdjacencyList {
        group: sg.group_name().to_string(),
        graph: sg.name(),
        kind: sg.kind().as_str(),
        rel: sg.rel().as_str(),
        class_cliques: sg.class_cliques(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        vertices: (0..g.vertex_count())
            .map(|v| Vertex {
                id: v,
                order: sg.orders()[v],
                class: sg.class_ids()[v],
                neighbors: g.neighbors(v).collect(),
            })
            .collect(),
    }
}

pub fn to_json(sg: &SuperGraph) -> String {
    let mut s = serde_json::to_string_pretty(&adjacency_list(sg)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use supergraph_core::catalog::symmetric;
    use supergraph_core::supergraph::{build_graph, GraphKind, RelKind};

    #[test]
    fn dot_counts() {
        let s3 = symmetric(3).unwrap();
        let sg = build_graph(&s3, GraphKind::Power, RelKind::Conjugacy).unwrap();
        let dot = to_dot(&sg);
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.starts_with("graph \"CSPow(S3)\""));
    }

    #[test]
    fn json_is_symmetric() {
        let s3 = symmetric(3).unwrap();
        let sg = build_graph(&s3, GraphKind::Commuting, RelKind::Order).unwrap();
        let list = adjacency_list(&sg);
        for v in &list.vertices {
            for &u in &v.neighbors {
                assert!(list.vertices[u].neighbors.contains(&v.id));
            }
        }
        assert_eq!(list.edge_count, 9);
    }
}
