//! Graph parameters and structure used by the theorem checks.

mod chains;
mod clique;
mod holes;
mod maximal;
mod preorder;

use alloc::vec::Vec;

use crate::graph::Graph;

pub use chains::{
    clique_number_order_superenhanced, clique_number_order_superpower, fibre_sizes, maximal_chains, DivisorChain,
};
pub use clique::{clique_number, Clique, CLIQUE_CAP};
pub use holes::{find_odd_antihole, find_odd_hole, HOLE_LENGTH_CAP, HOLE_VERTEX_CAP};
pub use maximal::{maximal_cliques, MaximalCliques};
pub use preorder::{comparability_graph, conjugacy_power_preorder, order_power_preorder, Preorder};

pub use crate::graph::graph_equal;

pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|v| g.degree(v) + 1 == n)
}

/// Vertices joined to every other vertex.
pub fn dominant_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::supergraph::{build_graph, GraphKind, RelKind};

    #[test]
    fn dominants() {
        let q8 = generalized_quaternion(3).unwrap();
        let g = build_graph(&q8, GraphKind::Power, RelKind::Order).unwrap();
        assert!(is_complete(g.graph()));
        assert_eq!(dominant_vertices(g.graph()).len(), 8);

        let c6 = cyclic(6).unwrap();
        let g = build_graph(&c6, GraphKind::Power, RelKind::Equality).unwrap();
        assert_eq!(dominant_vertices(g.graph()), [0, 1, 5]);

        let d4 = dihedral(4).unwrap();
        let g = build_graph(&d4, GraphKind::Commuting, RelKind::Equality).unwrap();
        assert_eq!(dominant_vertices(g.graph()), d4.center());
    }
}
