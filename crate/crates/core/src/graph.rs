//! Simple undirected graphs on `0..n` with bitset adjacency rows.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { rows: alloc::vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for (v, row) in g.rows.iter_mut().enumerate() {
            row.insert_range(..);
            row.set(v, false);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::complete(n);
        for (v, row) in g.rows.iter_mut().enumerate() {
            row.difference_with(&self.rows[v]);
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Edge-subset test, with the first edge of `self` missing from `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> core::result::Result<(), (usize, usize)> {
        match self.edges().find(|&(u, v)| !other.has_edge(u, v)) {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// Outcome of [`graph_equal`]: `None` for equal edge sets, otherwise the
/// lexicographically first pair on which they disagree.
pub type Difference = Option<(usize, usize)>;

/// Compares two graphs on the same vertex set.
pub fn graph_equal(a: &Graph, b: &Graph) -> Result<Difference> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::Mismatch(alloc::format!("{} vs {} vertices", a.vertex_count(), b.vertex_count())));
    }
    for u in 0..a.vertex_count() {
        if a.rows[u] != b.rows[u] {
            let mut diff = a.rows[u].clone();
            diff.symmetric_difference_with(&b.rows[u]);
            if let Some(v) = diff.ones().find(|&v| v > u) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(3).edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        assert_eq!(Graph::cycle(5).complement().edge_count(), 5);
    }

    #[test]
    fn equality_witness() {
        let a = Graph::path(3);
        let mut b = a.clone();
        assert_eq!(graph_equal(&a, &b).unwrap(), None);
        b.add_edge(0, 2);
        assert_eq!(graph_equal(&a, &b).unwrap(), Some((0, 2)));
        assert!(graph_equal(&a, &Graph::empty(4)).is_err());
    }

    #[test]
    fn induced_subgraph() {
        let g = Graph::cycle(5);
        let h = g.induced(&[0, 1, 2]);
        assert_eq!(h, Graph::path(3));
    }
}
