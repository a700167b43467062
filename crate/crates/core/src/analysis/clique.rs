//! Exact maximum clique by branch and bound. Candidates are greedily
//! coloured at every node and the colour count bounds the clique that can
//! still be completed; vertices are relabelled by a degeneracy order first.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CLIQUE_CAP: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Clique {
    pub size: usize,
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
}

/// Vertices in reverse removal order of min-degree peeling, ties broken by
/// the smaller index.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

struct Search {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    fn expand(&mut self, mut candidates: FixedBitSet) {
        let mut uncoloured = candidates.clone();
        let mut vertices = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = class.ones().next() {
                class.set(v, false);
                class.difference_with(&self.adj[v]);
                uncoloured.set(v, false);
                vertices.push(v);
                colours.push(colour);
            }
        }
        for i in (0..vertices.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = vertices[i];
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }
}

pub fn clique_number(g: &Graph) -> Result<Clique> {
    let n = g.vertex_count();
    if n > CLIQUE_CAP {
        return Err(Error::CapExceeded { what: "clique search", size: n, cap: CLIQUE_CAP });
    }
    if n == 0 {
        return Ok(Clique { size: 0, vertices: Vec::new() });
    }
    let order = degeneracy_order(g);
    let mut position = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            for u in g.neighbors(v) {
                row.insert(position[u]);
            }
            row
        })
        .collect();
    let mut search = Search { adj, best: Vec::new(), current: Vec::new() };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);
    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    Ok(Clique { size: vertices.len(), vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(clique_number(&Graph::complete(7)).unwrap().size, 7);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap().size, 2);
        assert_eq!(clique_number(&Graph::empty(3)).unwrap().size, 1);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap().size, 0);
        let mut g = Graph::cycle(6);
        g.add_edge(0, 2);
        let c = clique_number(&g).unwrap();
        assert_eq!(c.vertices, [0, 1, 2]);
    }

    #[test]
    fn cap() {
        assert!(clique_number(&Graph::empty(CLIQUE_CAP + 1)).is_err());
    }
}
