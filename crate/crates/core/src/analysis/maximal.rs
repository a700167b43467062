//! Bron–Kerbosch enumeration with Tomita pivoting on bitsets.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MaximalCliques {
    /// Each clique sorted; the list sorted lexicographically.
    pub cliques: Vec<Vec<usize>>,
    /// Set when the cap stopped the enumeration early.
    pub truncated: bool,
}

struct Enumeration<'a> {
    g: &'a Graph,
    cap: usize,
    out: Vec<Vec<usize>>,
    truncated: bool,
}

impl Enumeration<'_> {
    fn visit(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if self.truncated {
            return;
        }
        if p.is_clear() {
            if x.is_clear() {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                let mut clique = r.clone();
                clique.sort_unstable();
                self.out.push(clique);
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection_count(self.g.row(u)), core::cmp::Reverse(u)))
            .expect("p is non-empty");
        let mut branch = p.clone();
        branch.difference_with(self.g.row(pivot));
        for v in branch.ones() {
            let row = self.g.row(v);
            let mut p2 = p.clone();
            p2.intersect_with(row);
            let mut x2 = x.clone();
            x2.intersect_with(row);
            r.push(v);
            self.visit(r, p2, x2);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
}

/// All maximal cliques, stopping after `cap` of them.
pub fn maximal_cliques(g: &Graph, cap: usize) -> MaximalCliques {
    let n = g.vertex_count();
    let mut e = Enumeration { g, cap, out: Vec::new(), truncated: false };
    if n > 0 {
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        e.visit(&mut Vec::new(), p, FixedBitSet::with_capacity(n));
    }
    e.out.sort();
    MaximalCliques { cliques: e.out, truncated: e.truncated }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_path() {
        let k3 = maximal_cliques(&Graph::complete(3), 10);
        assert_eq!(k3.cliques, [[0, 1, 2]]);
        let p = maximal_cliques(&Graph::path(4), 10);
        assert_eq!(p.cliques, [[0, 1], [1, 2], [2, 3]]);
        let capped = maximal_cliques(&Graph::path(4), 2);
        assert!(capped.truncated);
        assert_eq!(capped.cliques.len(), 2);
    }
}
