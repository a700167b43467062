//! Directed versions of the conjugacy and order superpower graphs. Both
//! relations are reflexive and transitive, and their comparability graphs
//! are the undirected supergraphs.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::Graph;
use crate::group::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    reach: Vec<FixedBitSet>,
}

impl Preorder {
    /// Reflexive closure of `arc`.
    pub fn from_relation(n: usize, arc: impl Fn(usize, usize) -> bool) -> Preorder {
        let reach = (0..n)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(x);
                for y in (0..n).filter(|&y| arc(x, y)) {
                    row.insert(y);
                }
                row
            })
            .collect();
        Preorder { reach }
    }

    pub fn len(&self) -> usize {
        self.reach.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reach.is_empty()
    }

    pub fn arc(&self, x: usize, y: usize) -> bool {
        self.reach[x].contains(y)
    }

    pub fn is_reflexive(&self) -> bool {
        self.reach.iter().enumerate().all(|(x, row)| row.contains(x))
    }

    /// Every row contains the rows it reaches, i.e. one closure step adds nothing.
    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// A triple `x -> y -> z` without `x -> z`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for (x, row) in self.reach.iter().enumerate() {
            for y in row.ones() {
                if let Some(z) = self.reach[y].difference(row).next() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }
}

/// `x -> y` when some conjugate of `y` is a power of `x`.
pub fn conjugacy_power_preorder(g: &Group) -> Result<Preorder> {
    let classes = g.conjugacy_classes()?;
    let ids = Group::class_ids(&classes, g.order());
    let reach = g
        .elements()
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(g.order());
            for p in g.powers(x) {
                for &z in &classes[ids[p]].members {
                    row.insert(z);
                }
            }
            row
        })
        .collect();
    Ok(Preorder { reach })
}

/// `x -> y` when `o(y) | o(x)`.
pub fn order_power_preorder(g: &Group) -> Preorder {
    let orders: Vec<u64> = g.elements().map(|x| g.element_order(x)).collect();
    Preorder::from_relation(g.order(), |x, y| orders[x] % orders[y] == 0)
}

pub fn comparability_graph(p: &Preorder) -> Graph {
    let n = p.len();
    let mut g = Graph::empty(n);
    for x in 0..n {
        for y in p.reach[x].ones() {
            g.add_edge(x, y);
        }
    }
    g
}
