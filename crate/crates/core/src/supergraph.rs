//! The nine B superA graphs: a base graph type A (power, enhanced power,
//! commuting) lifted along an equivalence relation B (equality, conjugacy,
//! same order). Two elements are joined when some members of their
//! B-classes are joined in A; by default every B-class also induces a
//! clique.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Elem, Group};

/// Default cap on the group order for all-pairs graph construction.
pub const GRAPH_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum GraphKind {
    Power,
    Enhanced,
    Commuting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RelKind {
    Equality,
    Conjugacy,
    Order,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Power, GraphKind::Enhanced, GraphKind::Commuting];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Enhanced => "enhanced",
            GraphKind::Commuting => "commuting",
        }
    }

    /// `Pow`, `EPow` or `Com`.
    pub fn abbreviation(self) -> &'static str {
        match self {
            GraphKind::Power => "Pow",
            GraphKind::Enhanced => "EPow",
            GraphKind::Commuting => "Com",
        }
    }
}

impl RelKind {
    pub const ALL: [RelKind; 3] = [RelKind::Equality, RelKind::Conjugacy, RelKind::Order];

    pub fn as_str(self) -> &'static str {
        match self {
            RelKind::Equality => "eq",
            RelKind::Conjugacy => "conj",
            RelKind::Order => "order",
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            RelKind::Equality => "",
            RelKind::Conjugacy => "CS",
            RelKind::Order => "OS",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for RelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" | "pow" => Ok(GraphKind::Power),
            "enhanced" | "epow" => Ok(GraphKind::Enhanced),
            "commuting" | "com" => Ok(GraphKind::Commuting),
            _ => Err(Error::Parameter(alloc::format!("unknown graph kind `{s}`"))),
        }
    }
}

impl FromStr for RelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq" | "equality" => Ok(RelKind::Equality),
            "conj" | "conjugacy" => Ok(RelKind::Conjugacy),
            "order" | "ord" => Ok(RelKind::Order),
            _ => Err(Error::Parameter(alloc::format!("unknown relation `{s}`"))),
        }
    }
}

/// Short name such as `Pow`, `CSEPow` or `OSCom`.
pub fn graph_name(kind: GraphKind, rel: RelKind) -> String {
    let mut s = String::from(rel.prefix());
    s.push_str(kind.abbreviation());
    s
}

/// Whether `<x, y>` is cyclic. Commuting elements generate an abelian
/// group of exponent `lcm(o(x), o(y))` and order `o(x) o(y) / |<x> ∩ <y>|`,
/// so the group is cyclic exactly when the intersection has order
/// `gcd(o(x), o(y))`.
pub fn generates_cyclic(g: &Group, x: Elem, y: Elem) -> bool {
    if !g.commutes(x, y) {
        return false;
    }
    let mut span_x = g.powers(x);
    span_x.sort_unstable();
    let common = g.powers(y).into_iter().filter(|p| span_x.binary_search(p).is_ok()).count() as u64;
    common == gcd(g.element_order(x), g.element_order(y))
}

fn is_power_of(g: &Group, h: Elem, x: Elem) -> bool {
    let mut p = x;
    loop {
        if p == h {
            return true;
        }
        if p == 0 {
            return false;
        }
        p = g.mul(p, x);
    }
}

/// Adjacency in the base graph of type `kind` (for `x != y`).
pub fn base_adjacent(g: &Group, kind: GraphKind, x: Elem, y: Elem) -> bool {
    match kind {
        GraphKind::Power => is_power_of(g, y, x) || is_power_of(g, x, y),
        GraphKind::Enhanced => generates_cyclic(g, x, y),
        GraphKind::Commuting => g.commutes(x, y),
    }
}

/// A partition of the element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<Vec<Elem>>,
    pub block_of: Vec<usize>,
}

impl Partition {
    fn from_blocks(blocks: Vec<Vec<Elem>>, n: usize) -> Partition {
        let mut block_of = alloc::vec![0; n];
        for (b, members) in blocks.iter().enumerate() {
            for &x in members {
                block_of[x] = b;
            }
        }
        Partition { blocks, block_of }
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// Equality gives singletons, conjugacy the conjugacy classes, order the
/// fibres of the element-order map (in increasing order).
pub fn equivalence_classes(g: &Group, rel: RelKind) -> Result<Partition> {
    g.require_enumerable("equivalence classes")?;
    let n = g.order();
    let blocks = match rel {
        RelKind::Equality => g.elements().map(|x| alloc::vec![x]).collect(),
        RelKind::Conjugacy => g.conjugacy_classes()?.into_iter().map(|c| c.members).collect(),
        RelKind::Order => {
            let mut fibres: alloc::collections::BTreeMap<u64, Vec<Elem>> = Default::default();
            for x in g.elements() {
                fibres.entry(g.element_order(x)).or_default().push(x);
            }
            fibres.into_values().collect()
        }
    };
    Ok(Partition::from_blocks(blocks, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Every equivalence class induces a clique.
    pub class_cliques: bool,
    /// Use `o(g) | o(h) or o(h) | o(g)` for the order superpower graph.
    pub divisibility_shortcut: bool,
    pub max_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { class_cliques: true, divisibility_shortcut: true, max_order: GRAPH_CAP }
    }
}

/// One of the nine graphs on a concrete group, with per-vertex labels.
#[derive(Clone, Debug)]
pub struct SuperGraph {
    group: String,
    kind: GraphKind,
    rel: RelKind,
    class_cliques: bool,
    graph: Graph,
    orders: Vec<u64>,
    class_ids: Vec<usize>,
}

impl SuperGraph {
    pub fn group_name(&self) -> &str {
        &self.group
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn rel(&self) -> RelKind {
        self.rel
    }

    pub fn class_cliques(&self) -> bool {
        self.class_cliques
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn name(&self) -> String {
        graph_name(self.kind, self.rel)
    }

    /// Element order of each vertex.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Conjugacy-class index of each vertex.
    pub fn class_ids(&self) -> &[usize] {
        &self.class_ids
    }
}

/// The base graph of type `kind`.
pub fn base_graph(g: &Group, kind: GraphKind) -> Graph {
    let n = g.order();
    let mut graph = Graph::empty(n);
    match kind {
        GraphKind::Power => {
            for x in g.elements() {
                for p in g.powers(x) {
                    graph.add_edge(x, p);
                }
            }
        }
        GraphKind::Enhanced => {
            // union of cliques on the cyclic subgroups, each visited once via
            // its least generator
            for x in g.elements() {
                let powers = g.powers(x);
                let o = powers.len() as u64;
                let least = (1..o).filter(|&j| gcd(j, o) == 1).map(|j| powers[j as usize]).min().unwrap_or(0);
                if least != x {
                    continue;
                }
                for (i, &a) in powers.iter().enumerate() {
                    for &b in &powers[i + 1..] {
                        graph.add_edge(a, b);
                    }
                }
            }
        }
        GraphKind::Commuting => {
            for x in g.elements() {
                for y in x + 1..n {
                    if g.commutes(x, y) {
                        graph.add_edge(x, y);
                    }
                }
            }
        }
    }
    graph
}

/// Lifts `base` along `partition`: `u ~ v` iff some base edge joins their
/// blocks, or (with `class_cliques`) they share a block.
pub fn lift(base: &Graph, partition: &Partition, class_cliques: bool) -> Graph {
    let n = base.vertex_count();
    let k = partition.blocks.len();
    let mut members = alloc::vec![FixedBitSet::with_capacity(n); k];
    for (b, block) in partition.blocks.iter().enumerate() {
        for &x in block {
            members[b].insert(x);
        }
    }
    let mut joined = alloc::vec![FixedBitSet::with_capacity(k); k];
    for (u, v) in base.edges() {
        let (a, b) = (partition.block_of[u], partition.block_of[v]);
        joined[a].insert(b);
        joined[b].insert(a);
    }
    if class_cliques {
        for (b, row) in joined.iter_mut().enumerate() {
            row.insert(b);
        }
    }
    let reach: Vec<FixedBitSet> = joined
        .iter()
        .map(|row| {
            let mut acc = FixedBitSet::with_capacity(n);
            for b in row.ones() {
                acc.union_with(&members[b]);
            }
            acc
        })
        .collect();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in reach[partition.block_of[u]].ones().filter(|&v| v > u) {
            out.add_edge(u, v);
        }
    }
    out
}

pub fn build_graph(g: &Group, kind: GraphKind, rel: RelKind) -> Result<SuperGraph> {
    build_graph_with(g, kind, rel, &BuildOptions::default())
}

pub fn build_graph_with(g: &Group, kind: GraphKind, rel: RelKind, options: &BuildOptions) -> Result<SuperGraph> {
    if g.order() > options.max_order {
        return Err(Error::CapExceeded { what: "graph construction", size: g.order(), cap: options.max_order });
    }
    let orders: Vec<u64> = g.elements().map(|x| g.element_order(x)).collect();
    let conj = equivalence_classes(g, RelKind::Conjugacy)?;
    let graph = match rel {
        RelKind::Order if kind == GraphKind::Power && options.divisibility_shortcut && options.class_cliques => {
            let n = g.order();
            let mut out = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if orders[u] % orders[v] == 0 || orders[v] % orders[u] == 0 {
                        out.add_edge(u, v);
                    }
                }
            }
            out
        }
        RelKind::Equality => base_graph(g, kind),
        RelKind::Conjugacy => lift(&base_graph(g, kind), &conj, options.class_cliques),
        RelKind::Order => lift(&base_graph(g, kind), &equivalence_classes(g, RelKind::Order)?, options.class_cliques),
    };
    Ok(SuperGraph {
        group: g.name().into(),
        kind,
        rel,
        class_cliques: options.class_cliques,
        graph,
        orders,
        class_ids: conj.block_of,
    })
}

/// Adjacency of two elements in a supergraph without building it. For
/// conjugacy this walks the class orbit of `y` only, so it works on
/// composite groups far beyond the graph-construction cap.
pub fn super_adjacent(g: &Group, kind: GraphKind, rel: RelKind, x: Elem, y: Elem) -> Result<bool> {
    if x == y {
        return Ok(false);
    }
    match rel {
        RelKind::Equality => Ok(base_adjacent(g, kind, x, y)),
        RelKind::Conjugacy => {
            let class = g.class_of(y);
            if class.contains(x) {
                return Ok(true);
            }
            // conjugating a witness pair by a common element moves x back
            Ok(class.members.iter().any(|&z| base_adjacent(g, kind, x, z)))
        }
        RelKind::Order => {
            let (ox, oy) = (g.element_order(x), g.element_order(y));
            if ox == oy {
                return Ok(true);
            }
            if kind == GraphKind::Power {
                return Ok(ox % oy == 0 || oy % ox == 0);
            }
            g.require_enumerable("order fibres")?;
            let fibre_x: Vec<Elem> = g.elements().filter(|&a| g.element_order(a) == ox).collect();
            let fibre_y: Vec<Elem> = g.elements().filter(|&b| g.element_order(b) == oy).collect();
            Ok(fibre_x.iter().any(|&a| fibre_y.iter().any(|&b| base_adjacent(g, kind, a, b))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn base_adjacency_in_c6() {
        let c6 = cyclic(6).unwrap();
        assert!(!base_adjacent(&c6, GraphKind::Power, 3, 2));
        assert!(base_adjacent(&c6, GraphKind::Enhanced, 3, 2));
        for kind in GraphKind::ALL {
            for x in 1..6 {
                assert!(base_adjacent(&c6, kind, 0, x));
            }
        }
    }

    #[test]
    fn s3_edge_counts() {
        let s3 = symmetric(3).unwrap();
        for kind in GraphKind::ALL {
            assert_eq!(build_graph(&s3, kind, RelKind::Equality).unwrap().graph().edge_count(), 6);
            assert_eq!(build_graph(&s3, kind, RelKind::Conjugacy).unwrap().graph().edge_count(), 9);
            assert_eq!(build_graph(&s3, kind, RelKind::Order).unwrap().graph().edge_count(), 9);
        }
    }

    #[test]
    fn d4_edge_counts() {
        // brute-force counts computed independently over the 8 elements
        let d4 = dihedral(4).unwrap();
        let count = |k, r| build_graph(&d4, k, r).unwrap().graph().edge_count();
        assert_eq!(count(GraphKind::Power, RelKind::Equality), 10);
        assert_eq!(count(GraphKind::Power, RelKind::Conjugacy), 12);
        assert_eq!(count(GraphKind::Power, RelKind::Order), 28);
        assert_eq!(count(GraphKind::Commuting, RelKind::Equality), 16);
        assert_eq!(count(GraphKind::Commuting, RelKind::Conjugacy), 16);
    }

    #[test]
    fn q8_order_superpower_is_complete() {
        let q8 = generalized_quaternion(3).unwrap();
        let g = build_graph(&q8, GraphKind::Power, RelKind::Order).unwrap();
        assert_eq!(g.graph().edge_count(), 28);
    }

    #[test]
    fn equivalence_block_sizes() {
        let s3 = symmetric(3).unwrap();
        let mut order = equivalence_classes(&s3, RelKind::Order).unwrap().block_sizes();
        order.sort_unstable();
        assert_eq!(order, [1, 2, 3]);
        let mut conj = equivalence_classes(&s3, RelKind::Conjugacy).unwrap().block_sizes();
        conj.sort_unstable();
        assert_eq!(conj, [1, 2, 3]);
        assert_eq!(equivalence_classes(&s3, RelKind::Equality).unwrap().blocks.len(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let c = cyclic(64).unwrap();
        let opts = BuildOptions { max_order: 10, ..BuildOptions::default() };
        assert!(matches!(
            build_graph_with(&c, GraphKind::Power, RelKind::Equality, &opts),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pointwise_matches_built() {
        let g = dihedral(6).unwrap();
        for kind in GraphKind::ALL {
            for rel in RelKind::ALL {
                let built = build_graph(&g, kind, rel).unwrap();
                for x in g.elements() {
                    for y in g.elements().filter(|&y| y != x) {
                        assert_eq!(
                            super_adjacent(&g, kind, rel, x, y).unwrap(),
                            built.graph().has_edge(x, y),
                            "{kind} {rel} {x} {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(graph_name(GraphKind::Power, RelKind::Equality), "Pow");
        assert_eq!(graph_name(GraphKind::Enhanced, RelKind::Conjugacy), "CSEPow");
        assert_eq!(graph_name(GraphKind::Commuting, RelKind::Order), "OSCom");
        assert_eq!("enhanced".parse::<GraphKind>().unwrap(), GraphKind::Enhanced);
        assert_eq!("conj".parse::<RelKind>().unwrap(), RelKind::Conjugacy);
        assert!("loud".parse::<RelKind>().is_err());
    }
}
