//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library beyond `mul`, `inv`
//! and the element range.
#![allow(dead_code)]

use std::collections::BTreeSet;

use supergraph_core::supergraph::{GraphKind, RelKind};
use supergraph_core::{Graph, Group};

pub fn order_of(g: &Group, x: usize) -> u64 {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

pub fn power_set(g: &Group, x: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([0]);
    let mut y = x;
    while y != 0 {
        out.insert(y);
        y = g.mul(y, x);
    }
    out
}

pub fn closure(g: &Group, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().chain([0]).collect();
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .chain(set.iter().copied())
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn conjugate(g: &Group, x: usize, t: usize) -> usize {
    g.mul(g.mul(g.inv(t), x), t)
}

pub fn base(g: &Group, kind: GraphKind, x: usize, y: usize) -> bool {
    match kind {
        GraphKind::Power => power_set(g, x).contains(&y) || power_set(g, y).contains(&x),
        GraphKind::Enhanced => {
            let c = closure(g, &[x, y]);
            c.iter().any(|&z| order_of(g, z) as usize == c.len())
        }
        GraphKind::Commuting => g.mul(x, y) == g.mul(y, x),
    }
}

/// Class label of every element under `rel`.
pub fn labels(g: &Group, rel: RelKind) -> Vec<u64> {
    g.elements()
        .map(|x| match rel {
            RelKind::Equality => x as u64,
            RelKind::Conjugacy => g.elements().map(|t| conjugate(g, x, t)).min().unwrap() as u64,
            RelKind::Order => order_of(g, x),
        })
        .collect()
}

/// The supergraph straight from the definition, classes joined.
pub fn supergraph(g: &Group, kind: GraphKind, rel: RelKind) -> Graph {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x != y && base(g, kind, x, y)).collect()).collect();
    let label = labels(g, rel);
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let joined = label[u] == label[v]
                || (0..n)
                    .filter(|&a| label[a] == label[u])
                    .any(|a| (0..n).filter(|&b| label[b] == label[v]).any(|b| adj[a][b]));
            if joined {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Maximum clique by exhaustive search over vertex subsets.
pub fn max_clique(gr: &Graph) -> usize {
    let n = gr.vertex_count();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || gr.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn is_clique(gr: &Graph, mask: u32) -> bool {
    let n = gr.vertex_count();
    (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || gr.has_edge(u, v)))
}

/// All maximal cliques by exhaustive search, as sorted vertex lists.
pub fn all_maximal_cliques(gr: &Graph) -> Vec<Vec<usize>> {
    let n = gr.vertex_count();
    let mut out: Vec<Vec<usize>> = (1u32..1 << n)
        .filter(|&m| is_clique(gr, m) && (0..n).all(|v| m >> v & 1 == 1 || !is_clique(gr, m | 1 << v)))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Whether some vertex subset of odd size in `5..=max_len` induces a cycle.
pub fn has_odd_hole(gr: &Graph, max_len: usize) -> bool {
    let n = gr.vertex_count();
    (0u32..1 << n).any(|m| {
        let k = m.count_ones() as usize;
        if k < 5 || k % 2 == 0 || k > max_len {
            return false;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let deg = |v: usize| vs.iter().filter(|&&u| gr.has_edge(u, v)).count();
        if !vs.iter().all(|&v| deg(v) == 2) {
            return false;
        }
        // 2-regular: a cycle iff connected
        let mut seen = BTreeSet::from([vs[0]]);
        let mut stack = vec![vs[0]];
        while let Some(v) = stack.pop() {
            for &u in &vs {
                if gr.has_edge(u, v) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == k
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}
