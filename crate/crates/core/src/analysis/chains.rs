use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::is_prime;
use crate::group::{Group, Spectrum};

/// `1 = m_1 | m_2 | .. | m_r` with every quotient `m_(i+1) / m_i` prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DivisorChain(pub Vec<u64>);

impl DivisorChain {
    pub fn top(&self) -> u64 {
        *self.0.last().expect("chains start at 1")
    }

    pub fn is_valid(&self) -> bool {
        self.0.first() == Some(&1) && self.0.windows(2).all(|w| w[1] % w[0] == 0 && is_prime(w[1] / w[0]))
    }
}

/// Chains inside the spectrum, from 1 by prime steps, ending in a maximal
/// order. Enumerated depth-first, so the output is in lexicographic order.
pub fn maximal_chains(spec: &Spectrum) -> Vec<DivisorChain> {
    fn walk(spec: &Spectrum, chain: &mut Vec<u64>, out: &mut Vec<DivisorChain>) {
        let m = *chain.last().unwrap();
        if spec.maximal.contains(&m) {
            out.push(DivisorChain(chain.clone()));
            return;
        }
        for &k in spec.orders.iter().filter(|&&k| k > m && k % m == 0 && is_prime(k / m)) {
            chain.push(k);
            walk(spec, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    if spec.contains(1) {
        walk(spec, &mut alloc::vec![1], &mut out);
    }
    out
}

/// `|G(m)|` for every element order `m`.
pub fn fibre_sizes(g: &Group) -> BTreeMap<u64, usize> {
    let mut sizes = BTreeMap::new();
    for x in g.elements() {
        *sizes.entry(g.element_order(x)).or_insert(0) += 1;
    }
    sizes
}

/// Largest `|G(m_1)| + .. + |G(m_r)|` over maximal chains, with the chain.
pub fn clique_number_order_superpower(g: &Group) -> (usize, DivisorChain) {
    let sizes = fibre_sizes(g);
    maximal_chains(&g.spectrum())
        .into_iter()
        .map(|c| (c.0.iter().map(|m| sizes[m]).sum::<usize>(), c))
        .fold(None, |best: Option<(usize, DivisorChain)>, cand| match best {
            Some(b) if b.0 >= cand.0 => Some(b),
            _ => Some(cand),
        })
        .expect("every spectrum has a chain")
}

/// Largest `sum over r | m of |G(r)|` for maximal orders `m`, with `m`.
pub fn clique_number_order_superenhanced(g: &Group) -> (usize, u64) {
    let sizes = fibre_sizes(g);
    let spec = g.spectrum();
    spec.maximal
        .iter()
        .map(|&m| {
            let total = sizes.iter().filter(|(&r, _)| m % r == 0).map(|(_, &c)| c).sum();
            (total, m)
        })
        .fold((0, 1), |best, cand| if cand.0 > best.0 { cand } else { best })
}
