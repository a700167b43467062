use alloc::format;
use alloc::vec::Vec;

use super::{Theorem, Value, Verdict, VerificationReport};
use crate::catalog::embed_graph;
use crate::error::Result;
use crate::graph::Graph;
use crate::supergraph::{super_adjacent, GraphKind, RelKind};

/// Witness groups above this order are emitted but not checked.
pub const UNIVERSALITY_ORDER_CAP: usize = 100_000;
const NON_EDGE_CAP: usize = 3;

/// Every graph on at most three vertices, up to isomorphism.
pub fn small_graphs() -> Vec<(&'static str, Graph)> {
    alloc::vec![
        ("K1", Graph::complete(1)),
        ("2K1", Graph::empty(2)),
        ("K2", Graph::complete(2)),
        ("3K1", Graph::empty(3)),
        ("K2+K1", Graph::from_edges(3, [(0, 1)])),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
    ]
}

/// Builds the prime-chain witness group for `gamma` and checks that the
/// conjugacy superenhanced and supercommuting graphs both induce `gamma` on
/// the designated elements (vertex `i` to `designated[i]`). Adjacency is
/// decided from class orbits, so the product is never tabulated.
pub fn check_universality(name: &str, gamma: &Graph) -> Result<VerificationReport> {
    let w = embed_graph(gamma)?;
    let case = format!("{name} induced in CSEPow and CSCom");
    let group = match &w.group {
        Some(g) if w.non_edges.len() <= NON_EDGE_CAP && g.order() <= UNIVERSALITY_ORDER_CAP => g,
        _ => {
            return Ok(VerificationReport {
                theorem: Theorem::Universality,
                case,
                group: w.name.clone(),
                order: w.group.as_ref().map_or(0, |g| g.order()),
                predicted: Some(Value::Bool(true)),
                computed: Value::Bool(false),
                verdict: Verdict::Unverified,
                witness: w.designated.clone(),
                note: Some(format!("witness emitted, unverified: primes {:?}", w.primes)),
                runtime_us: None,
            })
        }
    };
    let d = &w.designated;
    let mut failure = None;
    'pairs: for i in 0..d.len() {
        if group.element_order(d[i]) != w.primes[i] {
            failure = Some(alloc::vec![d[i]]);
            break;
        }
        for j in i + 1..d.len() {
            for kind in [GraphKind::Enhanced, GraphKind::Commuting] {
                if super_adjacent(group, kind, RelKind::Conjugacy, d[i], d[j])? != gamma.has_edge(i, j) {
                    failure = Some(alloc::vec![d[i], d[j]]);
                    break 'pairs;
                }
            }
        }
    }
    let held = failure.is_none();
    Ok(VerificationReport::new(
        Theorem::Universality,
        case,
        group,
        Some(Value::Bool(true)),
        Value::Bool(held),
        failure.unwrap_or_else(|| d.clone()),
    )
    .with_note(format!("primes {:?}, factors {}", w.primes, w.factor_names.join(" x "))))
}
