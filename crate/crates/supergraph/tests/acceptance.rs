//! The twelve acceptance criteria, one `criterion N: PASS|FAIL` line each.
//!
//! Each criterion combines the harness verdicts with an independent route:
//! brute-force oracles from the core test suite, formulas evaluated here
//! from raw element orders, or the binary itself.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use supergraph::sweep::{build_all, catalog_up_to, verify_groups};
use supergraph_core::analysis::{
    clique_number, comparability_graph, conjugacy_power_preorder, dominant_vertices, find_odd_antihole, find_odd_hole,
    graph_equal, is_complete, maximal_cliques, order_power_preorder,
};
use supergraph_core::catalog::{self, embed_graph};
use supergraph_core::harness::{check_universality, small_graphs};
use supergraph_core::harness::{Theorem, Verdict, VerificationReport};
use supergraph_core::supergraph::{build_graph, GraphKind, RelKind};
use supergraph_core::{Graph, Group};

use GraphKind::{Commuting, Enhanced, Power};
use RelKind::{Conjugacy, Equality, Order};

fn groups() -> &'static [Group] {
    static GROUPS: OnceLock<Vec<Group>> = OnceLock::new();
    GROUPS.get_or_init(|| build_all(&catalog_up_to(200)).unwrap())
}

fn up_to(n: usize) -> impl Iterator<Item = &'static Group> {
    groups().iter().filter(move |g| g.order() <= n)
}

fn by_name(name: &str) -> &'static Group {
    groups().iter().find(|g| g.name() == name).unwrap_or_else(|| panic!("{name} not in catalog"))
}

fn reports(theorem: Theorem, max_order: usize) -> Vec<VerificationReport> {
    let gs: Vec<Group> = up_to(max_order).cloned().collect();
    verify_groups(&gs, &[theorem], false).unwrap()
}

fn assert_no_failures(rs: &[VerificationReport]) {
    if let Some(r) = rs.iter().find(|r| r.verdict == Verdict::Fail) {
        panic!("{} on {}: {} (witness {:?})", r.theorem.as_str(), r.group, r.case, r.witness);
    }
}

fn graph(g: &Group, kind: GraphKind, rel: RelKind) -> Graph {
    build_graph(g, kind, rel).unwrap().into_graph()
}

fn order_counts(g: &Group) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for x in g.elements() {
        *out.entry(common::order_of(g, x)).or_default() += 1;
    }
    out
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|p| n % p == 0).unwrap()
}

/// Heaviest chain `1 | m2 | ... ` through the spectrum with prime steps,
/// weighted by the number of elements of each order.
fn heaviest_chain(counts: &BTreeMap<u64, usize>) -> usize {
    fn go(m: u64, counts: &BTreeMap<u64, usize>) -> usize {
        let best = counts
            .keys()
            .filter(|&&k| k > m && k % m == 0)
            .filter(|&&k| {
                let q = k / m;
                smallest_prime_factor(q) == q
            })
            .map(|&k| go(k, counts))
            .max()
            .unwrap_or(0);
        counts[&m] + best
    }
    go(1, counts)
}

fn heaviest_divisor_set(counts: &BTreeMap<u64, usize>) -> usize {
    counts.keys().map(|&m| counts.iter().filter(|(&d, _)| m % d == 0).map(|(_, &c)| c).sum()).max().unwrap()
}

fn criterion_1() -> String {
    let mut checked = 0;
    for g in up_to(200) {
        let counts = order_counts(g);
        let spectrum: BTreeSet<u64> = counts.keys().copied().collect();
        let orders: Vec<u64> = g.elements().map(|x| common::order_of(g, x)).collect();
        // order pairs carrying a commuting pair of elements
        let mut commuting = BTreeSet::new();
        for x in g.elements() {
            for y in g.elements() {
                if g.mul(x, y) == g.mul(y, x) {
                    commuting.insert((orders[x], orders[y]));
                }
            }
        }
        let osepow = graph(g, Enhanced, Order);
        let oscom = graph(g, Commuting, Order);
        assert_eq!(graph_equal(&osepow, &oscom).unwrap(), None, "{}", g.name());
        for x in g.elements() {
            for y in x + 1..g.order() {
                let (a, b) = (orders[x], orders[y]);
                let lcm = a / gcd(a, b) * b;
                assert_eq!(osepow.has_edge(x, y), spectrum.contains(&lcm), "{} OSEPow {x} {y}", g.name());
                assert_eq!(oscom.has_edge(x, y), commuting.contains(&(a, b)), "{} OSCom {x} {y}", g.name());
            }
        }
        checked += 1;
    }
    assert_no_failures(&reports(Theorem::OsepowOscom, 200));
    format!("OSEPow = OSCom on {checked} groups")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_2() -> String {
    let rs = reports(Theorem::Completeness, 200);
    assert_no_failures(&rs);
    assert_eq!(rs.len(), 9 * up_to(200).count());

    let q8 = by_name("Q8");
    for kind in GraphKind::ALL {
        for rel in RelKind::ALL {
            let brute = common::supergraph(q8, kind, rel);
            assert_eq!(brute, graph(q8, kind, rel));
            assert_eq!(is_complete(&brute), rel == Order, "Q8 {kind:?} {rel:?}");
            assert!(is_complete(&graph(by_name("C8"), kind, rel)), "C8 {kind:?} {rel:?}");
        }
    }
    format!("{} cells agree", rs.len())
}

fn criterion_3() -> String {
    let rs = reports(Theorem::Dominant, 200);
    assert_no_failures(&rs);
    let predicted = rs.iter().filter(|r| r.verdict == Verdict::Pass).count();
    assert_eq!(predicted, 7 * up_to(200).count());

    let c6 = by_name("C6");
    let mut expected: Vec<usize> = c6.elements().filter(|&x| common::order_of(c6, x) == 6).collect();
    expected.insert(0, 0);
    assert_eq!(dominant_vertices(&graph(c6, Power, Equality)), expected);
    assert_eq!(expected.len(), 3);

    let q8 = by_name("Q8");
    let centre: Vec<usize> = q8.elements().filter(|&x| q8.elements().all(|y| q8.mul(x, y) == q8.mul(y, x))).collect();
    assert_eq!(dominant_vertices(&graph(q8, Power, Equality)), centre);
    assert_eq!(centre.len(), 2);

    assert_eq!(dominant_vertices(&graph(by_name("S3"), Power, Order)), [0]);
    format!("{predicted} predicted sets match, OSCom reported only")
}

fn criterion_4() -> String {
    let rs = reports(Theorem::Equalities, 200);
    assert_no_failures(&rs);
    let same = |name: &str, a: (GraphKind, RelKind), b: (GraphKind, RelKind)| {
        let g = by_name(name);
        graph_equal(&common::supergraph(g, a.0, a.1), &common::supergraph(g, b.0, b.1)).unwrap().is_none()
    };
    assert!(same("D4", (Commuting, Equality), (Commuting, Conjugacy)));
    assert!(!same("D4", (Power, Equality), (Power, Conjugacy)));
    assert!(same("Q8", (Power, Equality), (Power, Conjugacy)));
    assert!(same("S3", (Power, Equality), (Enhanced, Equality)));
    assert!(!same("S3", (Commuting, Equality), (Commuting, Conjugacy)));
    format!("{} reports, anchors hold", rs.len())
}

fn criterion_5() -> String {
    let checked: Vec<usize> = up_to(100)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| {
            let counts = order_counts(g);
            let ospow = clique_number(&graph(g, Power, Order)).unwrap().size;
            let osepow = clique_number(&graph(g, Enhanced, Order)).unwrap().size;
            assert_eq!(ospow, heaviest_chain(&counts), "{} OSPow", g.name());
            assert_eq!(osepow, heaviest_divisor_set(&counts), "{} OSEPow", g.name());
            ospow
        })
        .collect();
    assert_no_failures(&reports(Theorem::CliqueFormula, 100));
    let s4 = catalog::symmetric(4).unwrap();
    assert_eq!(clique_number(&graph(&s4, Power, Order)).unwrap().size, 16);
    format!("{} groups, omega(OSPow(S4)) = 16", checked.len())
}

fn criterion_6() -> String {
    let d4 = by_name("D4");
    let r = d4.elements().find(|&x| common::order_of(d4, x) == 4).unwrap();
    let s = d4.elements().find(|&x| common::order_of(d4, x) == 2 && x != d4.pow(r, 2)).unwrap();
    let r2 = d4.pow(r, 2);
    let sorted = |mut v: Vec<usize>| {
        v.sort();
        v
    };
    let mut expected = vec![
        sorted(vec![0, r, r2, d4.pow(r, 3)]),
        sorted(vec![0, s, d4.mul(r2, s)]),
        sorted(vec![0, d4.mul(r, s), d4.mul(d4.pow(r, 3), s)]),
    ];
    expected.sort();
    for kind in [Power, Enhanced] {
        let gr = graph(d4, kind, Conjugacy);
        assert_eq!(gr, common::supergraph(d4, kind, Conjugacy));
        let found = maximal_cliques(&gr, 100);
        assert!(!found.truncated);
        let mut cliques: Vec<Vec<usize>> = found.cliques.into_iter().map(sorted).collect();
        cliques.sort();
        assert_eq!(cliques, expected, "{kind:?}");
        assert_eq!(common::all_maximal_cliques(&gr), expected);
    }
    "three maximal cliques in CSPow and CSEPow".into()
}

fn criterion_7() -> String {
    let rs = reports(Theorem::Perfectness, 200);
    assert_no_failures(&rs);
    // preorders straight from the definitions, compared with the library
    for g in up_to(64) {
        let orders: Vec<u64> = g.elements().map(|x| common::order_of(g, x)).collect();
        let labels = common::labels(g, Conjugacy);
        let powers: Vec<BTreeSet<usize>> = g.elements().map(|x| common::power_set(g, x)).collect();
        let conj = |x: usize, y: usize| powers[x].iter().any(|&z| labels[z] == labels[y]);
        let ord = |x: usize, y: usize| orders[x] % orders[y] == 0;
        let lib_conj = conjugacy_power_preorder(g).unwrap();
        let lib_ord = order_power_preorder(g);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(lib_conj.arc(x, y), conj(x, y), "{} conj {x} {y}", g.name());
                assert_eq!(lib_ord.arc(x, y), ord(x, y), "{} order {x} {y}", g.name());
                for z in g.elements() {
                    assert!(!(conj(x, y) && conj(y, z)) || conj(x, z), "{}", g.name());
                }
            }
        }
        assert_eq!(comparability_graph(&lib_conj), common::supergraph(g, Power, Conjugacy), "{}", g.name());
        assert_eq!(comparability_graph(&lib_ord), common::supergraph(g, Power, Order), "{}", g.name());
    }
    let mut searched = 0;
    for g in up_to(48) {
        for rel in [Conjugacy, Order] {
            let gr = graph(g, Power, rel);
            assert_eq!(find_odd_hole(&gr, 11).unwrap(), None, "{} {rel:?}", g.name());
            assert_eq!(find_odd_antihole(&gr, 11).unwrap(), None, "{} {rel:?}", g.name());
            searched += 1;
        }
    }
    format!("preorders transitive, {searched} graphs free of odd holes and antiholes up to length 11")
}

fn criterion_8() -> String {
    let mut orders = Vec::new();
    for (name, gamma) in small_graphs() {
        let r = check_universality(name, &gamma).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{name}: {:?}", r.note);
        let w = embed_graph(&gamma).unwrap();
        let g = w.group.as_ref().unwrap();
        let d = &w.designated;
        let class = |x: usize| -> BTreeSet<usize> { g.elements().map(|t| common::conjugate(g, x, t)).collect() };
        let classes: Vec<BTreeSet<usize>> = d.iter().map(|&x| class(x)).collect();
        let kinds: &[GraphKind] = if g.order() <= 1000 { &[Enhanced, Commuting] } else { &[Commuting] };
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                for &kind in kinds {
                    let joined = classes[i].iter().any(|&x| classes[j].iter().any(|&y| common::base(g, kind, x, y)));
                    assert_eq!(joined, gamma.has_edge(i, j), "{name} {kind:?} {i} {j}");
                }
            }
        }
        orders.push(g.order());
    }
    format!("7 graphs on <= 3 vertices embedded, witness orders {orders:?}")
}

fn criterion_9() -> String {
    let rs = reports(Theorem::Orbit, 100);
    assert_no_failures(&rs);
    // conjugation is an automorphism of every base graph and supergraph
    for g in up_to(32) {
        for kind in GraphKind::ALL {
            for rel in [Equality, Conjugacy] {
                let gr = graph(g, kind, rel);
                for t in g.elements() {
                    for (u, v) in gr.edges() {
                        assert!(
                            gr.has_edge(common::conjugate(g, u, t), common::conjugate(g, v, t)),
                            "{} {kind:?} {rel:?}",
                            g.name()
                        );
                    }
                }
            }
        }
    }
    format!("{} reports pass", rs.len())
}

fn criterion_10() -> String {
    let s3 = by_name("S3");
    for kind in GraphKind::ALL {
        let base = common::supergraph(s3, kind, Equality);
        assert_eq!(base.edge_count(), 6, "{kind:?}");
        assert_eq!(graph(s3, kind, Equality), base);
        for rel in [Conjugacy, Order] {
            let sup = common::supergraph(s3, kind, rel);
            assert_eq!(sup.edge_count(), 9, "{kind:?} {rel:?}");
            assert_eq!(graph(s3, kind, rel), sup);
        }
        assert_ne!(base, graph(s3, kind, Conjugacy));
    }
    "base graphs 6 edges, supergraphs 9".into()
}

fn criterion_11() -> String {
    let a5 = catalog::alternating(5).unwrap();
    let orders: BTreeSet<u64> = a5.elements().map(|x| common::order_of(&a5, x)).collect();
    let lcm = |a: u64, b: u64| a / gcd(a, b) * b;
    // element orders of the direct power A5^r are lcms of r element orders
    let pairs: BTreeSet<u64> = orders.iter().flat_map(|&a| orders.iter().map(move |&b| lcm(a, b))).collect();
    let triples: BTreeSet<u64> = pairs.iter().flat_map(|&a| orders.iter().map(move |&b| lcm(a, b))).collect();
    let divisors: BTreeSet<u64> = (1..=30).filter(|d| 30 % d == 0).collect();
    assert_eq!(triples, divisors);
    assert_eq!(a5.spectrum_of_power(3).orders, divisors.iter().copied().collect::<Vec<_>>());
    let squares = a5.spectrum_of_power(2);
    assert_eq!(squares.orders, pairs.iter().copied().collect::<Vec<_>>());
    assert!(!squares.contains(30));
    "spectrum_of_power(A5, 3) = divisors of 30, 30 absent for r = 2".into()
}

fn criterion_12() -> String {
    let run = || {
        let o = Command::new(env!("CARGO_BIN_EXE_supergraph")).args(["verify", "--max-order", "64"]).output().unwrap();
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let first = run();
    let second = run();
    assert!(!first.is_empty());
    assert!(first == second, "reports differ");
    format!("{} bytes identical", first.len())
}

/// Written to the real stdout so the lines survive test output capture.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

#[test]
fn acceptance() {
    let criteria: [fn() -> String; 12] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
    ];
    groups();
    let mut failed = Vec::new();
    for (i, criterion) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => report(format!("criterion {}: PASS ({detail}; {secs:.1} s)", i + 1)),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                report(format!("criterion {}: FAIL ({msg}; {secs:.1} s)", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
