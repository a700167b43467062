use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{GroupAnalysis, Theorem, Value, Verdict, VerificationReport};
use crate::analysis::{
    clique_number, clique_number_order_superenhanced, clique_number_order_superpower, comparability_graph,
    conjugacy_power_preorder, dominant_vertices, find_odd_antihole, find_odd_hole, graph_equal, is_complete,
    maximal_chains, maximal_cliques, order_power_preorder, Preorder,
};
use crate::classes::{centralizers_normal, conjugates_commute, cyclicizer, Check};
use crate::error::Result;
use crate::graph::{Difference, Graph};
use crate::group::{Elem, Group};
use crate::supergraph::{build_graph, graph_name, GraphKind, RelKind};

use GraphKind::{Commuting, Enhanced, Power};
use RelKind::{Conjugacy, Equality, Order};

/// Largest group order for the clique-formula comparison.
pub const CLIQUE_FORMULA_CAP: usize = 100;
/// Largest group order for the conjugacy-clique containment check.
pub const CONJ_CLIQUE_CAP: usize = 64;
/// Largest group order for the odd-hole and odd-antihole searches.
pub const HOLE_GROUP_CAP: usize = 48;
pub const HOLE_SEARCH_LENGTH: usize = 11;
/// Largest group order for which all 2-generated subgroups are tried.
const TWO_GENERATED_CAP: usize = 64;
const MAXIMAL_CLIQUE_CAP: usize = 100_000;

fn pair(d: Difference) -> Vec<Elem> {
    d.map(|(u, v)| alloc::vec![u, v]).unwrap_or_default()
}

fn bits(n: usize, set: impl IntoIterator<Item = Elem>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for x in set {
        b.insert(x);
    }
    b
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Sorted symmetric difference.
fn mismatch(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (sa, sb): (BTreeSet<_>, BTreeSet<_>) = (a.iter().collect(), b.iter().collect());
    sa.symmetric_difference(&sb).map(|&&x| x).collect()
}

fn first_non_edge(g: &Graph) -> Vec<Elem> {
    g.complement().edges().next().map(|(u, v)| alloc::vec![u, v]).unwrap_or_default()
}

fn max_order_element(g: &Group) -> Elem {
    g.elements().max_by_key(|&x| (g.element_order(x), core::cmp::Reverse(x))).unwrap_or(0)
}

pub fn check_osepow_eq_oscom(a: &GroupAnalysis) -> Result<VerificationReport> {
    let diff = graph_equal(a.graph(Enhanced, Order), a.graph(Commuting, Order))?;
    Ok(VerificationReport::new(
        Theorem::OsepowOscom,
        "OSEPow=OSCom",
        a.group,
        Some(Value::Bool(true)),
        Value::Bool(diff.is_none()),
        pair(diff),
    ))
}

/// One report per graph: complete iff the tabulated group property holds.
pub fn check_completeness_table(a: &GroupAnalysis) -> Vec<VerificationReport> {
    let p = &a.profile;
    let mut out = Vec::with_capacity(9);
    for kind in GraphKind::ALL {
        for rel in RelKind::ALL {
            let (cond, label, negative): (bool, &str, &Check) = match (kind, rel) {
                (Power, Order) => (p.p_group.holds, "p-group", &p.p_group),
                (_, Order) => (p.star_property.holds, "some element has order exp(G)", &p.star_property),
                (Power, _) if !p.cyclic.holds => (false, "cyclic p-group", &p.cyclic),
                (Power, _) => (p.p_group.holds, "cyclic p-group", &p.p_group),
                (Enhanced, _) => (p.cyclic.holds, "cyclic", &p.cyclic),
                (Commuting, _) => (p.abelian.holds, "abelian", &p.abelian),
            };
            let graph = a.graph(kind, rel);
            let complete = is_complete(graph);
            let witness = match (cond, complete) {
                (true, false) => first_non_edge(graph),
                (false, true) if negative.witness.is_empty() => alloc::vec![max_order_element(a.group)],
                (false, true) => negative.witness.clone(),
                _ => Vec::new(),
            };
            out.push(
                VerificationReport::new(
                    Theorem::Completeness,
                    graph_name(kind, rel),
                    a.group,
                    Some(Value::Bool(cond)),
                    Value::Bool(complete),
                    witness,
                )
                .with_note(format!("complete iff {label}")),
            );
        }
    }
    out
}

/// Predicted dominant sets for seven graphs, plus the order supercommuting
/// graph (which equals the order superenhanced one) reported without a
/// prediction but checked to contain the centre and the elements of order
/// `exp(G)`.
pub fn check_dominant(a: &GroupAnalysis) -> Vec<VerificationReport> {
    let g = a.group;
    let p = &a.profile;
    let n = g.order() as u64;
    let all: Vec<Elem> = g.elements().collect();
    let exp = g.exponent();
    let top: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == exp).collect();

    let (pow, pow_rule) = if p.cyclic.holds && p.p_group.holds {
        (all.clone(), "cyclic p-group: whole group")
    } else if p.cyclic.holds {
        let gens = g.elements().filter(|&x| g.element_order(x) == n);
        (sorted(core::iter::once(0).chain(gens).collect()), "cyclic: identity and generators")
    } else if p.generalized_quaternion.holds {
        (g.center(), "generalized quaternion: centre")
    } else {
        (alloc::vec![0], "identity only")
    };
    let enh = cyclicizer(g);
    let com = sorted(g.center());
    let (ospow, ospow_rule) = if p.p_group.holds {
        (all, "p-group: whole group")
    } else {
        (sorted(core::iter::once(0).chain(top.iter().copied()).collect()), "identity and elements of order exp(G)")
    };

    let cells: [(GraphKind, RelKind, &Vec<Elem>, &str); 7] = [
        (Power, Equality, &pow, pow_rule),
        (Power, Conjugacy, &pow, pow_rule),
        (Enhanced, Equality, &enh, "cyclicizer"),
        (Enhanced, Conjugacy, &enh, "cyclicizer"),
        (Commuting, Equality, &com, "centre"),
        (Commuting, Conjugacy, &com, "centre"),
        (Power, Order, &ospow, ospow_rule),
    ];
    let mut out = Vec::with_capacity(8);
    for (kind, rel, predicted, rule) in cells {
        let computed = dominant_vertices(a.graph(kind, rel));
        let witness = mismatch(predicted, &computed);
        out.push(
            VerificationReport::new(
                Theorem::Dominant,
                graph_name(kind, rel),
                g,
                Some(Value::Set(predicted.clone())),
                Value::Set(computed),
                witness,
            )
            .with_note(rule),
        );
    }

    let computed = dominant_vertices(a.graph(Commuting, Order));
    let lower = sorted(com.iter().chain(&top).copied().collect());
    let missing: Vec<Elem> = lower.iter().copied().filter(|x| computed.binary_search(x).is_err()).collect();
    let mut report =
        VerificationReport::new(Theorem::Dominant, "OSCom", g, None, Value::Set(computed), missing.clone())
            .with_note("no known characterisation; must contain the centre and the elements of order exp(G)");
    if !missing.is_empty() {
        report.verdict = Verdict::Fail;
    }
    out.push(report);
    out
}

fn biconditional(
    a: &GroupAnalysis,
    case: &str,
    left: (GraphKind, RelKind),
    right: (GraphKind, RelKind),
    cond: bool,
    cond_witness: &[Elem],
) -> Result<VerificationReport> {
    let diff = graph_equal(a.graph(left.0, left.1), a.graph(right.0, right.1))?;
    let equal = diff.is_none();
    let witness = if !equal {
        pair(diff)
    } else if !cond {
        cond_witness.to_vec()
    } else {
        Vec::new()
    };
    let report = VerificationReport::new(
        Theorem::Equalities,
        case,
        a.group,
        Some(Value::Bool(cond)),
        Value::Bool(equal),
        witness,
    );
    Ok(match (cond, equal) {
        (true, false) => report.with_note("forward implication fails: condition holds but the graphs differ"),
        (false, true) => report.with_note("reverse implication fails: graphs agree but the condition fails"),
        _ => report,
    })
}

/// The five graph-equality characterisations, the two implications between
/// relations, and the three equivalent forms of the 2-Engel condition.
pub fn check_equalities(a: &GroupAnalysis) -> Result<Vec<VerificationReport>> {
    let p = &a.profile;
    let g = a.group;
    let mut out = alloc::vec![biconditional(
        a,
        "Pow=EPow <=> EPPO",
        (Power, Equality),
        (Enhanced, Equality),
        p.eppo.holds,
        &p.eppo.witness
    )?];
    out.push(biconditional(
        a,
        "EPow=Com <=> no CpxCp",
        (Enhanced, Equality),
        (Commuting, Equality),
        !p.has_cp_cp.holds,
        &p.has_cp_cp.witness,
    )?);
    out.push(biconditional(
        a,
        "Com=CSCom <=> 2-Engel",
        (Commuting, Equality),
        (Commuting, Conjugacy),
        p.two_engel.holds,
        &p.two_engel.witness,
    )?);
    out.push(biconditional(
        a,
        "Pow=CSPow <=> Dedekind",
        (Power, Equality),
        (Power, Conjugacy),
        p.dedekind.holds,
        &p.dedekind.witness,
    )?);
    out.push(biconditional(
        a,
        "EPow=CSEPow <=> Dedekind",
        (Enhanced, Equality),
        (Enhanced, Conjugacy),
        p.dedekind.holds,
        &p.dedekind.witness,
    )?);

    for (holds, from, to, label) in [
        (p.abelian.holds, Equality, Conjugacy, "abelian"),
        (p.same_order_implies_conjugate.holds, Conjugacy, Order, "equal orders conjugate"),
    ] {
        if !holds {
            continue;
        }
        for kind in GraphKind::ALL {
            let diff = graph_equal(a.graph(kind, from), a.graph(kind, to))?;
            out.push(VerificationReport::new(
                Theorem::Equalities,
                format!("{label} => {}={}", graph_name(kind, from), graph_name(kind, to)),
                g,
                Some(Value::Bool(true)),
                Value::Bool(diff.is_none()),
                pair(diff),
            ));
        }
    }

    for (label, other) in [
        ("2-Engel <=> centralizers normal", centralizers_normal(g)),
        ("2-Engel <=> conjugates commute", conjugates_commute(g)),
    ] {
        let witness = if p.two_engel.holds { other.witness } else { p.two_engel.witness.clone() };
        out.push(VerificationReport::new(
            Theorem::Equalities,
            label,
            g,
            Some(Value::Bool(p.two_engel.holds)),
            Value::Bool(other.holds),
            if p.two_engel.holds == other.holds && p.two_engel.holds { Vec::new() } else { witness },
        ));
    }
    Ok(out)
}

/// For every base edge `{x, y}` and conjugate `z` of `x`, some conjugate of
/// `y` is adjacent to `z`, in the base graph and hence in the conjugacy
/// supergraph. Also the order/power form: for a power-graph edge, one end
/// has every element of its order joined to an element of the other's order.
/// Pairs of classes are checked once.
pub fn check_orbit_prop(a: &GroupAnalysis) -> Vec<VerificationReport> {
    let g = a.group;
    let n = g.order();
    let members: Vec<FixedBitSet> = a.classes.iter().map(|c| bits(n, c.members.iter().copied())).collect();
    let k = a.classes.len();
    let mut out = Vec::with_capacity(4);
    for kind in GraphKind::ALL {
        let base = a.graph(kind, Equality);
        let sup = a.graph(kind, Conjugacy);
        let mut seen = FixedBitSet::with_capacity(k * k);
        let mut failure = None;
        'edges: for (u, v) in base.edges() {
            for (x, y) in [(u, v), (v, u)] {
                let (cx, cy) = (a.class_ids[x], a.class_ids[y]);
                if seen.put(cx * k + cy) {
                    continue;
                }
                for &z in &a.classes[cx].members {
                    let in_base = base.row(z).intersection(&members[cy]).next().is_some();
                    let in_super = sup.row(z).intersection(&members[cy]).next().is_some();
                    if !(in_base && in_super) {
                        failure = Some(alloc::vec![x, y, z]);
                        break 'edges;
                    }
                }
            }
        }
        out.push(
            VerificationReport::new(
                Theorem::Orbit,
                format!("{} conjugate edges", graph_name(kind, Conjugacy)),
                g,
                Some(Value::Bool(true)),
                Value::Bool(failure.is_none()),
                failure.unwrap_or_default(),
            )
            .with_note(format!("{} class pairs", seen.count_ones(..))),
        );
    }

    let mut fibres: BTreeMap<u64, FixedBitSet> = BTreeMap::new();
    for x in g.elements() {
        fibres.entry(g.element_order(x)).or_insert_with(|| FixedBitSet::with_capacity(n)).insert(x);
    }
    let pow = a.graph(Power, Equality);
    // every element of order o(x) meets the fibre of o(y)
    let covers = |x: Elem, y: Elem| {
        let target = &fibres[&g.element_order(y)];
        fibres[&g.element_order(x)].ones().all(|z| pow.row(z).intersection(target).next().is_some())
    };
    let mut done = BTreeSet::new();
    let mut failure = None;
    for (u, v) in pow.edges() {
        let key = (g.element_order(u).min(g.element_order(v)), g.element_order(u).max(g.element_order(v)));
        if !done.insert(key) {
            continue;
        }
        if !covers(u, v) && !covers(v, u) {
            failure = Some(alloc::vec![u, v]);
            break;
        }
    }
    out.push(
        VerificationReport::new(
            Theorem::Orbit,
            "Pow edges across order classes",
            g,
            Some(Value::Bool(true)),
            Value::Bool(failure.is_none()),
            failure.unwrap_or_default(),
        )
        .with_note(format!("{} order pairs", done.len())),
    );
    out
}

/// `U(x)`: union of the cyclic subgroups generated by conjugates of `x`.
fn conjugate_cyclic_union(a: &GroupAnalysis, x: Elem) -> FixedBitSet {
    let g = a.group;
    let mut u = FixedBitSet::with_capacity(g.order());
    for &t in &a.classes[a.class_ids[x]].members {
        for p in g.powers(t) {
            u.insert(p);
        }
    }
    u
}

/// Clique numbers of the order superpower and superenhanced graphs against
/// the chain formulas, the fibre structure of maximal cliques in the order
/// superpower graph, and (for small groups) containment of maximal cliques
/// of the conjugacy superpower and superenhanced graphs in a union of
/// conjugate cyclic subgroups.
pub fn check_clique_formula(a: &GroupAnalysis) -> Result<Vec<VerificationReport>> {
    let g = a.group;
    let mut out = Vec::new();

    let (formula, chain) = clique_number_order_superpower(g);
    let solved = clique_number(a.graph(Power, Order))?;
    out.push(
        VerificationReport::new(
            Theorem::CliqueFormula,
            "omega(OSPow) = max over maximal chains",
            g,
            Some(Value::Count(formula)),
            Value::Count(solved.size),
            solved.vertices,
        )
        .with_note(format!("chain {:?}", chain.0)),
    );
    let (formula, top) = clique_number_order_superenhanced(g);
    let solved = clique_number(a.graph(Enhanced, Order))?;
    out.push(
        VerificationReport::new(
            Theorem::CliqueFormula,
            "omega(OSEPow) = max over maximal orders",
            g,
            Some(Value::Count(formula)),
            Value::Count(solved.size),
            solved.vertices,
        )
        .with_note(format!("divisors of {top}")),
    );

    let mut expected: Vec<Vec<Elem>> = maximal_chains(&g.spectrum())
        .iter()
        .map(|c| sorted(g.elements().filter(|&x| c.0.contains(&g.element_order(x))).collect()))
        .collect();
    expected.sort();
    let found = maximal_cliques(a.graph(Power, Order), MAXIMAL_CLIQUE_CAP);
    let witness = found
        .cliques
        .iter()
        .find(|c| expected.binary_search(c).is_err())
        .or_else(|| expected.iter().find(|c| found.cliques.binary_search(c).is_err()))
        .cloned()
        .unwrap_or_default();
    out.push(
        VerificationReport::new(
            Theorem::CliqueFormula,
            "OSPow maximal cliques = fibre unions over maximal chains",
            g,
            Some(Value::Bool(true)),
            Value::Bool(!found.truncated && found.cliques == expected),
            witness,
        )
        .with_note(format!("{} maximal cliques", found.cliques.len())),
    );

    if g.order() <= CONJ_CLIQUE_CAP {
        for kind in [Power, Enhanced] {
            let found = maximal_cliques(a.graph(kind, Conjugacy), MAXIMAL_CLIQUE_CAP);
            let bad = found.cliques.iter().find(|c| {
                let m = c.iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
                !c.iter().filter(|&&x| g.element_order(x) == m).any(|&x| {
                    let u = conjugate_cyclic_union(a, x);
                    c.iter().all(|&y| u.contains(y))
                })
            });
            out.push(
                VerificationReport::new(
                    Theorem::CliqueFormula,
                    format!("{} maximal cliques inside conjugate cyclic subgroups", graph_name(kind, Conjugacy)),
                    g,
                    Some(Value::Bool(true)),
                    Value::Bool(!found.truncated && bad.is_none()),
                    bad.cloned().unwrap_or_default(),
                )
                .with_note(format!("{} maximal cliques", found.cliques.len())),
            );
        }
    }
    Ok(out)
}

/// Both preorders are reflexive and transitive with the conjugacy and order
/// superpower graphs as comparability graphs; small groups also get a
/// bounded odd-hole search.
pub fn check_perfectness(a: &GroupAnalysis) -> Result<Vec<VerificationReport>> {
    let g = a.group;
    let mut out = Vec::new();
    let preorders: [(&str, Preorder, RelKind); 2] =
        [("conjugacy", conjugacy_power_preorder(g)?, Conjugacy), ("order", order_power_preorder(g), Order)];
    for (label, preorder, rel) in preorders {
        let name = graph_name(Power, rel);
        let violation = preorder.transitivity_violation();
        let witness = violation.map(|(x, y, z)| alloc::vec![x, y, z]).unwrap_or_default();
        out.push(VerificationReport::new(
            Theorem::Perfectness,
            format!("{label} preorder reflexive and transitive"),
            g,
            Some(Value::Bool(true)),
            Value::Bool(preorder.is_reflexive() && violation.is_none()),
            witness,
        ));
        let graph = a.graph(Power, rel);
        let diff = graph_equal(&comparability_graph(&preorder), graph)?;
        out.push(VerificationReport::new(
            Theorem::Perfectness,
            format!("comparability graph of {label} preorder = {name}"),
            g,
            Some(Value::Bool(true)),
            Value::Bool(diff.is_none()),
            pair(diff),
        ));
        if g.order() <= HOLE_GROUP_CAP {
            let hole = find_odd_hole(graph, HOLE_SEARCH_LENGTH)?;
            out.push(VerificationReport::new(
                Theorem::Perfectness,
                format!("odd hole of length <= {HOLE_SEARCH_LENGTH} in {name}"),
                g,
                Some(Value::Bool(false)),
                Value::Bool(hole.is_some()),
                hole.unwrap_or_default(),
            ));
            let antihole = find_odd_antihole(graph, HOLE_SEARCH_LENGTH)?;
            out.push(VerificationReport::new(
                Theorem::Perfectness,
                format!("odd antihole of length <= {HOLE_SEARCH_LENGTH} in {name}"),
                g,
                Some(Value::Bool(false)),
                Value::Bool(antihole.is_some()),
                antihole.unwrap_or_default(),
            ));
        }
    }
    Ok(out)
}

/// Proper non-trivial subgroups to restrict to: cyclic subgroups and
/// centralizers, plus all 2-generated subgroups of small groups.
fn restriction_subgroups(g: &Group) -> Vec<Vec<Elem>> {
    let n = g.order();
    let mut set = BTreeSet::new();
    for x in g.elements() {
        set.insert(g.cyclic_subgroup(x));
        set.insert(sorted(g.centralizer(x)));
    }
    if n <= TWO_GENERATED_CAP {
        for x in 1..n {
            for y in x + 1..n {
                set.insert(g.subgroup_closure(&[x, y]));
            }
        }
    }
    set.into_iter().filter(|h| h.len() > 1 && h.len() < n).collect()
}

/// For a subgroup `H`, `A(H)` should be the subgraph of `A(G)` induced on
/// `H`. Predicted for the three base graphs and for the order superpower
/// graph; the order superenhanced and supercommuting cells are reported.
pub fn check_subgroup_restriction(a: &GroupAnalysis) -> Result<Vec<VerificationReport>> {
    let g = a.group;
    let subgroups = restriction_subgroups(g);
    let cells: Vec<(GraphKind, RelKind)> =
        GraphKind::ALL.into_iter().flat_map(|k| [(k, Equality), (k, Order)]).collect();
    let mut failures: Vec<Option<(Vec<Elem>, String)>> = alloc::vec![None; cells.len()];
    for (i, h) in subgroups.iter().enumerate() {
        if failures.iter().all(Option::is_some) {
            break;
        }
        let (sub, embedding) = g.induced_subgroup(&format!("H{i}"), h)?;
        for (slot, &(kind, rel)) in failures.iter_mut().zip(&cells) {
            if slot.is_some() {
                continue;
            }
            let own = build_graph(&sub, kind, rel)?;
            let restricted = a.graph(kind, rel).induced(&embedding);
            if let Some((u, v)) = graph_equal(own.graph(), &restricted)? {
                let gens: Vec<Elem> = sub.generators().iter().map(|&s| embedding[s]).collect();
                *slot = Some((
                    alloc::vec![embedding[u], embedding[v]],
                    format!("subgroup of order {} generated by {gens:?}", h.len()),
                ));
            }
        }
    }
    let mut out = Vec::with_capacity(cells.len());
    for ((kind, rel), failure) in cells.into_iter().zip(failures) {
        let predicted = (rel == Equality || kind == Power).then_some(Value::Bool(true));
        let (witness, note) = match failure {
            Some((w, note)) => (w, note),
            None => (Vec::new(), format!("{} subgroups", subgroups.len())),
        };
        let held = witness.is_empty();
        let label: String = format!("{}(H) induced in {}(G)", graph_name(kind, rel), graph_name(kind, rel));
        out.push(
            VerificationReport::new(Theorem::SubgroupRestriction, label, g, predicted, Value::Bool(held), witness)
                .with_note(note),
        );
    }
    Ok(out)
}
