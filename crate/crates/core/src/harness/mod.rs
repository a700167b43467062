//! Executable checks of the structural theorems about the nine graphs.
//! Each check compares a predicted value (from group-theoretic
//! predicates) with the value computed from the built graphs and returns
//! [`VerificationReport`]s carrying witnesses.

mod checks;
mod search;
mod universality;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classes::ClassProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{ConjClass, Elem, Group};
use crate::supergraph::{build_graph, GraphKind, RelKind, SuperGraph, GRAPH_CAP};

pub use checks::{
    check_clique_formula, check_completeness_table, check_dominant, check_equalities, check_orbit_prop,
    check_osepow_eq_oscom, check_perfectness, check_subgroup_restriction, CLIQUE_FORMULA_CAP, CONJ_CLIQUE_CAP,
    HOLE_GROUP_CAP, HOLE_SEARCH_LENGTH,
};
pub use search::{eight_distinct, search_eight_distinct, EightDistinct, PairComparison};
pub use universality::{check_universality, small_graphs, UNIVERSALITY_ORDER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Theorem {
    OsepowOscom,
    Completeness,
    Dominant,
    Equalities,
    Orbit,
    CliqueFormula,
    Perfectness,
    SubgroupRestriction,
    EightDistinct,
    Universality,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::OsepowOscom,
        Theorem::Completeness,
        Theorem::Dominant,
        Theorem::Equalities,
        Theorem::Orbit,
        Theorem::CliqueFormula,
        Theorem::Perfectness,
        Theorem::SubgroupRestriction,
        Theorem::EightDistinct,
        Theorem::Universality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::OsepowOscom => "osepow-oscom",
            Theorem::Completeness => "completeness",
            Theorem::Dominant => "dominant",
            Theorem::Equalities => "equalities",
            Theorem::Orbit => "orbit",
            Theorem::CliqueFormula => "clique-formula",
            Theorem::Perfectness => "perfectness",
            Theorem::SubgroupRestriction => "subgroup-restriction",
            Theorem::EightDistinct => "eight-distinct",
            Theorem::Universality => "universality",
        }
    }

    /// Checks quantified over groups (everything except universality).
    pub fn is_per_group(self) -> bool {
        self != Theorem::Universality
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parameter(alloc::format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Pass,
    Fail,
    /// Computed and reported without a prediction.
    Info,
    /// A witness was produced but is too large to check.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum Value {
    Bool(bool),
    Count(usize),
    Set(Vec<Elem>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerificationReport {
    pub theorem: Theorem,
    /// Which cell or statement of the theorem, e.g. `CSPow` or `Pow=EPow <=> EPPO`.
    pub case: String,
    pub group: String,
    pub order: usize,
    pub predicted: Option<Value>,
    pub computed: Value,
    pub verdict: Verdict,
    pub witness: Vec<Elem>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub note: Option<String>,
    /// Wall-clock time, only filled in when requested.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub runtime_us: Option<u64>,
}

impl VerificationReport {
    pub fn new(
        theorem: Theorem,
        case: impl Into<String>,
        group: &Group,
        predicted: Option<Value>,
        computed: Value,
        witness: Vec<Elem>,
    ) -> VerificationReport {
        let verdict = match &predicted {
            None => Verdict::Info,
            Some(p) if *p == computed => Verdict::Pass,
            Some(_) => Verdict::Fail,
        };
        VerificationReport {
            theorem,
            case: case.into(),
            group: group.name().into(),
            order: group.order(),
            predicted,
            computed,
            verdict,
            witness,
            note: None,
            runtime_us: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> VerificationReport {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// The nine graphs of one group, with its class profile and conjugacy
/// classes, shared by all per-group checks.
#[derive(Debug)]
pub struct GroupAnalysis<'a> {
    pub group: &'a Group,
    pub profile: ClassProfile,
    pub classes: Vec<ConjClass>,
    pub class_ids: Vec<usize>,
    graphs: Vec<SuperGraph>,
}

impl<'a> GroupAnalysis<'a> {
    pub fn new(group: &'a Group) -> Result<GroupAnalysis<'a>> {
        if group.order() > GRAPH_CAP {
            return Err(Error::CapExceeded { what: "group analysis", size: group.order(), cap: GRAPH_CAP });
        }
        let mut graphs = Vec::with_capacity(9);
        for kind in GraphKind::ALL {
            for rel in RelKind::ALL {
                graphs.push(build_graph(group, kind, rel)?);
            }
        }
        let classes = group.conjugacy_classes()?;
        let class_ids = Group::class_ids(&classes, group.order());
        Ok(GroupAnalysis { group, profile: ClassProfile::compute(group)?, classes, class_ids, graphs })
    }

    pub fn supergraph(&self, kind: GraphKind, rel: RelKind) -> &SuperGraph {
        &self.graphs[kind as usize * 3 + rel as usize]
    }

    pub fn graph(&self, kind: GraphKind, rel: RelKind) -> &Graph {
        self.supergraph(kind, rel).graph()
    }
}

/// Runs the selected per-group checks (all of them for an empty filter).
/// Checks with a lower group-order cap are skipped above it.
pub fn verify_group(g: &Group, theorems: &[Theorem]) -> Result<Vec<VerificationReport>> {
    let wanted = |t: Theorem| theorems.is_empty() || theorems.contains(&t);
    let a = GroupAnalysis::new(g)?;
    let mut out = Vec::new();
    if wanted(Theorem::OsepowOscom) {
        out.push(check_osepow_eq_oscom(&a)?);
    }
    if wanted(Theorem::Completeness) {
        out.extend(check_completeness_table(&a));
    }
    if wanted(Theorem::Dominant) {
        out.extend(check_dominant(&a));
    }
    if wanted(Theorem::Equalities) {
        out.extend(check_equalities(&a)?);
    }
    if wanted(Theorem::Orbit) {
        out.extend(check_orbit_prop(&a));
    }
    if wanted(Theorem::CliqueFormula) && g.order() <= CLIQUE_FORMULA_CAP {
        out.extend(check_clique_formula(&a)?);
    }
    if wanted(Theorem::Perfectness) {
        out.extend(check_perfectness(&a)?);
    }
    if wanted(Theorem::SubgroupRestriction) {
        out.extend(check_subgroup_restriction(&a)?);
    }
    if wanted(Theorem::EightDistinct) {
        let e = eight_distinct(&a)?;
        let equal: Vec<String> =
            e.pairs.iter().filter(|p| p.difference.is_none()).map(|p| alloc::format!("{}={}", p.a, p.b)).collect();
        let mut report = VerificationReport::new(
            Theorem::EightDistinct,
            "all eight graphs distinct",
            g,
            None,
            Value::Bool(e.distinct),
            Vec::new(),
        );
        if !equal.is_empty() {
            report = report.with_note(equal.join(" "));
        }
        out.push(report);
    }
    Ok(out)
}
