use alloc::string::String;
use alloc::vec::Vec;

use super::GroupAnalysis;
use crate::analysis::graph_equal;
use crate::error::Result;
use crate::group::Group;
use crate::supergraph::{graph_name, GraphKind, RelKind};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PairComparison {
    pub a: String,
    pub b: String,
    /// First pair of elements on which the graphs disagree.
    pub difference: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EightDistinct {
    pub group: String,
    pub order: usize,
    pub distinct: bool,
    pub pairs: Vec<PairComparison>,
}

/// The nine graphs without the order superenhanced graph, which always
/// equals the order supercommuting graph.
fn eight_graphs() -> impl Iterator<Item = (GraphKind, RelKind)> {
    GraphKind::ALL
        .into_iter()
        .flat_map(|k| RelKind::ALL.into_iter().map(move |r| (k, r)))
        .filter(|&c| c != (GraphKind::Enhanced, RelKind::Order))
}

/// Pairwise comparison of the eight possibly different graphs.
pub fn eight_distinct(a: &GroupAnalysis) -> Result<EightDistinct> {
    let cells: Vec<_> = eight_graphs().collect();
    let mut pairs = Vec::new();
    for (i, &(k1, r1)) in cells.iter().enumerate() {
        for &(k2, r2) in &cells[i + 1..] {
            pairs.push(PairComparison {
                a: graph_name(k1, r1),
                b: graph_name(k2, r2),
                difference: graph_equal(a.graph(k1, r1), a.graph(k2, r2))?,
            });
        }
    }
    Ok(EightDistinct {
        group: a.group.name().into(),
        order: a.group.order(),
        distinct: pairs.iter().all(|p| p.difference.is_some()),
        pairs,
    })
}

/// Scans `groups` in the given order and returns the first one on which
/// all eight graphs differ.
pub fn search_eight_distinct<I>(groups: I) -> Result<Option<EightDistinct>>
where
    I: IntoIterator<Item = Result<Group>>,
{
    for g in groups {
        let g = g?;
        let e = eight_distinct(&GroupAnalysis::new(&g)?)?;
        if e.distinct {
            return Ok(Some(e));
        }
    }
    Ok(None)
}
