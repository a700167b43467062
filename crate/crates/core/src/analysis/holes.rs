//! Bounded search for odd holes (induced odd cycles of length at least 5).
//! This refutes perfectness when it finds something; an empty result only
//! says there is no odd hole up to the given length.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HOLE_VERTEX_CAP: usize = 128;
pub const HOLE_LENGTH_CAP: usize = 13;

struct HoleSearch<'a> {
    g: &'a Graph,
    max_len: usize,
    start: usize,
}

impl HoleSearch<'_> {
    /// `path` is induced and starts at `start`, the least vertex of the
    /// cycle; `blocked` covers the path and the neighbours of its interior.
    fn extend(&self, path: &mut Vec<usize>, blocked: &FixedBitSet) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        let mut candidates = self.g.row(last).clone();
        candidates.difference_with(blocked);
        for u in candidates.ones().filter(|&u| u > self.start) {
            if self.g.has_edge(u, self.start) {
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    let mut hole = path.clone();
                    hole.push(u);
                    return Some(hole);
                }
                continue;
            }
            // one more vertex is needed to close the cycle
            if path.len() + 2 > self.max_len {
                continue;
            }
            let mut next_blocked = blocked.clone();
            if path.len() >= 2 {
                next_blocked.union_with(self.g.row(last));
            }
            next_blocked.insert(u);
            path.push(u);
            if let Some(hole) = self.extend(path, &next_blocked) {
                return Some(hole);
            }
            path.pop();
        }
        None
    }
}

/// An odd hole of length `5..=max_len`, if one exists.
pub fn find_odd_hole(g: &Graph, max_len: usize) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > HOLE_VERTEX_CAP {
        return Err(Error::CapExceeded { what: "odd-hole search graph", size: n, cap: HOLE_VERTEX_CAP });
    }
    if max_len > HOLE_LENGTH_CAP {
        return Err(Error::CapExceeded { what: "odd-hole length", size: max_len, cap: HOLE_LENGTH_CAP });
    }
    for start in 0..n {
        let search = HoleSearch { g, max_len, start };
        for first in g.neighbors(start).filter(|&v| v > start) {
            let mut blocked = FixedBitSet::with_capacity(n);
            blocked.insert(start);
            blocked.insert(first);
            let mut path = alloc::vec![start, first];
            if let Some(hole) = search.extend(&mut path, &blocked) {
                return Ok(Some(hole));
            }
        }
    }
    Ok(None)
}

/// An odd antihole of length `5..=max_len`: an odd hole of the complement,
/// returned in its cyclic order there.
pub fn find_odd_antihole(g: &Graph, max_len: usize) -> Result<Option<Vec<usize>>> {
    if g.vertex_count() > HOLE_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "odd-antihole search graph",
            size: g.vertex_count(),
            cap: HOLE_VERTEX_CAP,
        });
    }
    find_odd_hole(&g.complement(), max_len)
}
