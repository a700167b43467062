use alloc::collections::VecDeque;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{Elem, Group};
use crate::error::Result;

/// A conjugacy class; `representative` is the least member index.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConjClass {
    pub representative: Elem,
    pub members: Vec<Elem>,
}

impl ConjClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

impl Group {
    /// Orbit of `g` under conjugation by the generators, closed
    /// transitively. Never enumerates the whole group.
    pub fn class_of(&self, g: Elem) -> ConjClass {
        let mut members = alloc::vec![g];
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            for &s in &self.generators {
                let y = self.conj(x, s);
                if !members.contains(&y) {
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        ConjClass { representative: members[0], members }
    }

    /// All conjugacy classes, ordered by representative.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClass>> {
        self.require_enumerable("conjugacy class enumeration")?;
        let n = self.order;
        let mut seen = FixedBitSet::with_capacity(n);
        let mut classes = Vec::new();
        for g in 0..n {
            if seen.contains(g) {
                continue;
            }
            seen.insert(g);
            let mut members = alloc::vec![g];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in &self.generators {
                    let y = self.conj(x, s);
                    if !seen.contains(y) {
                        seen.insert(y);
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass { representative: members[0], members });
        }
        Ok(classes)
    }

    /// Class index of every element, parallel to `conjugacy_classes`.
    pub fn class_ids(classes: &[ConjClass], order: usize) -> Vec<usize> {
        let mut ids = alloc::vec![0; order];
        for (i, c) in classes.iter().enumerate() {
            for &g in &c.members {
                ids[g] = i;
            }
        }
        ids
    }

    pub fn centralizer(&self, g: Elem) -> Vec<Elem> {
        self.elements().filter(|&x| self.commutes(x, g)).collect()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.generators.iter().all(|&s| self.commutes(x, s))).collect()
    }
}
