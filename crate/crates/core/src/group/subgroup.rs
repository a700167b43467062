use alloc::format;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{Elem, Group};
use crate::error::{Error, Result};

impl Group {
    /// `<g>`, sorted.
    pub fn cyclic_subgroup(&self, g: Elem) -> Vec<Elem> {
        let mut out = self.powers(g);
        out.sort_unstable();
        out
    }

    /// `e, g, g^2, ..` in power order.
    pub fn powers(&self, g: Elem) -> Vec<Elem> {
        let mut out = alloc::vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// `<S>` by breadth-first right multiplication, sorted.
    pub fn subgroup_closure(&self, set: &[Elem]) -> Vec<Elem> {
        let mut members = alloc::vec![0];
        let mut seen = alloc::collections::BTreeSet::from([0]);
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for &s in set {
                let b = self.mul(a, s);
                if seen.insert(b) {
                    members.push(b);
                }
            }
        }
        members.sort_unstable();
        members
    }

    fn membership(&self, set: &[Elem]) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.order);
        for &h in set {
            bits.insert(h);
        }
        bits
    }

    /// Non-empty, contains the identity and is closed under multiplication
    /// (enough for a finite subset).
    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        self.subgroup_violation(set).is_none()
    }

    fn subgroup_violation(&self, set: &[Elem]) -> Option<(Elem, Elem)> {
        if set.iter().any(|&h| h >= self.order) {
            return Some((self.order, self.order));
        }
        let bits = self.membership(set);
        if !bits.contains(0) {
            return Some((0, 0));
        }
        for &a in set {
            for &b in set {
                if !bits.contains(self.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, set: &[Elem]) -> Result<bool> {
        if let Some((a, b)) = self.subgroup_violation(set) {
            return Err(Error::NotSubgroup(format!("product of {a} and {b} leaves the set")));
        }
        let bits = self.membership(set);
        Ok(set.iter().all(|&h| self.generators.iter().all(|&x| bits.contains(self.conj(h, x)))))
    }

    /// The subgroup on `set` as a group in its own right, together with the
    /// embedding (index in the subgroup -> index in `self`).
    pub fn induced_subgroup(&self, name: &str, set: &[Elem]) -> Result<(Group, Vec<Elem>)> {
        if let Some((a, b)) = self.subgroup_violation(set) {
            return Err(Error::NotSubgroup(format!("product of {a} and {b} leaves the set")));
        }
        let mut embedding = set.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        let sub = Group::from_elements(name, embedding.clone(), &0, |&a, &b| self.mul(a, b))?;
        Ok((sub, embedding))
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog::*;

    #[test]
    fn cyclic_and_closure() {
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.cyclic_subgroup(2), [0, 2, 4]);
        let s3 = symmetric(3).unwrap();
        let ts: Vec<_> = s3.elements().filter(|&g| s3.element_order(g) == 2).collect();
        assert_eq!(s3.subgroup_closure(&ts[..2]).len(), 6);
    }

    #[test]
    fn normality() {
        let s3 = symmetric(3).unwrap();
        let r = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert!(s3.is_normal(&s3.cyclic_subgroup(r)).unwrap());
        assert!(!s3.is_normal(&s3.cyclic_subgroup(t)).unwrap());
        assert!(s3.is_normal(&[0, t, r]).is_err());
    }

    #[test]
    fn induced_subgroup_keeps_multiplication() {
        let s4 = symmetric(4).unwrap();
        let g = s4.elements().find(|&g| s4.element_order(g) == 4).unwrap();
        let set = s4.cyclic_subgroup(g);
        let (h, emb) = s4.induced_subgroup("C4", &set).unwrap();
        assert_eq!(h.order(), 4);
        for a in h.elements() {
            for b in h.elements() {
                assert_eq!(emb[h.mul(a, b)], s4.mul(emb[a], emb[b]));
            }
        }
    }
}
