//! Decidable group-class predicates. Every predicate returns a [`Check`]
//! carrying witness elements, always for negative verdicts and where it
//! makes sense for positive ones.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::arith::{factorize, is_prime_power_or_one, prime_power_base};
use crate::error::{Error, Result};
use crate::group::{ConjClass, Elem, Group};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Check {
    pub holds: bool,
    pub witness: Vec<Elem>,
}

impl Check {
    fn yes(witness: Vec<Elem>) -> Check {
        Check { holds: true, witness }
    }

    fn no(witness: Vec<Elem>) -> Check {
        Check { holds: false, witness }
    }
}

pub fn is_abelian(g: &Group) -> Check {
    let gens = g.generators();
    for (i, &a) in gens.iter().enumerate() {
        if let Some(&b) = gens[i + 1..].iter().find(|&&b| !g.commutes(a, b)) {
            return Check::no(alloc::vec![a, b]);
        }
    }
    Check::yes(Vec::new())
}

/// Positive witness: a generator of the whole group.
pub fn is_cyclic(g: &Group) -> Check {
    match g.elements().find(|&x| g.element_order(x) == g.order() as u64) {
        Some(x) => Check::yes(alloc::vec![x]),
        None => Check::no(Vec::new()),
    }
}

/// `Some(p)` for a non-trivial `p`-group, `None` for the trivial group.
/// Negative witness: elements of two distinct prime orders.
pub fn p_group(g: &Group) -> (Check, Option<u64>) {
    let n = g.order() as u64;
    if n == 1 {
        return (Check::yes(Vec::new()), None);
    }
    if let Some(p) = prime_power_base(n) {
        return (Check::yes(Vec::new()), Some(p));
    }
    let primes: Vec<u64> = factorize(n).iter().map(|&(p, _)| p).take(2).collect();
    let witness = primes.iter().filter_map(|&p| g.elements().find(|&x| g.element_order(x) == p)).collect();
    (Check::no(witness), None)
}

/// Every element has prime-power order.
pub fn is_eppo(g: &Group) -> Check {
    match g.elements().find(|&x| !is_prime_power_or_one(g.element_order(x))) {
        Some(x) => Check::no(alloc::vec![x]),
        None => Check::yes(Vec::new()),
    }
}

/// Every cyclic subgroup is normal. Negative witness: `g` and a generator
/// `x` with `x^-1 g x` outside `<g>`.
pub fn is_dedekind(g: &Group) -> Check {
    let mut inside = FixedBitSet::with_capacity(g.order());
    for x in g.elements() {
        inside.clear();
        for p in g.powers(x) {
            inside.insert(p);
        }
        if let Some(&s) = g.generators().iter().find(|&&s| !inside.contains(g.conj(x, s))) {
            return Check::no(alloc::vec![x, s]);
        }
    }
    Check::yes(Vec::new())
}

/// `[[x, g], g] = e` for all pairs. Negative witness `(x, g)`.
pub fn is_2_engel(g: &Group) -> Check {
    for x in g.elements() {
        for y in g.elements() {
            if g.commutator(g.commutator(x, y), y) != 0 {
                return Check::no(alloc::vec![x, y]);
            }
        }
    }
    Check::yes(Vec::new())
}

/// Every centralizer is normal. Negative witness: `g` and a conjugate of a
/// centralizing element that leaves the centralizer.
pub fn centralizers_normal(g: &Group) -> Check {
    for x in g.elements() {
        let c = g.centralizer(x);
        for &y in &c {
            for &s in g.generators() {
                let z = g.conj(y, s);
                if !g.commutes(z, x) {
                    return Check::no(alloc::vec![x, y, s]);
                }
            }
        }
    }
    Check::yes(Vec::new())
}

/// `x^g x = x x^g` for all pairs.
pub fn conjugates_commute(g: &Group) -> Check {
    for x in g.elements() {
        for y in g.elements() {
            if !g.commutes(g.conj(x, y), x) {
                return Check::no(alloc::vec![x, y]);
            }
        }
    }
    Check::yes(Vec::new())
}

/// Commuting `x, y` of the same prime order `p` with `y` outside `<x>`,
/// i.e. a subgroup `C_p x C_p`. Positive witness `(x, y)`.
pub fn has_cp_cp(g: &Group) -> Check {
    for (p, _) in factorize(g.order() as u64) {
        let of_order_p: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == p).collect();
        for (i, &x) in of_order_p.iter().enumerate() {
            let span = g.powers(x);
            for &y in &of_order_p[i + 1..] {
                if g.commutes(x, y) && !span.contains(&y) {
                    return Check::yes(alloc::vec![x, y]);
                }
            }
        }
    }
    Check::no(Vec::new())
}

/// Some element has order equal to the exponent. Positive witness: that element.
pub fn star_property(g: &Group) -> Check {
    let m = g.exponent();
    match g.elements().find(|&x| g.element_order(x) == m) {
        Some(x) => Check::yes(alloc::vec![x]),
        None => Check::no(Vec::new()),
    }
}

/// Equivalent form of [`star_property`]: the spectrum is closed under lcm.
pub fn spectrum_lcm_closed(g: &Group) -> bool {
    let spec = g.spectrum();
    spec.orders.iter().all(|&a| spec.orders.iter().all(|&b| spec.contains(crate::arith::lcm(a, b))))
}

/// Any two elements of equal order are conjugate. Negative witness: a
/// non-conjugate pair of equal order.
pub fn same_order_implies_conjugate(g: &Group) -> Result<Check> {
    let classes = g.conjugacy_classes()?;
    let mut seen: Vec<(u64, Elem)> = Vec::new();
    for c in &classes {
        let o = g.element_order(c.representative);
        if let Some(&(_, other)) = seen.iter().find(|&&(k, _)| k == o) {
            return Ok(Check::no(alloc::vec![other, c.representative]));
        }
        seen.push((o, c.representative));
    }
    Ok(Check::yes(Vec::new()))
}

/// Checks the defining presentation directly: some `a` of order `2^(k-1)`
/// and `b` outside `<a>` with `b^2 = a^(2^(k-2))` and `b^-1 a b = a^-1`.
/// Positive witness `(a, b)`.
pub fn is_generalized_quaternion(g: &Group) -> Check {
    let n = g.order() as u64;
    if n < 8 || !n.is_power_of_two() {
        return Check::no(Vec::new());
    }
    let half = n / 2;
    for a in g.elements().filter(|&a| g.element_order(a) == half) {
        let span = g.powers(a);
        let centre_elt = g.pow(a, half / 2);
        for b in g.elements().filter(|b| !span.contains(b)) {
            if g.mul(b, b) == centre_elt && g.conj(a, b) == g.inv(a) {
                return Check::yes(alloc::vec![a, b]);
            }
        }
    }
    Check::no(Vec::new())
}

/// `{x : <x, g> is cyclic for every g}`.
pub fn cyclicizer(g: &Group) -> Vec<Elem> {
    g.elements().filter(|&x| g.elements().all(|y| crate::supergraph::generates_cyclic(g, x, y))).collect()
}

/// A conjugacy class disjoint from the proper subgroup `h`.
pub fn jordan_witness(g: &Group, h: &[Elem]) -> Result<ConjClass> {
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroup(alloc::format!("{h:?} is not a subgroup of {}", g.name())));
    }
    let mut inside = FixedBitSet::with_capacity(g.order());
    for &x in h {
        inside.insert(x);
    }
    if inside.count_ones(..) == g.order() {
        return Err(Error::NotSubgroup("the subgroup must be proper".into()));
    }
    g.conjugacy_classes()?
        .into_iter()
        .find(|c| c.members.iter().all(|&x| !inside.contains(x)))
        .ok_or_else(|| Error::NotSubgroup("no class avoids the subgroup".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassProfile {
    pub group: alloc::string::String,
    pub order: usize,
    pub abelian: Check,
    pub cyclic: Check,
    pub p_group: Check,
    pub prime: Option<u64>,
    pub eppo: Check,
    pub dedekind: Check,
    pub two_engel: Check,
    pub star_property: Check,
    pub has_cp_cp: Check,
    pub same_order_implies_conjugate: Check,
    pub generalized_quaternion: Check,
}

impl ClassProfile {
    pub fn compute(g: &Group) -> Result<ClassProfile> {
        let (p_group, prime) = p_group(g);
        Ok(ClassProfile {
            group: g.name().into(),
            order: g.order(),
            abelian: is_abelian(g),
            cyclic: is_cyclic(g),
            p_group,
            prime,
            eppo: is_eppo(g),
            dedekind: is_dedekind(g),
            two_engel: is_2_engel(g),
            star_property: star_property(g),
            has_cp_cp: has_cp_cp(g),
            same_order_implies_conjugate: same_order_implies_conjugate(g)?,
            generalized_quaternion: is_generalized_quaternion(g),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn eppo() {
        assert!(is_eppo(&symmetric(3).unwrap()).holds);
        let c6 = cyclic(6).unwrap();
        let v = is_eppo(&c6);
        assert!(!v.holds);
        assert_eq!(c6.element_order(v.witness[0]), 6);
        assert!(is_eppo(&dihedral(8).unwrap()).holds);
    }

    #[test]
    fn dedekind() {
        assert!(is_dedekind(&generalized_quaternion(3).unwrap()).holds);
        let d4 = dihedral(4).unwrap();
        let v = is_dedekind(&d4);
        assert!(!v.holds);
        assert!(!d4.is_normal(&d4.cyclic_subgroup(v.witness[0])).unwrap());
        assert!(is_dedekind(&cyclic(12).unwrap()).holds);
    }

    #[test]
    fn two_engel() {
        let s3 = symmetric(3).unwrap();
        let v = is_2_engel(&s3);
        assert!(!v.holds);
        let (x, y) = (v.witness[0], v.witness[1]);
        assert_ne!(s3.commutator(s3.commutator(x, y), y), 0);
        assert!(is_2_engel(&heisenberg(3).unwrap()).holds);
        assert!(is_2_engel(&dihedral(4).unwrap()).holds);
    }

    #[test]
    fn cp_cp() {
        assert!(has_cp_cp(&elementary_abelian(2, 2).unwrap()).holds);
        assert!(!has_cp_cp(&generalized_quaternion(3).unwrap()).holds);
        assert!(has_cp_cp(&symmetric(4).unwrap()).holds);
        assert!(!has_cp_cp(&cyclic(30).unwrap()).holds);
    }

    #[test]
    fn star() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(9).unwrap()).unwrap();
        assert!(star_property(&g).holds);
        assert!(!star_property(&symmetric(3).unwrap()).holds);
        assert!(!star_property(&alternating(5).unwrap()).holds);
        assert!(spectrum_lcm_closed(&g));
        assert!(!spectrum_lcm_closed(&alternating(5).unwrap()));
    }

    #[test]
    fn same_order_conjugacy() {
        assert!(same_order_implies_conjugate(&symmetric(3).unwrap()).unwrap().holds);
        assert!(same_order_implies_conjugate(&symmetric(1).unwrap()).unwrap().holds);
        assert!(!same_order_implies_conjugate(&cyclic(3).unwrap()).unwrap().holds);
    }

    #[test]
    fn jordan() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let class = jordan_witness(&s3, &s3.cyclic_subgroup(t)).unwrap();
        assert!(class.members.iter().all(|&x| s3.element_order(x) == 3));
        let c4 = cyclic(4).unwrap();
        let class = jordan_witness(&c4, &c4.cyclic_subgroup(2)).unwrap();
        assert_eq!(class.members, [1]);
        let d4 = dihedral(4).unwrap();
        let r = d4.elements().find(|&g| d4.element_order(g) == 4).unwrap();
        let class = jordan_witness(&d4, &d4.cyclic_subgroup(r)).unwrap();
        assert!(class.members.iter().all(|&x| d4.element_order(x) == 2));
        assert!(jordan_witness(&s3, &s3.elements().collect::<Vec<_>>()).is_err());
        assert!(jordan_witness(&s3, &[0, t, 1, 2]).is_err());
    }

    #[test]
    fn quaternion_detection() {
        assert!(is_generalized_quaternion(&generalized_quaternion(4).unwrap()).holds);
        assert!(!is_generalized_quaternion(&dihedral(4).unwrap()).holds);
        assert!(!is_generalized_quaternion(&cyclic(8).unwrap()).holds);
    }

    #[test]
    fn profile_implications() {
        for g in [cyclic(8).unwrap(), heisenberg(3).unwrap(), symmetric(4).unwrap()] {
            let p = ClassProfile::compute(&g).unwrap();
            assert!(!p.cyclic.holds || p.abelian.holds);
            assert!(!p.abelian.holds || (p.two_engel.holds && p.dedekind.holds));
            assert!(!p.p_group.holds || p.eppo.holds);
        }
    }
}
