use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Group, Repr};
use crate::arith::lcm;

/// The set of element orders together with its divisibility-maximal members.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Spectrum {
    pub orders: Vec<u64>,
    pub maximal: Vec<u64>,
}

impl Spectrum {
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Spectrum {
        let orders: Vec<u64> = orders.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let maximal = orders.iter().copied().filter(|&k| !orders.iter().any(|&l| l != k && l % k == 0)).collect();
        Spectrum { orders, maximal }
    }

    pub fn contains(&self, k: u64) -> bool {
        self.orders.binary_search(&k).is_ok()
    }

    /// Least common multiple of all orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &k| lcm(acc, k))
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.orders.iter().all(|&k| crate::arith::divisors(k).iter().all(|&d| self.contains(d)))
    }
}

impl Group {
    pub fn spectrum(&self) -> Spectrum {
        match &self.repr {
            Repr::Table(t) => Spectrum::from_orders(t.orders.iter().map(|&o| o as u64)),
            Repr::Product(factors) => {
                // orders of tuples are exactly the lcms of component orders
                let mut acc: BTreeSet<u64> = BTreeSet::from([1]);
                for f in factors {
                    let spec = f.spectrum();
                    acc = acc.iter().flat_map(|&a| spec.orders.iter().map(move |&b| lcm(a, b))).collect();
                }
                Spectrum::from_orders(acc)
            }
        }
    }

    pub fn exponent(&self) -> u64 {
        self.spectrum().exponent()
    }

    /// Spectrum of the direct power `G^r`, without building it: the lcms of
    /// all multisets of at most `r` orders of `G`.
    pub fn spectrum_of_power(&self, r: u32) -> Spectrum {
        let base = self.spectrum();
        let mut acc: BTreeSet<u64> = base.orders.iter().copied().collect();
        for _ in 1..r.max(1) {
            let next: BTreeSet<u64> = acc.iter().flat_map(|&a| base.orders.iter().map(move |&b| lcm(a, b))).collect();
            if next == acc {
                break;
            }
            acc = next;
        }
        Spectrum::from_orders(acc)
    }
}

#[cfg(test)]
mod tests {
    use crate::arith::divisors;
    use crate::catalog::*;

    #[test]
    fn spectra() {
        let s4 = symmetric(4).unwrap().spectrum();
        assert_eq!(s4.orders, [1, 2, 3, 4]);
        assert_eq!(s4.maximal, [3, 4]);
        let c1 = cyclic(1).unwrap().spectrum();
        assert_eq!((c1.orders, c1.maximal), (vec![1], vec![1]));
        let a5 = alternating(5).unwrap().spectrum();
        assert_eq!(a5.orders, [1, 2, 3, 5]);
        assert_eq!(a5.maximal, [2, 3, 5]);
    }

    #[test]
    fn exponents() {
        assert_eq!(alternating(5).unwrap().exponent(), 30);
        assert_eq!(symmetric(3).unwrap().exponent(), 6);
        assert_eq!(cyclic(8).unwrap().exponent(), 8);
    }

    #[test]
    fn powers_of_a5() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.spectrum_of_power(3).orders, divisors(30));
        assert!(!a5.spectrum_of_power(2).contains(30));
        assert_eq!(a5.spectrum_of_power(1), a5.spectrum());
    }

    #[test]
    fn composite_spectrum_matches_enumeration() {
        let g = crate::Group::product("S3xC4", vec![symmetric(3).unwrap(), cyclic(4).unwrap()]).unwrap();
        let direct = super::Spectrum::from_orders(g.elements().map(|x| g.element_order(x)));
        assert_eq!(g.spectrum(), direct);
    }
}
