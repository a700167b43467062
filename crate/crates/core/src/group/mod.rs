//! Finite groups on the index set `0..n`, identity at index 0.
//!
//! Two backings exist. Groups of order at most [`TABLE_CAP`] carry a dense
//! multiplication table together with cached inverses and element orders.
//! Direct products can instead be kept as a [`Group::product`] view whose
//! elements are mixed-radix tuples and whose operations delegate to the
//! factors; this is what lets class-orbit queries run on groups of order
//! around 10^5 without a 10^10-entry table.

mod conjugacy;
mod spectrum;
mod subgroup;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use rand::{RngExt, SeedableRng};

use crate::arith::lcm;
use crate::error::{Axiom, Error, Result};

pub use conjugacy::ConjClass;
pub use spectrum::Spectrum;

/// Group elements are plain indices into `0..order`.
pub type Elem = usize;

/// Largest order stored as a dense multiplication table.
pub const TABLE_CAP: usize = 4096;
/// Largest order for which per-element iteration is allowed.
pub const ENUMERATION_CAP: usize = 200_000;
/// Tables up to this order get a full associativity check on ingestion.
pub const FULL_ASSOC_CHECK: usize = 512;

#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    repr: Repr,
    generators: Vec<Elem>,
}

#[derive(Clone, Debug)]
enum Repr {
    Table(Table),
    Product(Vec<Group>),
}

#[derive(Clone, Debug)]
struct Table {
    cells: Vec<u16>,
    inverse: Vec<u16>,
    orders: Vec<u32>,
}

impl Group {
    /// Builds a group from a Cayley table given as rows, validating every
    /// axiom. The identity is moved to index 0 if it sits elsewhere.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 || n > TABLE_CAP {
            return Err(Error::CapExceeded { what: "Cayley table", size: n, cap: TABLE_CAP });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Axiom { axiom: Axiom::Shape, witness: [i, row.len(), n] });
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::Axiom { axiom: Axiom::Closure, witness: [i, j, v] });
            }
        }
        let e = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x)).ok_or_else(|| {
            let x = (0..n).find(|&x| rows[0][x] != x || rows[x][0] != x).unwrap_or(0);
            Error::Axiom { axiom: Axiom::Identity, witness: [0, x, rows[0][x]] }
        })?;
        // swap e and 0 so the identity lands on index 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut cells = alloc::vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u16;
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| cells[a * n + b] == 0 && cells[b * n + a] == 0) {
                return Err(Error::Axiom { axiom: Axiom::Inverse, witness: [relabel(a), relabel(a), relabel(a)] });
            }
        }
        let group = Group::from_cells(name.into(), n, cells);
        group.check_associativity().map_err(|err| match err {
            Error::Axiom { axiom, witness } => Error::Axiom { axiom, witness: witness.map(relabel) },
            other => other,
        })?;
        Ok(group)
    }

    /// Builds a table-backed group from concrete elements and an operation.
    /// The identity is placed at index 0; the remaining elements keep the
    /// order given. Associativity is trusted (constructors are algebraic),
    /// closure is checked.
    pub(crate) fn from_elements<T, F>(name: impl Into<String>, elements: Vec<T>, identity: &T, op: F) -> Result<Group>
    where
        T: Ord + Clone,
        F: Fn(&T, &T) -> T,
    {
        let mut ordered = Vec::with_capacity(elements.len());
        ordered.push(identity.clone());
        ordered.extend(elements.into_iter().filter(|x| x != identity));
        let n = ordered.len();
        if n > TABLE_CAP {
            return Err(Error::CapExceeded { what: "table-backed group", size: n, cap: TABLE_CAP });
        }
        let index: BTreeMap<&T, usize> = ordered.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut cells = Vec::with_capacity(n * n);
        for (i, a) in ordered.iter().enumerate() {
            for (j, b) in ordered.iter().enumerate() {
                let c = op(a, b);
                let k = *index.get(&c).ok_or(Error::Axiom { axiom: Axiom::Closure, witness: [i, j, n] })?;
                cells.push(k as u16);
            }
        }
        Ok(Group::from_cells(name.into(), n, cells))
    }

    fn from_cells(name: String, n: usize, cells: Vec<u16>) -> Group {
        let mut inverse = alloc::vec![0u16; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| cells[a * n + b] == 0) {
                inverse[a] = b as u16;
            }
        }
        let mut orders = alloc::vec![1u32; n];
        for (g, slot) in orders.iter_mut().enumerate() {
            let mut x = g;
            let mut k = 1;
            while x != 0 && k <= n as u32 {
                x = cells[x * n + g] as usize;
                k += 1;
            }
            *slot = k;
        }
        let mut group =
            Group { name, order: n, repr: Repr::Table(Table { cells, inverse, orders }), generators: Vec::new() };
        group.generators = group.greedy_generators();
        group
    }

    /// Direct product kept as a composite view. Nested products are
    /// flattened; the element with components `(c_0, c_1, ..)` has index
    /// `c_0 + n_0 * (c_1 + n_1 * (..))`.
    pub fn product(name: impl Into<String>, factors: Vec<Group>) -> Result<Group> {
        let mut flat = Vec::new();
        for f in factors {
            match f.repr {
                Repr::Product(inner) => flat.extend(inner),
                Repr::Table(_) => flat.push(f),
            }
        }
        if flat.is_empty() {
            return Err(Error::Parameter("empty direct product".into()));
        }
        let order = flat
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.order))
            .ok_or_else(|| Error::Parameter("direct product order overflows".into()))?;
        let mut generators = Vec::new();
        let mut stride = 1;
        for f in &flat {
            generators.extend(f.generators.iter().map(|&g| g * stride));
            stride *= f.order;
        }
        Ok(Group { name: name.into(), order, repr: Repr::Product(flat), generators })
    }

    /// Dense table for a composite group, if it fits.
    pub fn materialize(&self) -> Result<Group> {
        if self.is_table_backed() {
            return Ok(self.clone());
        }
        let n = self.order;
        if n > TABLE_CAP {
            return Err(Error::CapExceeded { what: "materialized product", size: n, cap: TABLE_CAP });
        }
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(self.mul(a, b) as u16);
            }
        }
        Ok(Group::from_cells(self.name.clone(), n, cells))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.order
    }

    pub fn is_table_backed(&self) -> bool {
        matches!(self.repr, Repr::Table(_))
    }

    /// Factors of a composite view, `None` for table-backed groups.
    pub fn factors(&self) -> Option<&[Group]> {
        match &self.repr {
            Repr::Product(f) => Some(f),
            Repr::Table(_) => None,
        }
    }

    /// A generating set, used for orbit closures and normality tests.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_enumerable(&self) -> bool {
        self.order <= ENUMERATION_CAP
    }

    pub(crate) fn require_enumerable(&self, what: &'static str) -> Result<()> {
        if self.is_enumerable() {
            Ok(())
        } else {
            Err(Error::CapExceeded { what, size: self.order, cap: ENUMERATION_CAP })
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t.cells[a * self.order + b] as Elem,
            Repr::Product(factors) => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut stride = 1;
                for f in factors {
                    let (x, y) = (a % f.order, b % f.order);
                    a /= f.order;
                    b /= f.order;
                    out += f.mul(x, y) * stride;
                    stride *= f.order;
                }
                out
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t.inverse[a] as Elem,
            Repr::Product(factors) => self.map_components(factors, a, |f, x| f.inv(x)),
        }
    }

    fn map_components(&self, factors: &[Group], a: Elem, op: impl Fn(&Group, Elem) -> Elem) -> Elem {
        let mut a = a;
        let mut out = 0;
        let mut stride = 1;
        for f in factors {
            out += op(f, a % f.order) * stride;
            a /= f.order;
            stride *= f.order;
        }
        out
    }

    pub fn pow(&self, g: Elem, k: u64) -> Elem {
        let k = k % self.element_order(g);
        let mut acc = 0;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x^-1 g x`
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// `[x, y] = x^-1 y^-1 x y`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, g: Elem) -> u64 {
        match &self.repr {
            Repr::Table(t) => t.orders[g] as u64,
            Repr::Product(factors) => {
                let mut a = g;
                let mut o = 1;
                for f in factors {
                    o = lcm(o, f.element_order(a % f.order));
                    a /= f.order;
                }
                o
            }
        }
    }

    /// Component indices of a composite element (one entry for tables).
    pub fn components(&self, g: Elem) -> Vec<Elem> {
        match &self.repr {
            Repr::Table(_) => alloc::vec![g],
            Repr::Product(factors) => {
                let mut a = g;
                factors
                    .iter()
                    .map(|f| {
                        let c = a % f.order;
                        a /= f.order;
                        c
                    })
                    .collect()
            }
        }
    }

    /// Inverse of [`Group::components`].
    pub fn from_components(&self, components: &[Elem]) -> Result<Elem> {
        match &self.repr {
            Repr::Table(_) if components.len() == 1 && components[0] < self.order => Ok(components[0]),
            Repr::Product(factors)
                if factors.len() == components.len() && factors.iter().zip(components).all(|(f, &c)| c < f.order) =>
            {
                let mut out = 0;
                let mut stride = 1;
                for (f, &c) in factors.iter().zip(components) {
                    out += c * stride;
                    stride *= f.order;
                }
                Ok(out)
            }
            _ => Err(Error::Parameter(format!("components {components:?} do not address an element of {}", self.name))),
        }
    }

    /// Full associativity check up to [`FULL_ASSOC_CHECK`], otherwise
    /// `10 n` sampled triples from a fixed seed.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: Elem, b: Elem, c: Elem| {
            if self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)) {
                Ok(())
            } else {
                Err(Error::Axiom { axiom: Axiom::Associativity, witness: [a, b, c] })
            }
        };
        if n <= FULL_ASSOC_CHECK {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = rand::rngs::SmallRng::seed_from_u64(0x5eed ^ n as u64);
            for _ in 0..10 * n {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    /// Dense multiplication table rows, for export.
    pub fn table_rows(&self) -> Result<Vec<Vec<usize>>> {
        if self.order > TABLE_CAP {
            return Err(Error::CapExceeded { what: "table export", size: self.order, cap: TABLE_CAP });
        }
        Ok(self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect())
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let n = self.order;
        let mut inside = fixedbitset::FixedBitSet::with_capacity(n);
        inside.insert(0);
        let mut gens = Vec::new();
        for g in 0..n {
            if inside.contains(g) {
                continue;
            }
            gens.push(g);
            for h in self.subgroup_closure(&gens) {
                inside.insert(h);
            }
            if inside.count_ones(..) == n {
                break;
            }
        }
        gens
    }
}
