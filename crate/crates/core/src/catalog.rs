//! Constructors for the standard group families, the built-in catalog used
//! by verification sweeps, and the prime-chain embedding of an arbitrary
//! graph into a product of small non-abelian groups.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{is_prime, lcm, prime_power_base};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Elem, Group, TABLE_CAP};

fn check_table_order(what: &str, order: u64) -> Result<usize> {
    if order == 0 || order > TABLE_CAP as u64 {
        return Err(Error::Parameter(format!("{what} would have order {order}, supported range is 1..={TABLE_CAP}")));
    }
    Ok(order as usize)
}

/// Integers mod `n`.
pub fn cyclic(n: u64) -> Result<Group> {
    let order = check_table_order("cyclic group", n)?;
    Group::from_elements(format!("C{n}"), (0..order).collect(), &0, |&a, &b| (a + b) % order)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: u64) -> Result<Group> {
    let order = check_table_order("dihedral group", 2 * n)?;
    let n = order / 2;
    let elements = (0..n).flat_map(|i| [(i, 0u8), (i, 1u8)]).collect();
    // (r^i s^a)(r^k s^b) = r^(i ± k) s^(a+b)
    Group::from_elements(format!("D{n}"), elements, &(0, 0), move |&(i, a), &(k, b)| {
        let k = if a == 1 { (n - k) % n } else { k };
        ((i + k) % n, a ^ b)
    })
}

/// Generalized quaternion group of order `2^k`, as normal forms `a^i b^j`
/// with `a^(2^(k-1)) = e`, `b^2 = a^(2^(k-2))` and `b^-1 a b = a^-1`.
pub fn generalized_quaternion(k: u32) -> Result<Group> {
    if k < 3 {
        return Err(Error::Parameter(format!("generalized quaternion needs k >= 3, got {k}")));
    }
    let order = check_table_order("generalized quaternion group", 1u64.checked_shl(k).unwrap_or(0))?;
    let m = order / 2;
    let half = m / 2;
    let elements = (0..m).flat_map(|i| [(i, 0u8), (i, 1u8)]).collect();
    Group::from_elements(format!("Q{order}"), elements, &(0, 0), move |&(i, j), &(l, t)| {
        if j == 0 {
            ((i + l) % m, t)
        } else {
            let i = (i + m - l) % m;
            if t == 1 {
                ((i + half) % m, 0)
            } else {
                (i, 1)
            }
        }
    })
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    heap(n, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

fn is_even(p: &[u8]) -> bool {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// Symmetric group on `n <= 6` points.
pub fn symmetric(n: u64) -> Result<Group> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parameter(format!("symmetric group degree must be 1..=6, got {n}")));
    }
    let id: Vec<u8> = (0..n as u8).collect();
    Group::from_elements(format!("S{n}"), permutations(n as usize), &id, |p, q| compose(p, q))
}

/// Alternating group on `n <= 6` points.
pub fn alternating(n: u64) -> Result<Group> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parameter(format!("alternating group degree must be 1..=6, got {n}")));
    }
    let id: Vec<u8> = (0..n as u8).collect();
    let even = permutations(n as usize).into_iter().filter(|p| is_even(p)).collect();
    Group::from_elements(format!("A{n}"), even, &id, |p, q| compose(p, q))
}

/// `(C_p)^k`.
pub fn elementary_abelian(p: u64, k: u32) -> Result<Group> {
    if !is_prime(p) || k == 0 {
        return Err(Error::Parameter(format!("elementary abelian needs p prime and k >= 1, got ({p}, {k})")));
    }
    let order = check_table_order("elementary abelian group", p.saturating_pow(k))?;
    let elements: Vec<Vec<u64>> = (0..order as u64)
        .map(|mut x| {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        })
        .collect();
    let zero = alloc::vec![0; k as usize];
    let name = if k == 1 { format!("C{p}") } else { format!("C{p}^{k}") };
    Group::from_elements(name, elements, &zero, move |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
}

/// Least `r > 1` with multiplicative order `p` modulo `q`.
fn root_of_order(p: u64, q: u64) -> Option<u64> {
    (2..q).find(|&r| {
        let mut x = 1;
        for k in 1..=p {
            x = x * r % q;
            if x == 1 {
                return k == p;
            }
        }
        false
    })
}

/// Non-abelian group of order `pq` for primes with `p | q - 1`: pairs
/// `(a mod q, b mod p)` with `(a, b)(a', b') = (a + r^b a', b + b')`.
///
/// Element `(a, b)` has index `a * p + b`; so index `1` has order `p` and
/// index `p` has order `q`.
pub fn nonabelian_pq(p: u64, q: u64) -> Result<Group> {
    if !is_prime(p) || !is_prime(q) || (q - 1) % p != 0 {
        return Err(Error::Parameter(format!("nonabelian_pq needs primes with p | q - 1, got ({p}, {q})")));
    }
    check_table_order("non-abelian pq group", p * q)?;
    let r = root_of_order(p, q).ok_or_else(|| Error::Parameter(format!("no root of order {p} mod {q}")))?;
    let mut powers = alloc::vec![1u64; p as usize];
    for b in 1..p as usize {
        powers[b] = powers[b - 1] * r % q;
    }
    let elements = (0..q).flat_map(|a| (0..p).map(move |b| (a, b))).collect();
    Group::from_elements(format!("C{q}:C{p}"), elements, &(0, 0), move |&(a, b), &(a2, b2)| {
        ((a + powers[b as usize] * a2) % q, (b + b2) % p)
    })
}

/// Heisenberg group mod an odd prime `p`: triples with
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`.
pub fn heisenberg(p: u64) -> Result<Group> {
    if !is_prime(p) || p == 2 {
        return Err(Error::Parameter(format!("heisenberg needs an odd prime, got {p}")));
    }
    check_table_order("heisenberg group", p * p * p)?;
    let elements = (0..p * p * p).map(|x| (x % p, x / p % p, x / (p * p))).collect();
    Group::from_elements(format!("He{p}"), elements, &(0, 0, 0), move |&(a, b, c), &(x, y, z)| {
        ((a + x) % p, (b + y) % p, (c + z + a * y) % p)
    })
}

/// `G x H`; materialized as a table when it fits, otherwise a composite view.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let name = format!("{}x{}", g.name(), h.name());
    let product = Group::product(name, alloc::vec![g.clone(), h.clone()])?;
    if product.order() <= TABLE_CAP {
        product.materialize()
    } else {
        Ok(product)
    }
}

/// A constructor id plus parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "family", rename_all = "snake_case"))]
pub enum Family {
    Cyclic { n: u64 },
    Dihedral { n: u64 },
    Quaternion { k: u32 },
    Symmetric { n: u64 },
    Alternating { n: u64 },
    ElementaryAbelian { p: u64, k: u32 },
    Heisenberg { p: u64 },
    NonabelianPq { p: u64, q: u64 },
    Product { factors: Vec<Family> },
}

/// Group properties that follow from the family formula alone.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Predicted {
    pub abelian: Option<bool>,
    pub cyclic: Option<bool>,
    pub p_group: Option<bool>,
    pub dedekind: Option<bool>,
}

impl Family {
    pub fn build(&self) -> Result<Group> {
        match *self {
            Family::Cyclic { n } => cyclic(n),
            Family::Dihedral { n } => dihedral(n),
            Family::Quaternion { k } => generalized_quaternion(k),
            Family::Symmetric { n } => symmetric(n),
            Family::Alternating { n } => alternating(n),
            Family::ElementaryAbelian { p, k } => elementary_abelian(p, k),
            Family::Heisenberg { p } => heisenberg(p),
            Family::NonabelianPq { p, q } => nonabelian_pq(p, q),
            Family::Product { ref factors } => {
                let mut iter = factors.iter();
                let first = iter.next().ok_or_else(|| Error::Parameter("empty product".into()))?.build()?;
                iter.try_fold(first, |acc, f| direct_product(&acc, &f.build()?))
            }
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            Family::Cyclic { n } => n,
            Family::Dihedral { n } => 2 * n,
            Family::Quaternion { k } => 1 << k,
            Family::Symmetric { n } | Family::Alternating { n } => {
                let f: u64 = (1..=n).product();
                if matches!(self, Family::Alternating { .. }) && n > 1 {
                    f / 2
                } else {
                    f
                }
            }
            Family::ElementaryAbelian { p, k } => p.pow(k),
            Family::Heisenberg { p } => p * p * p,
            Family::NonabelianPq { p, q } => p * q,
            Family::Product { ref factors } => factors.iter().map(Family::order).product(),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Family::Cyclic { n } => format!("C{n}"),
            Family::Dihedral { n } => format!("D{n}"),
            Family::Quaternion { k } => format!("Q{}", 1u64 << k),
            Family::Symmetric { n } => format!("S{n}"),
            Family::Alternating { n } => format!("A{n}"),
            Family::ElementaryAbelian { p, k: 1 } => format!("C{p}"),
            Family::ElementaryAbelian { p, k } => format!("C{p}^{k}"),
            Family::Heisenberg { p } => format!("He{p}"),
            Family::NonabelianPq { p, q } => format!("C{q}:C{p}"),
            Family::Product { ref factors } => {
                let names: Vec<String> = factors.iter().map(Family::name).collect();
                names.join("x")
            }
        }
    }

    pub fn predicted(&self) -> Predicted {
        let order = self.order();
        let p_group = Some(order == 1 || prime_power_base(order).is_some());
        match *self {
            Family::Cyclic { .. } => {
                Predicted { abelian: Some(true), cyclic: Some(true), p_group, dedekind: Some(true) }
            }
            Family::ElementaryAbelian { k, .. } => {
                Predicted { abelian: Some(true), cyclic: Some(k == 1), p_group, dedekind: Some(true) }
            }
            Family::Dihedral { n } if n >= 3 => {
                Predicted { abelian: Some(false), cyclic: Some(false), p_group, dedekind: Some(false) }
            }
            Family::Quaternion { k } => {
                Predicted { abelian: Some(false), cyclic: Some(false), p_group, dedekind: Some(k == 3) }
            }
            Family::Symmetric { n } | Family::Alternating { n } if n >= 3 && order > 3 => {
                Predicted { abelian: Some(false), cyclic: Some(false), p_group, dedekind: Some(false) }
            }
            Family::Heisenberg { .. } | Family::NonabelianPq { .. } => {
                Predicted { abelian: Some(false), cyclic: Some(false), p_group, dedekind: Some(false) }
            }
            Family::Product { ref factors } => {
                let parts: Vec<Predicted> = factors.iter().map(Family::predicted).collect();
                let abelian = parts.iter().try_fold(true, |acc, p| p.abelian.map(|a| acc && a));
                Predicted { abelian, cyclic: None, p_group, dedekind: None }
            }
            _ => Predicted { p_group, ..Predicted::default() },
        }
    }
}

fn parse_u64(s: &str, id: &str) -> Result<u64> {
    s.parse().map_err(|_| Error::UnknownGroup(id.to_string()))
}

/// Parses ids such as `C12`, `D4`, `Q16`, `S4`, `A5`, `C2^3`, `He3`,
/// `C7:C3` and products `S3xC2`.
pub fn parse_id(id: &str) -> Result<Family> {
    let unknown = || Error::UnknownGroup(id.to_string());
    if id.contains('x') {
        let factors = id.split('x').map(parse_id).collect::<Result<Vec<_>>>()?;
        return Ok(Family::Product { factors });
    }
    if let Some(rest) = id.strip_prefix("He") {
        return Ok(Family::Heisenberg { p: parse_u64(rest, id)? });
    }
    if let Some((left, right)) = id.split_once(':') {
        let q = parse_u64(left.strip_prefix('C').ok_or_else(unknown)?, id)?;
        let p = parse_u64(right.strip_prefix('C').ok_or_else(unknown)?, id)?;
        return Ok(Family::NonabelianPq { p, q });
    }
    let (head, tail) = id.split_at(id.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
    let family = match head {
        "C" => match tail.split_once('^') {
            Some((p, k)) => Family::ElementaryAbelian { p: parse_u64(p, id)?, k: parse_u64(k, id)? as u32 },
            None => Family::Cyclic { n: parse_u64(tail, id)? },
        },
        "D" => Family::Dihedral { n: parse_u64(tail, id)? },
        "S" => Family::Symmetric { n: parse_u64(tail, id)? },
        "A" => Family::Alternating { n: parse_u64(tail, id)? },
        "Q" => {
            let order = parse_u64(tail, id)?;
            if !order.is_power_of_two() || order < 8 {
                return Err(unknown());
            }
            Family::Quaternion { k: order.trailing_zeros() }
        }
        _ => return Err(unknown()),
    };
    Ok(family)
}

/// Builds a group from an id understood by [`parse_id`].
pub fn build_id(id: &str) -> Result<Group> {
    let family = parse_id(id)?;
    let order = family.order();
    check_table_order(id, order)
        .map_err(|_| Error::Parameter(format!("{id} has order {order}, above the table cap {TABLE_CAP}")))?;
    Ok(family.build()?.with_name(id))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CatalogEntry {
    pub name: String,
    pub order: u64,
    pub constructor: Family,
    pub predicted: Predicted,
}

impl CatalogEntry {
    fn new(family: Family) -> CatalogEntry {
        CatalogEntry { name: family.name(), order: family.order(), predicted: family.predicted(), constructor: family }
    }

    pub fn build(&self) -> Result<Group> {
        Ok(self.constructor.build()?.with_name(self.name.clone()))
    }
}

/// Largest order among products of catalog pairs.
pub const PRODUCT_ORDER_CAP: u64 = 200;

/// The built-in catalog, sorted by order and then name.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use Family::*;
    let mut families = Vec::new();
    families.extend((1..=64).map(|n| Cyclic { n }));
    families.extend((3..=32).map(|n| Dihedral { n }));
    families.extend((3..=5).map(|k| Quaternion { k }));
    families.extend((3..=5).map(|n| Symmetric { n }));
    families.extend([Alternating { n: 4 }, Alternating { n: 5 }]);
    for p in [2, 3] {
        families.extend((2..=3).map(|k| ElementaryAbelian { p, k }));
    }
    families.push(Heisenberg { p: 3 });
    for (p, q) in [(2, 3), (2, 5), (3, 7), (2, 7)] {
        families.push(NonabelianPq { p, q });
    }
    let pair = |a: Family, b: Family| Product { factors: alloc::vec![a, b] };
    let explicit = [
        pair(Cyclic { n: 2 }, Cyclic { n: 4 }),
        pair(Cyclic { n: 2 }, Quaternion { k: 3 }),
        pair(Symmetric { n: 3 }, Cyclic { n: 2 }),
    ];
    families.extend(explicit.iter().cloned());

    let factors = [
        Cyclic { n: 2 },
        Cyclic { n: 3 },
        Cyclic { n: 4 },
        Cyclic { n: 5 },
        ElementaryAbelian { p: 2, k: 2 },
        Symmetric { n: 3 },
        Dihedral { n: 4 },
        Quaternion { k: 3 },
        Alternating { n: 4 },
        Dihedral { n: 5 },
        NonabelianPq { p: 3, q: 7 },
        Heisenberg { p: 3 },
        Quaternion { k: 4 },
        Dihedral { n: 6 },
        Symmetric { n: 4 },
    ];
    let same_pair = |f: &Family, a: &Family, b: &Family| match f {
        Product { factors } if factors.len() == 2 => {
            (&factors[0] == a && &factors[1] == b) || (&factors[0] == b && &factors[1] == a)
        }
        _ => false,
    };
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.order() * b.order() > PRODUCT_ORDER_CAP {
                continue;
            }
            // coprime cyclic pairs only repeat a cyclic entry
            if let (Cyclic { n }, Cyclic { n: m }) = (a, b) {
                if crate::arith::gcd(*n, *m) == 1 {
                    continue;
                }
            }
            if explicit.iter().any(|f| same_pair(f, a, b)) {
                continue;
            }
            families.push(pair(a.clone(), b.clone()));
        }
    }
    let mut entries: Vec<CatalogEntry> = families.into_iter().map(CatalogEntry::new).collect();
    entries.sort_by(|x, y| x.order.cmp(&y.order).then_with(|| x.name.cmp(&y.name)));
    entries.dedup_by(|x, y| x.name == y.name);
    entries
}

/// `n <= 6` primes with `p_i | p_j - 1` whenever `i < j`: `p_1 = 2`, then
/// the least prime congruent to 1 modulo the lcm of those chosen so far.
pub fn prime_chain(n: usize) -> Result<Vec<u64>> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parameter(format!("prime chains are supported for 1..=6 primes, got {n}")));
    }
    let mut chain = alloc::vec![2u64];
    while chain.len() < n {
        let m = chain.iter().fold(1, |acc, &p| lcm(acc, p));
        let mut candidate = m + 1;
        while !is_prime(candidate) {
            candidate += m;
        }
        chain.push(candidate);
    }
    Ok(chain)
}

/// A group together with one designated element per vertex of `graph`
/// such that the designated elements induce `graph` in the conjugacy
/// superenhanced power graph and the conjugacy supercommuting graph.
#[derive(Clone, Debug)]
pub struct EmbeddingWitness {
    pub graph: Graph,
    pub primes: Vec<u64>,
    /// Non-edges `{i, j}`, one direct factor `G_ij` each.
    pub non_edges: Vec<(usize, usize)>,
    /// Description of each `G_ij` (or of the cyclic factors when the graph is complete).
    pub factor_names: Vec<String>,
    pub name: String,
    /// `None` when the order does not fit in `usize`.
    pub group: Option<Group>,
    /// Empty when `group` is `None`.
    pub designated: Vec<Elem>,
}

/// Embeds `graph` as described on [`EmbeddingWitness`]. The witness group is
/// always a composite view; the caller decides whether it is small enough
/// to verify.
pub fn embed_graph(graph: &Graph) -> Result<EmbeddingWitness> {
    let n = graph.vertex_count();
    let primes = prime_chain(n)?;
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !graph.has_edge(i, j)).collect();

    let mut factors: Vec<Group> = Vec::new();
    // designated[k] collects the component of x_k in each flat factor
    let mut components: Vec<Vec<Elem>> = alloc::vec![Vec::new(); n];
    let mut factor_names = Vec::new();
    if non_edges.is_empty() {
        for (k, &p) in primes.iter().enumerate() {
            factors.push(cyclic(p)?);
            for (l, comp) in components.iter_mut().enumerate() {
                comp.push(if l == k { 1 } else { 0 });
            }
        }
        factor_names.push(primes.iter().map(|p| format!("C{p}")).collect::<Vec<_>>().join("x"));
    } else {
        for &(i, j) in &non_edges {
            let (p, q) = (primes[i], primes[j]);
            factors.push(nonabelian_pq(p, q)?);
            let mut name = format!("C{q}:C{p}");
            for (k, comp) in components.iter_mut().enumerate() {
                comp.push(if k == i {
                    1
                } else if k == j {
                    p as Elem
                } else {
                    0
                });
            }
            for k in (0..n).filter(|&k| k != i && k != j) {
                factors.push(cyclic(primes[k])?);
                name.push_str(&format!("xC{}", primes[k]));
                for (l, comp) in components.iter_mut().enumerate() {
                    comp.push(if l == k { 1 } else { 0 });
                }
            }
            factor_names.push(name);
        }
    }
    let name = format!("({})", factor_names.join(")x("));
    let group = Group::product(name.clone(), factors).ok();
    let designated = match &group {
        Some(g) => components.iter().map(|c| g.from_components(c)).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(EmbeddingWitness { graph: graph.clone(), primes, non_edges, factor_names, name, group, designated })
}
