//! Finite abelian groups in primary decomposition.
//!
//! A group is stored as, for each prime `p`, a weakly decreasing partition
//! `a_1 >= a_2 >= ... >= a_r >= 1`, meaning the Sylow `p`-subgroup is
//! `C_{p^a_1} x ... x C_{p^a_r}`. The flattened list of cyclic factor orders
//! (primes ascending, partition order within a prime) fixes the reference
//! basis against which elements are written as coordinate vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, lcm};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct AbelianGroup {
    primaries: BTreeMap<u64, Vec<u32>>,
    generator_orders: Vec<u64>,
    order: u64,
    exponent: u64,
}

/// Coordinates of an element relative to the ambient reference basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl AbelianGroup {
    /// Builds a group from per-prime partitions. Partitions are sorted into
    /// decreasing order; zero parts are dropped.
    pub fn from_primaries(primaries: BTreeMap<u64, Vec<u32>>) -> Result<Self> {
        let mut clean = BTreeMap::new();
        for (p, mut parts) in primaries {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            parts.retain(|&a| a > 0);
            if parts.is_empty() {
                continue;
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            clean.insert(p, parts);
        }
        let mut generator_orders = Vec::new();
        for (&p, parts) in &clean {
            for &a in parts {
                let d = p
                    .checked_pow(a)
                    .ok_or_else(|| Error::InvalidArgument(format!("{p}^{a} overflows u64")))?;
                generator_orders.push(d);
            }
        }
        let order = generator_orders
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidArgument("group order overflows u64".into()))?;
        let exponent = generator_orders.iter().fold(1, |acc, &d| lcm(acc, d));
        Ok(Self { primaries: clean, generator_orders, order, exponent })
    }

    /// Direct product of cyclic groups of the given orders (each split by CRT).
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut primaries: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::InvalidOrder(0));
            }
            for (p, a) in factorize(n) {
                primaries.entry(p).or_default().push(a);
            }
        }
        Self::from_primaries(primaries)
    }

    /// A `p`-group with the given partition.
    pub fn p_group(p: u64, partition: &[u32]) -> Result<Self> {
        Self::from_primaries(BTreeMap::from([(p, partition.to_vec())]))
    }

    pub fn trivial() -> Self {
        Self::from_primaries(BTreeMap::new()).expect("trivial group")
    }

    /// Parses `C9xC3`, `C6`, `3^[2,1]`, `2^[2,1]x3^[1]`, ... (whitespace ignored).
    pub fn parse(spec: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { spec: spec.to_string(), reason: reason.to_string() };
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty spec"));
        }
        let mut primaries: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        // 'x' separates factors; it never occurs inside a factor
        for factor in compact.split(['x', 'X']) {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if let Some(num) = factor.strip_prefix(['C', 'c']) {
                let n: i128 = num.parse().map_err(|_| err(&format!("bad cyclic order {num:?}")))?;
                if n < 1 {
                    return Err(Error::InvalidOrder(n));
                }
                let n = u64::try_from(n).map_err(|_| err("order too large"))?;
                for (p, a) in factorize(n) {
                    primaries.entry(p).or_default().push(a);
                }
            } else if let Some((base, rest)) = factor.split_once('^') {
                let p: u64 = base.parse().map_err(|_| err(&format!("bad prime {base:?}")))?;
                if !is_prime(p) {
                    return Err(err(&format!("{p} is not prime")));
                }
                let inner = rest
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| err("expected p^[a1,a2,...]"))?;
                for part in inner.split(',') {
                    let a: i64 = part.parse().map_err(|_| err(&format!("bad exponent {part:?}")))?;
                    if a < 1 {
                        return Err(err("partition entries must be >= 1"));
                    }
                    primaries.entry(p).or_default().push(a as u32);
                }
            } else {
                return Err(err(&format!("unrecognized factor {factor:?}")));
            }
        }
        Self::from_primaries(primaries)
    }

    pub fn primaries(&self) -> &BTreeMap<u64, Vec<u32>> {
        &self.primaries
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.generator_orders
    }

    pub fn rank(&self) -> usize {
        self.generator_orders.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primaries.keys().copied()
    }

    /// The single prime of a nontrivial `p`-group.
    pub fn single_prime(&self) -> Option<u64> {
        let mut it = self.primaries.keys();
        match (it.next(), it.next()) {
            (Some(&p), None) => Some(p),
            _ => None,
        }
    }

    /// Number of divisors of the exponent.
    pub fn tau(&self) -> u64 {
        self.primaries.values().map(|parts| parts[0] as u64 + 1).product()
    }

    pub fn is_homocyclic(&self) -> bool {
        self.generator_orders.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_homocyclic_sylowwise(&self) -> bool {
        self.primaries.values().all(|parts| parts.iter().all(|&a| a == parts[0]))
    }

    pub fn is_cyclic(&self) -> bool {
        self.primaries.values().all(|parts| parts.len() <= 1)
    }

    /// Coordinate range of the Sylow `p`-component inside the reference basis.
    pub fn sylow_range(&self, p: u64) -> Option<Range<usize>> {
        let mut start = 0;
        for (&q, parts) in &self.primaries {
            if q == p {
                return Some(start..start + parts.len());
            }
            start += parts.len();
        }
        None
    }

    /// Sylow components in ascending prime order.
    pub fn sylow_decompose(&self) -> Vec<(u64, AbelianGroup)> {
        self.primaries
            .iter()
            .map(|(&p, parts)| (p, AbelianGroup::p_group(p, parts).expect("valid component")))
            .collect()
    }

    /// Direct product; primary parts of equal primes are merged.
    pub fn product(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut primaries = self.primaries.clone();
        for (&p, parts) in &other.primaries {
            primaries.entry(p).or_default().extend(parts);
        }
        AbelianGroup::from_primaries(primaries).expect("product of valid groups")
    }

    /// `k`-fold direct power.
    pub fn power(&self, k: usize) -> AbelianGroup {
        let mut primaries = self.primaries.clone();
        for parts in primaries.values_mut() {
            *parts = parts.iter().flat_map(|&a| std::iter::repeat_n(a, k)).collect();
        }
        AbelianGroup::from_primaries(primaries).expect("power of a valid group")
    }

    // ---- elements -------------------------------------------------------

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Reference basis vector `e_i`.
    pub fn basis_element(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1 % self.generator_orders[i];
        GroupElement(c)
    }

    /// Reduces arbitrary integer coordinates into canonical residues.
    pub fn element_from_ints(&self, coords: &[i128]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(self.mismatch());
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.generator_orders)
                .map(|(&c, &d)| c.rem_euclid(d as i128) as u64)
                .collect(),
        ))
    }

    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        let g = GroupElement(coords.to_vec());
        self.check(&g)?;
        Ok(g)
    }

    pub fn contains_element(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.generator_orders).all(|(&c, &d)| c < d)
    }

    pub(crate) fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains_element(g) {
            Ok(())
        } else {
            Err(self.mismatch())
        }
    }

    pub(crate) fn mismatch(&self) -> Error {
        Error::AmbientMismatch { expected: self.to_string() }
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, h))
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.scalar_mul_unchecked(-1, g))
    }

    pub fn scalar_mul(&self, n: i128, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.scalar_mul_unchecked(n, g))
    }

    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(self.order_unchecked(g))
    }

    pub(crate) fn add_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.generator_orders)
                .map(|((&a, &b), &d)| ((a as u128 + b as u128) % d as u128) as u64)
                .collect(),
        )
    }

    pub(crate) fn scalar_mul_unchecked(&self, n: i128, g: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.generator_orders)
                .map(|(&c, &d)| {
                    let d = d as i128;
                    (n.rem_euclid(d) * c as i128).rem_euclid(d) as u64
                })
                .collect(),
        )
    }

    pub(crate) fn order_unchecked(&self, g: &GroupElement) -> u64 {
        g.0.iter()
            .zip(&self.generator_orders)
            .fold(1, |acc, (&c, &d)| lcm(acc, d / gcd(d, c)))
    }

    /// Element at position `index` of the lexicographic enumeration
    /// (last coordinate varies fastest).
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut c = vec![0; self.rank()];
        for (slot, &d) in c.iter_mut().zip(&self.generator_orders).rev() {
            *slot = index % d;
            index /= d;
        }
        GroupElement(c)
    }

    pub fn index_of(&self, g: &GroupElement) -> u64 {
        g.0.iter().zip(&self.generator_orders).fold(0, |acc, (&c, &d)| acc * d + c)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generator_orders.is_empty() {
            return write!(f, "C1");
        }
        for (i, d) in self.generator_orders.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "C{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

impl std::str::FromStr for AbelianGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl TryFrom<String> for AbelianGroup {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Self::parse(&s)
    }
}

impl From<AbelianGroup> for String {
    fn from(g: AbelianGroup) -> Self {
        g.to_string()
    }
}
