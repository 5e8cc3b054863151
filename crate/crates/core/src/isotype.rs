use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::group::AbelianGroup;

/// Isomorphism class label of a finite abelian group: prime -> decreasing partition.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct IsoType(BTreeMap<u64, Vec<u32>>);

impl IsoType {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// From per-prime partitions in any order.
    pub fn from_primaries(primaries: BTreeMap<u64, Vec<u32>>) -> Self {
        let mut out = BTreeMap::new();
        for (p, mut parts) in primaries {
            parts.retain(|&a| a > 0);
            if !parts.is_empty() {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(p, parts);
            }
        }
        IsoType(out)
    }

    /// From a list of cyclic orders (invariant factors or elementary divisors);
    /// zeros and ones are ignored.
    pub fn from_cyclic_orders<I: IntoIterator<Item = u64>>(orders: I) -> Self {
        let mut primaries: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for n in orders {
            if n > 1 {
                for (p, a) in factorize(n) {
                    primaries.entry(p).or_default().push(a);
                }
            }
        }
        Self::from_primaries(primaries)
    }

    pub fn of_group(g: &AbelianGroup) -> Self {
        IsoType(g.primaries().clone())
    }

    pub fn primaries(&self) -> &BTreeMap<u64, Vec<u32>> {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().map(|(&p, parts)| parts.iter().map(|&a| p.pow(a)).product::<u64>()).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.values().all(|parts| parts.len() <= 1)
    }

    /// Partition for prime `p` (empty when `p` does not divide the order).
    pub fn partition(&self, p: u64) -> &[u32] {
        self.0.get(&p).map_or(&[], Vec::as_slice)
    }

    /// Componentwise product of types with disjoint (or overlapping) primes.
    pub fn product(&self, other: &IsoType) -> IsoType {
        let mut m = self.0.clone();
        for (&p, parts) in &other.0 {
            m.entry(p).or_default().extend(parts);
        }
        Self::from_primaries(m)
    }

    pub fn to_group(&self) -> AbelianGroup {
        AbelianGroup::from_primaries(self.0.clone()).expect("iso type describes a valid group")
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "C1");
        }
        let mut first = true;
        for (&p, parts) in &self.0 {
            for &a in parts {
                if !first {
                    write!(f, "x")?;
                }
                first = false;
                write!(f, "C{}", p.pow(a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IsoType({self})")
    }
}

impl TryFrom<String> for IsoType {
    type Error = crate::error::Error;
    fn try_from(s: String) -> crate::error::Result<Self> {
        Ok(Self::of_group(&AbelianGroup::parse(&s)?))
    }
}

impl From<IsoType> for String {
    fn from(t: IsoType) -> Self {
        t.to_string()
    }
}
