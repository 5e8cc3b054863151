#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use abelcodes::{AbelianGroup, GroupElement};

pub fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order at most `limit`, up to isomorphism.
pub fn groups_up_to(limit: u64) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    for order in 1..=limit {
        let mut acc = vec![AbelianGroup::trivial()];
        for (p, a) in abelcodes::arith::factorize(order) {
            acc = acc
                .iter()
                .flat_map(|g| partitions(a, a).into_iter().map(move |part| g.product(&AbelianGroup::p_group(p, &part).unwrap())))
                .collect();
        }
        out.extend(acc);
    }
    out
}

/// p-groups with at most `max_rank` factors, each of exponent at most `max_exp`.
pub fn p_groups(p: u64, max_rank: usize, max_exp: u32) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    for total in 1..=(max_rank as u32 * max_exp) {
        for part in partitions(total, max_exp) {
            if part.len() <= max_rank {
                out.push(AbelianGroup::p_group(p, &part).unwrap());
            }
        }
    }
    out
}

pub type Mask = Vec<u64>;

/// Brute-force view of a small group: elements by index and an addition table.
pub struct Table {
    pub group: AbelianGroup,
    pub n: usize,
    add: Vec<u32>,
}

impl Table {
    pub fn new(group: &AbelianGroup) -> Self {
        let n = group.order() as usize;
        let elems: Vec<GroupElement> = (0..n as u64).map(|i| group.element_at(i)).collect();
        let mut add = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                add.push(group.index_of(&group.add(a, b).unwrap()) as u32);
            }
        }
        Self { group: group.clone(), n, add }
    }

    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.add[i * self.n + j] as usize
    }

    pub fn empty(&self) -> Mask {
        vec![0; self.n.div_ceil(64)]
    }

    pub fn members(&self, m: &Mask) -> Vec<usize> {
        (0..self.n).filter(|&i| has(m, i)).collect()
    }

    /// Closure of `m` (a subgroup) together with element `g`.
    pub fn join(&self, m: &Mask, g: usize) -> Mask {
        let mut out = m.clone();
        let base = self.members(m);
        let mut shift = g;
        while !has(m, shift) {
            for &s in &base {
                set(&mut out, self.sum(s, shift));
            }
            shift = self.sum(shift, g);
        }
        out
    }

    pub fn trivial(&self) -> Mask {
        let mut m = self.empty();
        set(&mut m, 0);
        m
    }

    pub fn closure(&self, gens: &[usize]) -> Mask {
        gens.iter().fold(self.trivial(), |m, &g| self.join(&m, g))
    }

    /// Every subgroup, by breadth-first joins.
    pub fn all_subgroups(&self) -> Vec<Mask> {
        let start = self.trivial();
        let mut seen: HashSet<Mask> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        while let Some(m) = frontier.pop() {
            for g in 0..self.n {
                if !has(&m, g) {
                    let j = self.join(&m, g);
                    if seen.insert(j.clone()) {
                        frontier.push(j);
                    }
                }
            }
        }
        let mut out: Vec<Mask> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn size(&self, m: &Mask) -> usize {
        m.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether `G / m` is cyclic: some coset has order equal to the index.
    pub fn quotient_is_cyclic(&self, m: &Mask) -> bool {
        let index = self.n / self.size(m);
        (0..self.n).any(|g| {
            let (mut k, mut x) = (1, g);
            while !has(m, x) {
                x = self.sum(x, g);
                k += 1;
            }
            k == index
        })
    }

    fn order_of(&self, g: usize) -> u64 {
        let (mut k, mut x) = (1, g);
        while x != 0 {
            x = self.sum(x, g);
            k += 1;
        }
        k
    }

    /// Number of elements of each order in `m`.
    pub fn census(&self, m: &Mask) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for i in self.members(m) {
            *out.entry(self.order_of(i)).or_insert(0) += 1;
        }
        out
    }

    pub fn mask_of(&self, elems: &[GroupElement]) -> Mask {
        let mut m = self.empty();
        for e in elems {
            set(&mut m, self.group.index_of(e) as usize);
        }
        m
    }

    pub fn elements_of(&self, m: &Mask) -> Vec<GroupElement> {
        self.members(m).into_iter().map(|i| self.group.element_at(i as u64)).collect()
    }

    /// Number of cyclic subgroups: each of order `k` has `phi(k)` generators.
    pub fn cyclic_subgroup_count(&self) -> u64 {
        let mut whole = self.empty();
        for i in 0..self.n {
            set(&mut whole, i);
        }
        self.census(&whole).iter().map(|(&k, &c)| c / totient(k)).sum()
    }
}

pub fn has(m: &Mask, i: usize) -> bool {
    m[i / 64] >> (i % 64) & 1 == 1
}

pub fn set(m: &mut Mask, i: usize) {
    m[i / 64] |= 1 << (i % 64);
}

pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| abelcodes::arith::gcd(k, n) == 1).count() as u64
}
