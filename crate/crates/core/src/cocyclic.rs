//! Cocyclic subgroups (`G/S` cyclic) and the brute-force count of their
//! isomorphism classes.
//!
//! A subgroup has cyclic quotient iff it is the kernel of a character of `G`,
//! so the enumeration walks the dual group (identified with `G` through the
//! reference basis) and computes one kernel per label. Labels generating the
//! same cyclic subgroup of the dual have the same kernel; only labels whose
//! first nonzero coordinate in each Sylow block is a power of that prime are
//! visited, which still reaches every cyclic subgroup.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::xgcd;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{AbelianGroup, GroupElement};
use crate::isotype::IsoType;
use crate::subgroup::Subgroup;

/// Largest group (or Sylow component) the enumeration will walk by default.
pub const DEFAULT_CAP: u64 = 531_441; // 3^12

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub cap: u64,
    pub exec: Exec,
    /// Enumerate each Sylow component separately and assemble products.
    pub split_sylow: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, exec: Exec::default(), split_sylow: true }
    }
}

impl EnumOptions {
    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn whole_group(mut self) -> Self {
        self.split_sylow = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeClass {
    pub representative: Subgroup,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocyclicInventory {
    pub group: AbelianGroup,
    pub classes: BTreeMap<IsoType, TypeClass>,
    pub eta: u64,
}

impl CocyclicInventory {
    pub fn types(&self) -> BTreeSet<IsoType> {
        self.classes.keys().cloned().collect()
    }

    pub fn total_subgroups(&self) -> u64 {
        self.classes.values().map(|c| c.count).sum()
    }

    fn from_subgroups(group: AbelianGroup, subs: Vec<Subgroup>) -> Self {
        let mut classes: BTreeMap<IsoType, TypeClass> = BTreeMap::new();
        for s in subs {
            classes
                .entry(s.iso_type())
                .and_modify(|c| {
                    c.count += 1;
                    if s < c.representative {
                        c.representative = s.clone();
                    }
                })
                .or_insert(TypeClass { representative: s, count: 1 });
        }
        let eta = classes.len() as u64;
        Self { group, classes, eta }
    }
}

/// `<t, g> = sum (e/d_i) t_i g_i mod e`, as the weights `(e/d_i) t_i`.
pub(crate) fn pairing_weights(g: &AbelianGroup, t: &GroupElement) -> Vec<u64> {
    let e = g.exponent();
    t.coords()
        .iter()
        .zip(g.generator_orders())
        .map(|(&ti, &d)| (e / d) * ti % e)
        .collect()
}

/// Kernel of the character with label `t`.
pub fn character_kernel(g: &AbelianGroup, t: &GroupElement) -> Result<Subgroup> {
    g.check(t)?;
    Ok(kernel_in(&Arc::new(g.clone()), t))
}

fn kernel_in(g: &Arc<AbelianGroup>, t: &GroupElement) -> Subgroup {
    let gens = kernel_generators(g, t);
    Subgroup::from_generators_in(g.clone(), &gens)
}

/// Generators of `{x : sum w_i x_i = 0 mod e}` from one unimodular column
/// elimination of `[w | I ; e | 0]`.
fn kernel_generators(g: &AbelianGroup, t: &GroupElement) -> Vec<GroupElement> {
    let e = g.exponent() as i128;
    let k = g.rank();
    let w = pairing_weights(g, t);
    let mut piv_val = e;
    let mut piv_tail = vec![0i128; k];
    let mut out = Vec::with_capacity(k);
    for (i, &wi) in w.iter().enumerate() {
        let mut tail = vec![0i128; k];
        tail[i] = 1;
        let wi = wi as i128;
        if wi != 0 {
            let (gcd, s, c) = xgcd(piv_val, wi);
            let a = piv_val / gcd;
            let b = wi / gcd;
            let new_piv: Vec<i128> = piv_tail.iter().zip(&tail).map(|(x, y)| s * x + c * y).collect();
            let zero_row: Vec<i128> = piv_tail.iter().zip(&tail).map(|(x, y)| b * x - a * y).collect();
            piv_val = gcd;
            piv_tail = new_piv;
            tail = zero_row;
        }
        out.push(g.element_from_ints(&tail).expect("rank matches"));
    }
    out
}

/// Labels visited by the enumeration: in every Sylow block the first nonzero
/// coordinate is a power of that block's prime.
fn is_normalized_label(g: &AbelianGroup, t: &GroupElement) -> bool {
    let c = t.coords();
    for p in g.primes() {
        let range = g.sylow_range(p).expect("prime of g");
        if let Some(&x) = c[range].iter().find(|&&x| x != 0) {
            let mut x = x;
            while x % p == 0 {
                x /= p;
            }
            if x != 1 {
                return false;
            }
        }
    }
    true
}

fn check_cap(size: u64, cap: u64) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { size: size as u128, cap: cap as u128 });
    }
    Ok(())
}

/// All character kernels of `g` (one group, no Sylow split), sorted.
pub(crate) fn kernels(g: &AbelianGroup, exec: Exec, normalize: bool) -> Vec<Subgroup> {
    let arc = Arc::new(g.clone());
    let found: HashSet<Vec<GroupElement>> = exec.fold_range(
        0..g.order(),
        HashSet::new,
        |mut acc, idx| {
            let t = arc.element_at(idx);
            if !normalize || is_normalized_label(&arc, &t) {
                acc.insert(kernel_in(&arc, &t).basis().to_vec());
            }
            acc
        },
        |a, b| {
            let (mut big, small) = if a.len() < b.len() { (b, a) } else { (a, b) };
            big.extend(small);
            big
        },
    );
    let mut bases: Vec<_> = found.into_iter().collect();
    bases.sort();
    bases.into_iter().map(|b| Subgroup::from_generators_in(arc.clone(), &b)).collect()
}

pub fn enumerate_cocyclic(g: &AbelianGroup) -> Result<Vec<Subgroup>> {
    enumerate_cocyclic_with(g, &EnumOptions::default())
}

/// Every cocyclic subgroup of `g` exactly once, sorted by canonical basis.
pub fn enumerate_cocyclic_with(g: &AbelianGroup, opts: &EnumOptions) -> Result<Vec<Subgroup>> {
    if !opts.split_sylow {
        check_cap(g.order(), opts.cap)?;
        return Ok(kernels(g, opts.exec, true));
    }
    let comps = g.sylow_decompose();
    for (_, c) in &comps {
        check_cap(c.order(), opts.cap)?;
    }
    let per: Vec<Vec<Subgroup>> = comps.iter().map(|(_, c)| kernels(c, opts.exec, true)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per.len()];
    if per.is_empty() {
        return Ok(vec![Subgroup::whole(g)]);
    }
    loop {
        let parts: Vec<Subgroup> = idx.iter().zip(&per).map(|(&i, v)| v[i].clone()).collect();
        out.push(Subgroup::assemble(g, &parts)?);
        let mut pos = per.len();
        loop {
            if pos == 0 {
                out.sort();
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < per[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn eta_bruteforce(g: &AbelianGroup) -> Result<CocyclicInventory> {
    eta_bruteforce_with(g, &EnumOptions::default())
}

/// Groups the cocyclic subgroups by isomorphism type.
///
/// With `split_sylow`, each Sylow component is inventoried on its own and the
/// classes are combined as products; otherwise the whole group is walked.
pub fn eta_bruteforce_with(g: &AbelianGroup, opts: &EnumOptions) -> Result<CocyclicInventory> {
    if !opts.split_sylow {
        check_cap(g.order(), opts.cap)?;
        return Ok(CocyclicInventory::from_subgroups(g.clone(), kernels(g, opts.exec, true)));
    }
    let comps = g.sylow_decompose();
    for (_, c) in &comps {
        check_cap(c.order(), opts.cap)?;
    }
    let mut classes: BTreeMap<IsoType, (Vec<Subgroup>, u64)> = BTreeMap::from([(IsoType::trivial(), (vec![], 1))]);
    for (_, c) in &comps {
        let inv = CocyclicInventory::from_subgroups(c.clone(), kernels(c, opts.exec, true));
        let mut next = BTreeMap::new();
        for (ty, (reps, count)) in &classes {
            for (cty, cls) in &inv.classes {
                let mut r = reps.clone();
                r.push(cls.representative.clone());
                next.insert(ty.product(cty), (r, count * cls.count));
            }
        }
        classes = next;
    }
    let classes: BTreeMap<IsoType, TypeClass> = classes
        .into_iter()
        .map(|(ty, (reps, count))| {
            let representative = if reps.is_empty() { Subgroup::whole(g) } else { Subgroup::assemble(g, &reps)? };
            Ok((ty, TypeClass { representative, count }))
        })
        .collect::<Result<_>>()?;
    let eta = classes.len() as u64;
    Ok(CocyclicInventory { group: g.clone(), classes, eta })
}

/// Isomorphism types of cocyclic subgroups of `C_{p^n} x C_{p^m}`, `n > m >= 1`:
/// `C_{p^i} x C_{p^j}` for `m <= i <= n`, `1 <= j <= m`, and `C_{p^{n-k}}` for `0 <= k <= n-m`.
pub fn list_cocyclic_types_rank2(n: u32, m: u32, p: u64) -> Result<BTreeSet<IsoType>> {
    if n <= m || m < 1 {
        return Err(Error::InvalidArgument(format!("need n > m >= 1, got n={n}, m={m}")));
    }
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut out = BTreeSet::new();
    for i in m..=n {
        for j in 1..=m {
            out.insert(IsoType::from_primaries(BTreeMap::from([(p, vec![i, j])])));
        }
    }
    for k in 0..=(n - m) {
        out.insert(IsoType::from_primaries(BTreeMap::from([(p, vec![n - k])])));
    }
    Ok(out)
}
