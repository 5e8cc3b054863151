//! A generating set of `Aut(G)` and orbits of subgroups under it.

use std::collections::{BTreeSet, VecDeque};

use crate::arith::{multiplicative_order, valuation};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::hom::GroupHom;
use crate::subgroup::Subgroup;

/// Generators of the unit group `(Z / p^a)^*`.
fn unit_generators(p: u64, a: u32) -> Vec<u64> {
    let q = p.pow(a);
    if p == 2 {
        return match a {
            0 | 1 => vec![],
            2 => vec![3],
            _ => vec![q - 1, 5],
        };
    }
    let mut g = (2..p).find(|&g| multiplicative_order(g, p) == Some(p - 1)).unwrap_or(1);
    if a >= 2 && multiplicative_order(g, p * p) != Some(p * (p - 1)) {
        g += p;
    }
    vec![g]
}

fn basis_map(g: &AbelianGroup, f: impl Fn(usize) -> Vec<i128>) -> Result<GroupHom> {
    let images = (0..g.rank()).map(|j| g.element_from_ints(&f(j))).collect::<Result<Vec<_>>>()?;
    GroupHom::new(g.clone(), g.clone(), images)
}

/// Swaps of equal-order basis vectors, unit scalings of one basis vector,
/// and transvections `e_i -> e_i + p^c e_j` with the least `c` keeping the
/// map well defined. For composite groups, the union over Sylow components.
pub fn aut_generators(g: &AbelianGroup) -> Vec<GroupHom> {
    let d = g.generator_orders();
    let k = g.rank();
    let unit = |i: usize| {
        let mut v = vec![0i128; k];
        v[i] = 1;
        v
    };
    let mut out = Vec::new();
    for p in g.primes().collect::<Vec<_>>() {
        let range = g.sylow_range(p).expect("prime of G");
        for i in range.clone() {
            let a = valuation(d[i], p);
            for u in unit_generators(p, a) {
                out.push(basis_map(g, |j| if j == i { scaled(&unit(j), u) } else { unit(j) }));
            }
            if i + 1 < range.end && d[i] == d[i + 1] {
                out.push(basis_map(g, |j| {
                    if j == i {
                        unit(i + 1)
                    } else if j == i + 1 {
                        unit(i)
                    } else {
                        unit(j)
                    }
                }));
            }
            for j in range.clone().filter(|&j| j != i) {
                let c = if d[j] > d[i] { d[j] / d[i] } else { 1 };
                out.push(basis_map(g, |l| {
                    let mut v = unit(l);
                    if l == i {
                        v[j] += c as i128;
                    }
                    v
                }));
            }
        }
    }
    out.into_iter().map(|r| r.expect("generator is well defined")).collect()
}

fn scaled(v: &[i128], u: u64) -> Vec<i128> {
    v.iter().map(|&x| x * u as i128).collect()
}

fn validate(g: &AbelianGroup, gens: &[GroupHom]) -> Result<()> {
    for f in gens {
        if f.source() != g {
            return Err(g.mismatch());
        }
        f.validate_automorphism()?;
    }
    Ok(())
}

/// Closure of `{s}` under `gens`.
pub fn orbit_of_subgroup(g: &AbelianGroup, s: &Subgroup, gens: &[GroupHom]) -> Result<BTreeSet<Subgroup>> {
    if s.ambient() != g {
        return Err(g.mismatch());
    }
    validate(g, gens)?;
    Ok(closure(s, gens))
}

fn closure(s: &Subgroup, gens: &[GroupHom]) -> BTreeSet<Subgroup> {
    let mut seen = BTreeSet::from([s.clone()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(cur) = queue.pop_front() {
        for f in gens {
            let img = f.image_of(&cur).expect("validated automorphism");
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen
}

/// Partition of `subs` into orbits under `gens`; every orbit must stay inside
/// `subs`. Orbits are listed by their smallest member.
pub fn orbits(g: &AbelianGroup, subs: &[Subgroup], gens: &[GroupHom]) -> Result<Vec<BTreeSet<Subgroup>>> {
    validate(g, gens)?;
    let universe: BTreeSet<&Subgroup> = subs.iter().collect();
    let mut done: BTreeSet<Subgroup> = BTreeSet::new();
    let mut out = Vec::new();
    for s in &universe {
        if done.contains(*s) {
            continue;
        }
        let orbit = orbit_of_subgroup(g, s, gens)?;
        if let Some(stray) = orbit.iter().find(|o| !universe.contains(o)) {
            return Err(Error::InvalidArgument(format!("orbit of {s} leaves the given set at {stray}")));
        }
        done.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    Ok(out)
}

/// Order of the group generated by `gens`; `None` once it exceeds `limit`.
pub fn generated_group_order(g: &AbelianGroup, gens: &[GroupHom], limit: usize) -> Option<usize> {
    let id = GroupHom::identity(g);
    let key = |f: &GroupHom| f.images().to_vec();
    let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::from([key(&id)]);
    let mut queue = VecDeque::from([id]);
    while let Some(cur) = queue.pop_front() {
        for f in gens {
            let next = f.compose(&cur).expect("same group");
            if seen.insert(key(&next)) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}
