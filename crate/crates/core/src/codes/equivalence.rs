//! `G`-equivalence of minimal codes through the action of `Aut(G)` on
//! characters, `chi -> chi o phi`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cocyclic::pairing_weights;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::hom::GroupHom;
use crate::orbit::aut_generators;

use super::algebra::GroupAlgebra;
use super::classes::{cyclotomic_classes, CyclotomicClass, MinimalCode};
use super::field::FieldSpec;

/// Label of `chi_t o phi`: `t'_j = <t, phi(e_j)> / (e / d_j)`.
pub fn dual_action(g: &AbelianGroup, phi: &GroupHom, t: &GroupElement) -> Result<GroupElement> {
    g.check(t)?;
    let e = g.exponent();
    let w = pairing_weights(g, t);
    let coords = phi
        .images()
        .iter()
        .zip(g.generator_orders())
        .map(|(img, &d)| {
            let pairing = w.iter().zip(img.coords()).map(|(&wi, &xi)| wi * xi % e).sum::<u64>() % e;
            let step = e / d;
            if !pairing.is_multiple_of(step) {
                return Err(Error::InternalInvariant("dual action leaves the character group".into()));
            }
            Ok(pairing / step % d)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupElement(coords))
}

/// Orbits of `Aut(G)` on the cyclotomic classes of `GF(q) G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeEquivalence {
    pub classes: Vec<CyclotomicClass>,
    /// Indices into `classes`, each orbit sorted, orbits ordered by first index.
    pub orbits: Vec<Vec<usize>>,
    pub count: usize,
}

pub fn code_equivalence_classes(g: &AbelianGroup, spec: &FieldSpec) -> Result<CodeEquivalence> {
    code_equivalence_classes_with(g, spec, &aut_generators(g))
}

fn class_lookup(g: &AbelianGroup, classes: &[CyclotomicClass]) -> Vec<usize> {
    let mut of = vec![0usize; g.order() as usize];
    for (ci, c) in classes.iter().enumerate() {
        for t in &c.members {
            of[g.index_of(t) as usize] = ci;
        }
    }
    of
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn code_equivalence_classes_with(g: &AbelianGroup, spec: &FieldSpec, gens: &[GroupHom]) -> Result<CodeEquivalence> {
    for f in gens {
        if f.source() != g {
            return Err(g.mismatch());
        }
        f.validate_automorphism()?;
    }
    let classes = cyclotomic_classes(g, spec)?;
    let of = class_lookup(g, &classes);
    let mut parent: Vec<usize> = (0..classes.len()).collect();
    for f in gens {
        for (ci, c) in classes.iter().enumerate() {
            let image = of[g.index_of(&dual_action(g, f, c.representative())?) as usize];
            let (a, b) = (find(&mut parent, ci), find(&mut parent, image));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for ci in 0..classes.len() {
        let root = find(&mut parent, ci);
        groups.entry(root).or_default().push(ci);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    let count = orbits.len();
    Ok(CodeEquivalence { classes, orbits, count })
}

/// An automorphism whose linear extension maps the idempotent of `i` to
/// that of `j`, composed from `gens` by breadth-first search; `None` if the
/// codes lie in different orbits.
pub fn g_equivalence_check(
    alg: &GroupAlgebra,
    i: &MinimalCode,
    j: &MinimalCode,
    gens: &[GroupHom],
) -> Result<Option<GroupHom>> {
    let g = alg.group();
    for c in [i, j] {
        if c.class.kernel.ambient() != g || c.q != alg.q() {
            return Err(g.mismatch());
        }
    }
    let inverses = gens.iter().map(GroupHom::inverse).collect::<Result<Vec<_>>>()?;
    let classes = cyclotomic_classes(g, alg.field())?;
    let of = class_lookup(g, &classes);
    let start = of[g.index_of(i.class.representative()) as usize];
    let goal = of[g.index_of(j.class.representative()) as usize];
    // phi(e_C) = e_D with D the class of chi_t o phi^{-1}
    let mut found: HashMap<usize, GroupHom> = HashMap::from([(start, GroupHom::identity(g))]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        for (f, f_inv) in gens.iter().zip(&inverses) {
            let next = of[g.index_of(&dual_action(g, f_inv, classes[cur].representative())?) as usize];
            if !found.contains_key(&next) {
                let phi = f.compose(&found[&cur])?;
                found.insert(next, phi);
                queue.push_back(next);
            }
        }
    }
    let Some(phi) = found.remove(&goal) else {
        return Ok(None);
    };
    if alg.apply_hom(&phi, &i.idempotent)? != j.idempotent {
        return Err(Error::InternalInvariant("witness does not carry one idempotent to the other".into()));
    }
    Ok(Some(phi))
}
