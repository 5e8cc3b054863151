mod common;

use std::collections::BTreeMap;

use abelcodes::cocyclic::enumerate_cocyclic;
use abelcodes::orbit::{aut_generators, generated_group_order, orbit_of_subgroup, orbits};
use abelcodes::witness::{build_theta, extend_to_automorphism, find_cyclic_coset_generator, transport_theta, ThetaCase};
use abelcodes::{AbelianGroup, Error, GroupElement, GroupHom, IsoType, Subgroup};
use common::groups_up_to;

const SUITE: [&str; 5] = ["C8xC2", "C9xC3", "C4xC4xC2", "C27xC9xC3", "C36xC6"];

fn grp(s: &str) -> AbelianGroup {
    AbelianGroup::parse(s).unwrap()
}

fn by_type(subs: &[Subgroup]) -> BTreeMap<IsoType, Vec<Subgroup>> {
    let mut out: BTreeMap<IsoType, Vec<Subgroup>> = BTreeMap::new();
    for s in subs {
        out.entry(s.iso_type()).or_default().push(s.clone());
    }
    out
}

fn check_pair(g: &AbelianGroup, h: &Subgroup, k: &Subgroup) {
    let w = extend_to_automorphism(g, h, k).unwrap_or_else(|e| panic!("{g}: {h} -> {k}: {e}"));
    assert!(w.phi.is_automorphism());
    assert_eq!(w.phi.image_of(h).unwrap(), *k);
    // homomorphism law on generator pairs, through the pointwise definition
    if let [c] = w.components.as_slice() {
        let gens: Vec<GroupElement> = (0..g.rank()).map(|i| g.basis_element(i)).collect();
        for a in &gens {
            for b in &gens {
                let lhs = c.phi_pointwise(&g.add(a, b).unwrap()).unwrap();
                let rhs = g.add(&c.phi_pointwise(a).unwrap(), &c.phi_pointwise(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn witnesses_for_every_isomorphic_pair() {
    for name in SUITE {
        let g = grp(name);
        let classes = by_type(&enumerate_cocyclic(&g).unwrap());
        for members in classes.values() {
            for h in members {
                for k in members {
                    check_pair(&g, h, k);
                }
            }
        }
    }
}

#[test]
fn homomorphism_law_with_wraparound() {
    // x = (1,0) and p^m = 9 in C27xC9xC3: sums of coset indices exceed p^m
    let g = grp("C27xC9xC3");
    let h = Subgroup::from_generators(&g, &[g.element(&[9, 1, 0]).unwrap(), g.element(&[0, 0, 1]).unwrap()]).unwrap();
    let k = Subgroup::from_generators(&g, &[g.element(&[9, 2, 0]).unwrap(), g.element(&[0, 3, 1]).unwrap()]).unwrap();
    assert!(h.is_cocyclic() && k.is_cocyclic());
    let w = extend_to_automorphism(&g, &h, &k).unwrap();
    let c = &w.components[0];
    let pm = 3u64.pow(c.m_exponent);
    let mut wrapped = 0;
    for a in g.elements() {
        let (i1, _) = c.split(&a).unwrap();
        for b in [c.x.clone(), g.scalar_mul(pm as i128 - 1, &c.x).unwrap(), g.basis_element(1)] {
            let (i2, _) = c.split(&b).unwrap();
            if i1 + i2 >= pm {
                wrapped += 1;
            }
            let lhs = c.phi_pointwise(&g.add(&a, &b).unwrap()).unwrap();
            let rhs = g.add(&c.phi_pointwise(&a).unwrap(), &c.phi_pointwise(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(c.phi_pointwise(&a).unwrap(), w.phi.apply(&a).unwrap());
    }
    assert!(wrapped > 0);
}

#[test]
fn theta_pinning_over_the_suite() {
    let mut cases = BTreeMap::new();
    for name in ["C8xC2", "C9xC3", "C4xC4xC2", "C27xC9xC3"] {
        let g = grp(name);
        let classes = by_type(&enumerate_cocyclic(&g).unwrap());
        for members in classes.values() {
            for h in members {
                for k in members {
                    let (x, m) = find_cyclic_coset_generator(&g, h).unwrap();
                    let (y, _) = find_cyclic_coset_generator(&g, k).unwrap();
                    let pm = g.single_prime().unwrap().pow(m) as i128;
                    let (u, v) = (g.scalar_mul(pm, &x).unwrap(), g.scalar_mul(pm, &y).unwrap());
                    let theta = match build_theta(&g, h, k, &x, &y, m) {
                        Ok(t) => t,
                        Err(Error::NotDirectSummand(_)) => transport_theta(&g, h, k, &u, &v).unwrap(),
                        Err(e) => panic!("{g}: {h} -> {k}: {e}"),
                    };
                    theta.validate(h, k).unwrap();
                    assert_eq!(theta.apply(&u).unwrap(), v);
                    *cases.entry(format!("{:?}", theta.case)).or_insert(0) += 1;
                }
            }
        }
    }
    for case in [ThetaCase::Trivial, ThetaCase::Generator, ThetaCase::NonGenerator, ThetaCase::Transported] {
        assert!(cases.contains_key(&format!("{case:?}")), "{case:?} never exercised: {cases:?}");
    }
}

#[test]
fn orbits_match_isomorphism_types() {
    for name in SUITE {
        let g = grp(name);
        let subs = enumerate_cocyclic(&g).unwrap();
        let gens = aut_generators(&g);
        let parts = orbits(&g, &subs, &gens).unwrap();
        for orbit in &parts {
            let types: std::collections::BTreeSet<_> = orbit.iter().map(Subgroup::iso_type).collect();
            assert_eq!(types.len(), 1, "{name}: orbit mixes types");
        }
        assert_eq!(parts.len(), by_type(&subs).len(), "{name}");
        let s = &subs[0];
        let orbit = orbit_of_subgroup(&g, s, &gens).unwrap();
        assert!(orbit.iter().all(|t| t.iso_type() == s.iso_type()));
    }
}

/// Every tuple of images with the right orders, kept if bijective.
fn brute_force_aut_order(g: &AbelianGroup) -> u64 {
    let candidates: Vec<Vec<GroupElement>> = g
        .generator_orders()
        .iter()
        .map(|&d| g.elements().filter(|x| g.scalar_mul(d as i128, x).unwrap().is_zero()).collect())
        .collect();
    let mut count = 0;
    let mut idx = vec![0usize; candidates.len()];
    loop {
        let images: Vec<_> = idx.iter().zip(&candidates).map(|(&i, c)| c[i].clone()).collect();
        if GroupHom::new(g.clone(), g.clone(), images).unwrap().is_automorphism() {
            count += 1;
        }
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < candidates[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Closed-form `|Aut|` of an abelian `p`-group with exponent partition
/// `e_1 <= ... <= e_n`.
fn aut_order_formula(p: u64, parts: &[u32]) -> u128 {
    let mut e: Vec<u32> = parts.to_vec();
    e.sort();
    let n = e.len();
    let p = p as u128;
    let mut total = 1u128;
    for k in 0..n {
        let d = (0..n).filter(|&l| e[l] == e[k]).max().unwrap() + 1;
        let c = (0..n).filter(|&l| e[l] == e[k]).min().unwrap() + 1;
        total *= p.pow(d as u32) - p.pow(k as u32);
        total *= p.pow(e[k] * (n - d) as u32);
        total *= p.pow((e[k] - 1) * (n - c + 1) as u32);
    }
    total
}

#[test]
fn formula_agrees_with_brute_force() {
    for g in groups_up_to(32) {
        let work: u64 = g.generator_orders().iter().map(|&d| abelcodes::arith::gcd(d, g.exponent()).pow(g.rank() as u32)).product();
        if work > 200_000 {
            continue;
        }
        let formula: u128 = g.sylow_decompose().iter().map(|(p, c)| aut_order_formula(*p, &c.primaries()[p])).product();
        assert_eq!(brute_force_aut_order(&g) as u128, formula, "{g}");
    }
}

#[test]
fn generator_closure_has_full_order() {
    let mut checked = 0;
    for g in groups_up_to(64) {
        let expected: u128 = g.sylow_decompose().iter().map(|(p, c)| aut_order_formula(*p, &c.primaries()[p])).product();
        if expected > 100_000 {
            continue;
        }
        let got = generated_group_order(&g, &aut_generators(&g), 100_000).unwrap();
        assert_eq!(got as u128, expected, "{g}");
        checked += 1;
    }
    assert!(checked > 80, "{checked}");
}
