mod common;

use std::collections::{BTreeMap, BTreeSet};

use abelcodes::cocyclic::{enumerate_cocyclic_with, eta_bruteforce_with, list_cocyclic_types_rank2};
use abelcodes::{enumerate_cocyclic, eta_bruteforce, AbelianGroup, EnumOptions, Exec, IsoType, Subgroup};
use common::{groups_up_to, p_groups, Table};
use proptest::prelude::*;
use proptest::sample::select;

fn subgroup_of(table: &Table, mask: &common::Mask) -> Subgroup {
    Subgroup::from_generators(&table.group, &table.elements_of(mask)).unwrap()
}

/// Full subgroup lattice filtered by a coset-order test.
#[test]
fn kernels_are_exactly_the_cocyclic_subgroups_small() {
    for g in groups_up_to(64) {
        let table = Table::new(&g);
        let want: BTreeSet<Subgroup> = table
            .all_subgroups()
            .iter()
            .filter(|m| table.quotient_is_cyclic(m))
            .map(|m| subgroup_of(&table, m))
            .collect();
        let got = enumerate_cocyclic(&g).unwrap();
        assert_eq!(got.len(), want.len(), "{g}");
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want, "{g}");
    }
}

/// Up to order 512 the lattice is too large to walk; instead every output is
/// checked to be a subgroup with cyclic quotient, outputs are distinct, and
/// their number equals the number of cyclic subgroups of the dual group
/// (isomorphic to `G`), which is the number of cocyclic subgroups.
#[test]
fn kernels_are_exactly_the_cocyclic_subgroups_up_to_512() {
    for g in groups_up_to(512).into_iter().filter(|g| g.order() > 64) {
        let table = Table::new(&g);
        let got = enumerate_cocyclic(&g).unwrap();
        let mut masks = BTreeSet::new();
        for s in &got {
            let mask = table.mask_of(&s.elements());
            let idx: Vec<usize> = s.basis().iter().map(|x| g.index_of(x) as usize).collect();
            assert_eq!(table.closure(&idx), mask, "{g}: {s} is not closed");
            assert!(table.quotient_is_cyclic(&mask), "{g}: {s}");
            assert!(masks.insert(mask), "{g}: duplicate {s}");
        }
        assert_eq!(got.len() as u64, table.cyclic_subgroup_count(), "{g}");
    }
}

#[test]
fn whole_group_mode_agrees_with_sylow_assembly() {
    for g in groups_up_to(200).into_iter().filter(|g| g.primes().count() >= 2) {
        let split = enumerate_cocyclic(&g).unwrap();
        let whole = enumerate_cocyclic_with(&g, &EnumOptions::default().whole_group()).unwrap();
        assert_eq!(split, whole, "{g}");
        let a = eta_bruteforce(&g).unwrap();
        let b = eta_bruteforce_with(&g, &EnumOptions::default().whole_group()).unwrap();
        assert_eq!(a.types(), b.types(), "{g}");
        assert_eq!(a.total_subgroups(), b.total_subgroups(), "{g}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for s in ["C27xC9xC3", "C8xC4xC2x3^[2,1]", "C5xC25"] {
        let g = AbelianGroup::parse(s).unwrap();
        let seq = EnumOptions::default().with_exec(Exec::Sequential);
        let par = EnumOptions::default().with_exec(Exec::Parallel);
        assert_eq!(enumerate_cocyclic_with(&g, &seq).unwrap(), enumerate_cocyclic_with(&g, &par).unwrap());
        assert_eq!(eta_bruteforce_with(&g, &seq).unwrap(), eta_bruteforce_with(&g, &par).unwrap());
    }
}

fn rank2_grid() -> Vec<(u64, u32, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for n in 2..=4 {
            for m in 1..n {
                out.push((p, n, m));
            }
        }
    }
    out
}

#[test]
fn rank_two_type_sets_are_complete() {
    for (p, n, m) in rank2_grid() {
        let g = AbelianGroup::p_group(p, &[n, m]).unwrap();
        let inv = eta_bruteforce(&g).unwrap();
        let want = list_cocyclic_types_rank2(n, m, p).unwrap();
        assert_eq!(inv.types(), want, "{g}");
        assert_eq!(want.len() as u32, (n - m + 1) * (m + 1));
        for t in inv.types().iter().filter(|t| !t.is_cyclic()) {
            let part = t.partition(p);
            assert_eq!(part.len(), 2, "{g}: {t}");
            assert!((m..=n).contains(&part[0]) && (1..=m).contains(&part[1]), "{g}: {t}");
        }
    }
}

#[test]
fn cyclic_groups_have_every_subgroup_cocyclic() {
    for order in 1..=60u64 {
        let g = AbelianGroup::from_cyclic_orders(&[order]).unwrap();
        let inv = eta_bruteforce(&g).unwrap();
        assert_eq!(inv.eta, abelcodes::arith::num_divisors(order));
        assert_eq!(inv.total_subgroups(), inv.eta);
    }
}

#[test]
fn inventory_invariants() {
    for g in groups_up_to(256) {
        let inv = eta_bruteforce(&g).unwrap();
        assert!(inv.eta >= g.tau(), "{g}");
        assert_eq!(inv.eta as usize, inv.classes.len());
        for (t, cls) in &inv.classes {
            assert!(cls.count >= 1);
            assert!(cls.representative.is_cocyclic(), "{g}");
            assert_eq!(&cls.representative.iso_type(), t);
            assert_eq!(cls.representative.ambient(), &g);
        }
    }
}

fn coprime_pairs() -> Vec<(AbelianGroup, AbelianGroup)> {
    let small: Vec<AbelianGroup> = [2u64, 3, 5, 7]
        .iter()
        .flat_map(|&p| {
            let max_exp = (243f64.ln() / (p as f64).ln()).floor() as u32;
            p_groups(p, 5, max_exp).into_iter().filter(|g| g.order() <= 243)
        })
        .collect();
    let mut out = Vec::new();
    for h in &small {
        for k in &small {
            if abelcodes::arith::gcd(h.order(), k.order()) == 1 && h.exponent() < k.exponent() {
                out.push((h.clone(), k.clone()));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eta_is_multiplicative((h, k) in select(coprime_pairs())) {
        let hk = h.product(&k);
        let whole = EnumOptions::default().whole_group();
        let prod = eta_bruteforce_with(&hk, &whole).unwrap().eta;
        prop_assert_eq!(prod, eta_bruteforce(&h).unwrap().eta * eta_bruteforce(&k).unwrap().eta);
    }

    /// Cocyclic subgroups of a coprime product are exactly the products of
    /// cocyclic subgroups of the factors.
    #[test]
    fn coprime_product_round_trip((h, k) in select(coprime_pairs())) {
        let g = h.product(&k);
        prop_assume!(g.order() <= 20_000);
        let whole: BTreeSet<Subgroup> = enumerate_cocyclic_with(&g, &EnumOptions::default().whole_group())
            .unwrap()
            .into_iter()
            .collect();
        let mut assembled = BTreeSet::new();
        let comps = g.sylow_decompose();
        let per: Vec<Vec<Subgroup>> = comps.iter().map(|(_, c)| enumerate_cocyclic(c).unwrap()).collect();
        let mut idx = vec![0usize; per.len()];
        'outer: loop {
            let parts: Vec<Subgroup> = idx.iter().zip(&per).map(|(&i, v)| v[i].clone()).collect();
            assembled.insert(Subgroup::assemble(&g, &parts).unwrap());
            for pos in (0..per.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < per[pos].len() {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        prop_assert_eq!(&whole, &assembled);
        for s in &whole {
            for (p, c) in &comps {
                let part = s.sylow_part(*p).unwrap();
                prop_assert_eq!(part.ambient(), c);
                prop_assert!(part.is_cocyclic());
            }
        }
    }
}

#[test]
fn type_counts_for_small_examples() {
    let g = AbelianGroup::parse("C3xC3").unwrap();
    let inv = eta_bruteforce(&g).unwrap();
    let counts: BTreeMap<IsoType, u64> = inv.classes.iter().map(|(t, c)| (t.clone(), c.count)).collect();
    let c3 = IsoType::from_cyclic_orders([3]);
    let c33 = IsoType::from_cyclic_orders([3, 3]);
    assert_eq!(counts, BTreeMap::from([(c3, 4), (c33, 1)]));
}
