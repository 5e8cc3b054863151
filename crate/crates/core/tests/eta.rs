mod common;

use abelcodes::eta::{eta_corollary_nls, eta_equals_tau, eta_rank2, Step};
use abelcodes::{eta, eta_bruteforce, AbelianGroup};
use common::{groups_up_to, p_groups, partitions};
use proptest::prelude::*;
use proptest::sample::select;

/// Brute force is run only when every Sylow component is at most this large.
const BRUTE_LIMIT: u64 = 19_683;

fn grp(s: &str) -> AbelianGroup {
    AbelianGroup::parse(s).unwrap()
}

fn brute_ok(g: &AbelianGroup) -> bool {
    g.sylow_decompose().iter().all(|(_, c)| c.order() <= BRUTE_LIMIT)
}

fn both(g: &AbelianGroup) -> (u64, u64) {
    let r = eta(g).unwrap();
    assert_eq!(r.replay(), r.value, "{g}");
    (r.value, eta_bruteforce(g).unwrap().eta)
}

#[test]
fn dispatcher_matches_brute_force_on_p_groups() {
    let mut count = 0;
    for (p, max_total) in [(2u64, 10u32), (3, 9), (5, 5), (7, 4)] {
        for total in 1..=max_total {
            for part in partitions(total, total) {
                let g = AbelianGroup::p_group(p, &part).unwrap();
                let (formula, brute) = both(&g);
                assert_eq!(formula, brute, "{g}");
                count += 1;
            }
        }
    }
    assert!(count > 200, "{count}");
}

#[test]
fn dispatcher_matches_brute_force_on_small_groups() {
    for g in groups_up_to(300) {
        let (formula, brute) = both(&g);
        assert_eq!(formula, brute, "{g}");
        assert!(formula >= g.tau(), "{g}");
    }
}

#[test]
fn worked_examples() {
    let cases = [
        ("C3xC3", 2),
        ("C9xC9", 3),
        ("C3xC3xC9xC9", 4),
        ("C9xC3", 4),
        ("C27xC27", 4),
        ("C27xC27xC9xC3", 8),
        ("C27xC9xC3", 8),
        ("C27xC9", 6),
        ("C27xC9xC3xC3", 8),
    ];
    for (s, want) in cases {
        let g = grp(s);
        assert_eq!(both(&g), (want, want), "{s}");
    }
    // a homocyclic factor of larger exponent cannot be peeled
    assert_ne!(eta(&grp("C9xC9xC3xC3")).unwrap().value, eta(&grp("C3xC3")).unwrap().value);
    assert_ne!(eta(&grp("C27xC27xC9xC3")).unwrap().value, eta(&grp("C9xC3")).unwrap().value);
    assert_ne!(eta(&grp("C27xC9xC3xC3")).unwrap().value, eta(&grp("C27xC9")).unwrap().value * eta(&grp("C3xC3")).unwrap().value);
}

#[test]
fn odd_prime_special_case() {
    for n in 1..=4 {
        let g = AbelianGroup::p_group(3, &[n, 1]).unwrap();
        let value = if n == 1 { 2 } else { 2 * n as u64 };
        assert_eq!(both(&g), (value, value), "{g}");
    }
}

#[test]
fn rank_two_formula_grid() {
    for p in [2u64, 3, 5] {
        for n in 2..=4u32 {
            for m in 1..n {
                let g = AbelianGroup::p_group(p, &[n, m]).unwrap();
                let want = ((n - m + 1) * (m + 1)) as u64;
                assert_eq!(eta_bruteforce(&g).unwrap().eta, want, "{g}");
                assert_eq!(eta_rank2(n, m).unwrap(), want);
            }
        }
    }
}

#[test]
fn corollary_against_brute_force() {
    // C_{N^l} x C_{N^s}
    for (n_val, fact) in [(6u64, vec![(2u64, 1u32), (3, 1)]), (10, vec![(2, 1), (5, 1)]), (12, vec![(2, 2), (3, 1)])] {
        for (l, s) in [(2u32, 1u32), (3, 1), (3, 2)] {
            let g = AbelianGroup::from_cyclic_orders(&[n_val.pow(l), n_val.pow(s)]).unwrap();
            if !brute_ok(&g) {
                continue;
            }
            assert_eq!(eta_corollary_nls(&fact, l, s).unwrap(), eta_bruteforce(&g).unwrap().eta, "{g}");
        }
    }
}

#[test]
fn characterization_of_eta_equal_to_tau() {
    let twos = p_groups(2, 3, 3);
    let threes = p_groups(3, 3, 3);
    let mut checked = 0;
    for g in twos.iter().chain(&threes) {
        let brute = eta_bruteforce(g).unwrap().eta;
        assert_eq!(brute == g.tau(), g.is_homocyclic_sylowwise(), "{g}");
        assert_eq!(eta_equals_tau(g), brute == g.tau());
        checked += 1;
    }
    for h in &twos {
        for k in &threes {
            let g = h.product(k);
            let brute = eta_bruteforce(&g).unwrap().eta;
            assert_eq!(brute == g.tau(), g.is_homocyclic_sylowwise(), "{g}");
            checked += 1;
        }
    }
    assert_eq!(checked, twos.len() + threes.len() + twos.len() * threes.len());
}

#[test]
fn power_invariance() {
    for h in groups_up_to(81).into_iter().filter(|h| !h.is_trivial()) {
        let base = eta(&h).unwrap().value;
        for k in 2..=3 {
            let g = h.power(k);
            assert_eq!(eta(&g).unwrap().value, base, "{h}^{k}");
            if brute_ok(&g) {
                assert_eq!(eta_bruteforce(&g).unwrap().eta, base, "{h}^{k}");
            }
        }
    }
}

#[test]
fn homocyclic_factor_of_equal_exponent() {
    for p in [2u64, 3] {
        for h in p_groups(p, 3, 3) {
            let top = h.primaries()[&p][0];
            let base = eta(&h).unwrap().value;
            for copies in 1..=2usize {
                let k = AbelianGroup::p_group(p, &vec![top; copies]).unwrap();
                let g = k.product(&h);
                assert_eq!(eta(&g).unwrap().value, base, "{k} x {h}");
                if brute_ok(&g) {
                    assert_eq!(eta_bruteforce(&g).unwrap().eta, base, "{k} x {h}");
                }
            }
        }
    }
    let g = grp("C27").product(&grp("C27xC9xC3"));
    assert_eq!(both(&g), (8, 8));
}

#[test]
fn trace_records_rule_order() {
    let r = eta(&grp("C8xC8xC4x3^[2,2,1,1]")).unwrap();
    let names: Vec<&str> = r
        .derivation
        .iter()
        .map(|s| match s {
            Step::SylowSplit { .. } => "split",
            Step::Homocyclic { .. } => "homocyclic",
            Step::Rank2 { .. } => "rank2",
            Step::PowerCollapse { .. } => "power",
            Step::HomocyclicFactorPeel { .. } => "peel",
            Step::BruteForce { .. } => "brute",
        })
        .collect();
    assert_eq!(names, ["split", "peel", "rank2", "power", "rank2"]);
    assert_eq!(r.value, 6 * 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eta_at_least_tau(g in select(groups_up_to(1000))) {
        let r = eta(&g).unwrap();
        prop_assert!(r.value >= g.tau());
        prop_assert_eq!(r.replay(), r.value);
        prop_assert_eq!(r.value == g.tau(), eta_equals_tau(&g));
    }

    #[test]
    fn power_invariance_random(h in select(groups_up_to(81)), k in 1usize..=3) {
        prop_assert_eq!(eta(&h.power(k)).unwrap().value, eta(&h).unwrap().value);
    }
}
