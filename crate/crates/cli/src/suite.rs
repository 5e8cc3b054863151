//! The acceptance battery behind `verify-suite`: criteria 1 to 8. Each check
//! is an exact integer comparison; failures are collected, never panicked on.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use abelcodes::cocyclic::{eta_bruteforce_with, list_cocyclic_types_rank2};
use abelcodes::codes::{
    all_minimal_codes, code_equivalence_classes, cyclotomic_classes, weight_distribution, AlgebraElement, FieldSpec,
    GroupAlgebra,
};
use abelcodes::orbit::{aut_generators, orbits};
use abelcodes::witness::ThetaCase;
use abelcodes::{
    enumerate_cocyclic, eta, eta_bruteforce, extend_to_automorphism, AbelianGroup, EnumOptions, Error, Exec, IsoType,
    Subgroup,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{CriterionOutcome, SuiteOutcome};

pub const CRITERIA: [(u32, &str); 8] = [
    (1, "rank-2 formula"),
    (2, "odd prime special case"),
    (3, "worked examples"),
    (4, "eta = tau characterization"),
    (5, "multiplicativity"),
    (6, "witness suite"),
    (7, "rank-2 type sets"),
    (8, "codes cross-check"),
];

pub const WITNESS_SUITE: [&str; 5] = ["C8xC2", "C9xC3", "C4xC4xC2", "C27xC9xC3", "C36xC6"];

pub const CODE_PAIRS: [(&str, u64); 6] =
    [("C7", 2), ("C3xC3", 2), ("C9xC3", 2), ("C8xC2", 3), ("C27xC9", 2), ("C4xC2", 3)];

struct Tally {
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", what()));
    }

    fn value<T>(&mut self, r: Result<T, Error>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

fn grp(s: &str) -> AbelianGroup {
    AbelianGroup::parse(s).expect("built-in group spec")
}

fn brute(g: &AbelianGroup) -> Result<u64, Error> {
    Ok(eta_bruteforce(g)?.eta)
}

fn formula(g: &AbelianGroup) -> Result<u64, Error> {
    Ok(eta(g)?.value)
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

fn criterion_1(t: &mut Tally) {
    for (p, n, m) in rank2_grid() {
        let g = AbelianGroup::p_group(p, &[n, m]).expect("p-group");
        if let Some(v) = t.value(brute(&g), || g.to_string()) {
            t.eq(v, ((n - m + 1) * (m + 1)) as u64, || g.to_string());
        }
    }
}

fn criterion_2(t: &mut Tally) {
    for n in 1..=4u32 {
        let g = AbelianGroup::p_group(3, &[n, 1]).expect("p-group");
        for (method, r) in [("formula", formula(&g)), ("brute force", brute(&g))] {
            if let Some(v) = t.value(r, || format!("{g} {method}")) {
                t.eq(v, 2 * n as u64, || format!("{g} {method}"));
            }
        }
    }
}

fn criterion_3(t: &mut Tally) {
    let cases = [
        ("C3xC3", 2),
        ("C9xC9", 3),
        ("C3xC3xC9xC9", 4),
        ("C9xC3", 4),
        ("C27xC27", 4),
        ("C27xC27xC9xC3", 8),
        ("C27xC9", 6),
        ("C27xC9xC3xC3", 8),
    ];
    for (spec, want) in cases {
        let g = grp(spec);
        for (method, r) in [("formula", formula(&g)), ("brute force", brute(&g))] {
            if let Some(v) = t.value(r, || format!("{spec} {method}")) {
                t.eq(v, want, || format!("{spec} {method}"));
            }
        }
    }
    let outer = grp("C27").product(&grp("C27xC9xC3"));
    let inner = grp("C27xC9xC3");
    for (method, f) in [("formula", formula as fn(&AbelianGroup) -> Result<u64, Error>), ("brute force", brute)] {
        if let (Ok(a), Ok(b)) = (f(&outer), f(&inner)) {
            t.eq(a, b, || format!("C27 x (C27xC9xC3) vs C27xC9xC3 by {method}"));
        } else {
            t.check(false, || format!("peel comparison by {method} failed to run"));
        }
    }
}

/// p-groups with at most three factors, each of exponent at most `p^3`.
fn small_p_groups(p: u64) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    for a in 1..=3u32 {
        for b in 0..=a {
            for c in 0..=b {
                let part: Vec<u32> = [a, b, c].into_iter().filter(|&x| x > 0).collect();
                out.push(AbelianGroup::p_group(p, &part).expect("p-group"));
            }
        }
    }
    out
}

fn criterion_4(t: &mut Tally) {
    let twos = small_p_groups(2);
    let threes = small_p_groups(3);
    let products = twos.iter().flat_map(|h| threes.iter().map(move |k| h.product(k)));
    let all: Vec<AbelianGroup> = twos.iter().chain(&threes).cloned().chain(products).collect();
    for g in &all {
        if let Some(v) = t.value(brute(g), || g.to_string()) {
            t.eq(v == g.tau(), g.is_homocyclic_sylowwise(), || format!("{g}: eta {v}, tau {}", g.tau()));
        }
    }
    t.notes.push(format!("{} groups", all.len()));
}

/// p-groups of order at most 243.
fn groups_below_243(p: u64) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    let mut a = 1u32;
    while p.pow(a) <= 243 {
        for part in partitions(a, a) {
            out.push(AbelianGroup::p_group(p, &part).expect("p-group"));
        }
        a += 1;
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n.min(max))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn criterion_5(t: &mut Tally, seed: u64) {
    let primes = [2u64, 3, 5, 7];
    let pools: Vec<Vec<AbelianGroup>> = primes.iter().map(|&p| groups_below_243(p)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let whole = EnumOptions::default().whole_group();
    for _ in 0..20 {
        let i = rng.random_range(0..primes.len());
        let j = (i + rng.random_range(1..primes.len())) % primes.len();
        let h = pools[i][rng.random_range(0..pools[i].len())].clone();
        let k = pools[j][rng.random_range(0..pools[j].len())].clone();
        let hk = h.product(&k);
        let what = || format!("{h} x {k}");
        let product = t.value(eta_bruteforce_with(&hk, &whole).map(|inv| inv.eta), what);
        let parts = t.value(brute(&h).and_then(|a| Ok(a * brute(&k)?)), what);
        if let (Some(a), Some(b)) = (product, parts) {
            t.eq(a, b, what);
        }
        t.notes.push(what());
    }
}

fn criterion_6(t: &mut Tally) {
    let mut cases: BTreeMap<String, u64> = BTreeMap::new();
    for spec in WITNESS_SUITE {
        let g = grp(spec);
        let Some(subs) = t.value(enumerate_cocyclic(&g), || spec.to_string()) else { continue };
        let mut by_type: BTreeMap<IsoType, Vec<Subgroup>> = BTreeMap::new();
        for s in &subs {
            by_type.entry(s.iso_type()).or_default().push(s.clone());
        }
        let mut pairs = 0u64;
        for (ty, members) in &by_type {
            for h in members {
                for k in members {
                    pairs += 1;
                    let what = || format!("{spec}: {h} -> {k}");
                    let Some(w) = t.value(extend_to_automorphism(&g, h, k), what) else { continue };
                    let ok = w.verify().is_ok() && w.phi.image_of(h).ok().as_ref() == Some(k);
                    t.check(ok, what);
                    for c in &w.components {
                        *cases.entry(c.theta.case.to_string()).or_default() += 1;
                    }
                }
            }
            // one representative against every other type must be refused
            for (other, others) in by_type.range(..ty.clone()) {
                let refused = matches!(extend_to_automorphism(&g, &members[0], &others[0]), Err(Error::TypeMismatch { .. }));
                t.check(refused, || format!("{spec}: witness across {ty} and {other}"));
            }
        }
        let gens = aut_generators(&g);
        if let Some(orbs) = t.value(orbits(&g, &subs, &gens), || format!("{spec} orbits")) {
            let orbit_types: Vec<BTreeSet<IsoType>> =
                orbs.iter().map(|o| o.iter().map(Subgroup::iso_type).collect()).collect();
            t.check(orbit_types.iter().all(|s| s.len() == 1), || format!("{spec}: an orbit mixes types"));
            t.eq(orbs.len(), by_type.len(), || format!("{spec}: orbits vs types"));
        }
        t.notes.push(format!("{spec}: {pairs} isomorphic pairs"));
    }
    let transported = cases.get(&ThetaCase::Transported.to_string()).copied().unwrap_or(0);
    t.notes.push(format!(
        "theta constructions: {}",
        cases.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join(", ")
    ));
    if transported > 0 {
        t.notes.push(format!("{transported} components used the automorphism search fallback"));
    }
}

fn criterion_7(t: &mut Tally) {
    for (p, n, m) in rank2_grid() {
        let g = AbelianGroup::p_group(p, &[n, m]).expect("p-group");
        let Some(inv) = t.value(eta_bruteforce(&g), || g.to_string()) else { continue };
        let Some(want) = t.value(list_cocyclic_types_rank2(n, m, p), || g.to_string()) else { continue };
        t.eq(inv.types(), want, || g.to_string());
    }
}

/// Every codeword `a e` for `a` in `GF(2) G`; `None` if too many.
fn codewords_by_brute_force(alg: &GroupAlgebra, e: &AlgebraElement) -> Option<BTreeMap<usize, u64>> {
    let n = alg.dim();
    if alg.q() != 2 || n > 16 {
        return None;
    }
    let mut words = HashSet::new();
    for mask in 0u64..1 << n {
        let map = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (alg.elements()[i].clone(), 1)).collect();
        let a = alg.from_map(&map).ok()?;
        words.insert(alg.mul(&a, e).ok()?);
    }
    let mut out = BTreeMap::new();
    for w in words {
        *out.entry(w.weight()).or_insert(0) += 1;
    }
    Some(out)
}

fn criterion_8(t: &mut Tally) {
    for (spec, q) in CODE_PAIRS {
        let g = grp(spec);
        let what = || format!("{spec} q={q}");
        let Some(field) = t.value(FieldSpec::for_group(q, &g), what) else { continue };
        let Some((alg, codes)) = t.value(all_minimal_codes(&g, &field, Exec::Parallel), what) else { continue };
        let mut sum = alg.zero();
        let mut orthogonal = true;
        for (i, a) in codes.iter().enumerate() {
            orthogonal &= alg.mul(&a.idempotent, &a.idempotent).ok().as_ref() == Some(&a.idempotent);
            for b in &codes[i + 1..] {
                orthogonal &= alg.mul(&a.idempotent, &b.idempotent).is_ok_and(|x| x.is_zero());
            }
            sum = alg.add(&sum, &a.idempotent).unwrap_or_else(|_| alg.zero());
        }
        t.check(orthogonal, || format!("{}: idempotents not orthogonal", what()));
        t.eq(sum, alg.one(), || format!("{}: sum of idempotents", what()));
        // q-orbits on labels, counted directly
        let mut seen = vec![false; g.order() as usize];
        let mut orbit_count = 0;
        for idx in 0..g.order() {
            if seen[idx as usize] {
                continue;
            }
            orbit_count += 1;
            let mut cur = g.element_at(idx);
            while !seen[g.index_of(&cur) as usize] {
                seen[g.index_of(&cur) as usize] = true;
                cur = g.scalar_mul(q as i128, &cur).expect("element of g");
            }
        }
        if let Some(classes) = t.value(cyclotomic_classes(&g, &field), what) {
            t.eq(codes.len(), classes.len(), || format!("{}: codes vs classes", what()));
        }
        t.eq(codes.len(), orbit_count, || format!("{}: codes vs q-orbits", what()));
        let equiv = t.value(code_equivalence_classes(&g, &field), what);
        let eta_value = t.value(formula(&g), what);
        if let (Some(equiv), Some(eta_value)) = (equiv, eta_value) {
            t.eq(equiv.count as u64, eta_value, || format!("{}: orbit count vs eta", what()));
            for orbit in &equiv.orbits {
                let dists: BTreeSet<_> = orbit.iter().filter_map(|&i| weight_distribution(&codes[i]).ok()).collect();
                t.eq(dists.len(), 1, || format!("{}: weights along orbit {orbit:?}", what()));
            }
            t.notes.push(format!("{spec} q={q}: {} codes, {} orbits", codes.len(), equiv.count));
        }
        if spec == "C7" {
            let dims: Vec<usize> = codes.iter().map(|c| c.dimension).collect();
            t.eq(dims, vec![1, 3, 3], || "C7 dimensions".to_string());
            for c in codes.iter().filter(|c| c.dimension == 3) {
                let brute = codewords_by_brute_force(&alg, &c.idempotent);
                t.eq(brute.as_ref(), Some(&BTreeMap::from([(0, 1), (4, 7)])), || "C7 codeword census".to_string());
                t.eq(weight_distribution(c).ok().as_ref(), brute.as_ref(), || "C7 weights".to_string());
            }
        }
    }
}

/// Runs one criterion; `seed` only affects criterion 5.
pub fn run_criterion(id: u32, seed: u64) -> CriterionOutcome {
    let mut t = Tally::new();
    match id {
        1 => criterion_1(&mut t),
        2 => criterion_2(&mut t),
        3 => criterion_3(&mut t),
        4 => criterion_4(&mut t),
        5 => criterion_5(&mut t, seed),
        6 => criterion_6(&mut t),
        7 => criterion_7(&mut t),
        8 => criterion_8(&mut t),
        _ => t.check(false, || format!("unknown criterion {id}")),
    }
    let name = CRITERIA.iter().find(|(i, _)| *i == id).map_or("unknown", |(_, n)| n);
    CriterionOutcome {
        id,
        name: name.to_string(),
        passed: t.failures.is_empty() && t.checks > 0,
        checks: t.checks,
        failures: t.failures,
        notes: t.notes,
    }
}

pub fn run_suite(seed: u64) -> SuiteOutcome {
    let criteria: Vec<CriterionOutcome> = CRITERIA.iter().map(|&(id, _)| run_criterion(id, seed)).collect();
    SuiteOutcome { seed, passed: criteria.iter().all(|c| c.passed), criteria }
}
