//! Cyclotomic classes of characters, primitive idempotents and minimal codes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cocyclic::{character_kernel, pairing_weights};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{AbelianGroup, GroupElement};
use crate::subgroup::Subgroup;

use super::algebra::{AlgebraElement, GroupAlgebra};
use super::field::FieldSpec;

/// Exhaustive enumeration caps for weight distributions.
pub const MAX_CODEWORDS: u64 = 1 << 20;
pub const MAX_CODE_LENGTH: u64 = 256;

/// An orbit of `t -> q t` on character labels, with the common kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicClass {
    pub members: Vec<GroupElement>,
    pub kernel: Subgroup,
}

impl CyclotomicClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn representative(&self) -> &GroupElement {
        &self.members[0]
    }
}

/// All `q`-cyclotomic classes, ordered by their lexicographically smallest
/// member; members are sorted.
pub fn cyclotomic_classes(g: &AbelianGroup, spec: &FieldSpec) -> Result<Vec<CyclotomicClass>> {
    if crate::arith::gcd(spec.q, g.order()) != 1 {
        return Err(Error::CharacteristicDividesOrder { q: spec.q, order: g.order() });
    }
    let n = g.order();
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for idx in 0..n {
        if seen[idx as usize] {
            continue;
        }
        let t = g.element_at(idx);
        let mut members = Vec::new();
        let mut cur = t.clone();
        loop {
            let ci = g.index_of(&cur);
            if seen[ci as usize] {
                break;
            }
            seen[ci as usize] = true;
            members.push(cur.clone());
            cur = g.scalar_mul_unchecked(spec.q as i128, &cur);
        }
        members.sort();
        let kernel = character_kernel(g, &t)?;
        out.push(CyclotomicClass { members, kernel });
    }
    Ok(out)
}

/// Powers `zeta^0, ..., zeta^(e-1)` of the fixed primitive `exp(G)`-th root.
pub(crate) fn root_powers(alg: &GroupAlgebra) -> Result<Vec<Vec<u64>>> {
    let f = alg.field().field();
    let e = alg.group().exponent();
    let zeta = f.primitive_root_of_unity(e)?;
    let mut out = Vec::with_capacity(e as usize);
    let mut cur = f.one();
    for _ in 0..e {
        out.push(cur.clone());
        cur = f.mul(&cur, &zeta);
    }
    Ok(out)
}

/// `e_C = |G|^{-1} sum_g (sum_{t in C} chi_t(-g)) g`. Each coefficient is
/// computed in the splitting field and must land in `GF(q)`.
pub fn primitive_idempotent(alg: &GroupAlgebra, class: &CyclotomicClass) -> Result<AlgebraElement> {
    let powers = root_powers(alg)?;
    idempotent_with(alg, class, &powers)
}

pub(crate) fn idempotent_with(alg: &GroupAlgebra, class: &CyclotomicClass, powers: &[Vec<u64>]) -> Result<AlgebraElement> {
    let g = alg.group();
    if class.kernel.ambient() != g {
        return Err(g.mismatch());
    }
    let q = alg.q();
    let e = g.exponent();
    let weights: Vec<Vec<u64>> = class.members.iter().map(|t| pairing_weights(g, t)).collect();
    let inv = alg.order_inverse();
    let mut coeffs = Vec::with_capacity(alg.dim());
    for x in alg.elements() {
        let mut acc = vec![0u64; powers[0].len()];
        for w in &weights {
            let pairing = w.iter().zip(x.coords()).map(|(&wi, &xi)| wi * xi % e).sum::<u64>() % e;
            let p = &powers[((e - pairing) % e) as usize];
            for (a, b) in acc.iter_mut().zip(p) {
                *a = (*a + b) % q;
            }
        }
        if acc[1..].iter().any(|&c| c != 0) {
            return Err(Error::InternalInvariant(format!("idempotent coefficient at {x} is not in GF({q})")));
        }
        coeffs.push(acc[0] * inv % q);
    }
    Ok(alg.element_from_coeffs(coeffs))
}

/// The ideal `GF(q) G e_C` with a basis of translates of `e_C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalCode {
    pub class: CyclotomicClass,
    pub idempotent: AlgebraElement,
    pub dimension: usize,
    /// Row-reduced generator matrix over `GF(q)`.
    pub generator: Vec<Vec<u64>>,
    pub q: u64,
}

pub fn minimal_code(alg: &GroupAlgebra, class: &CyclotomicClass) -> Result<MinimalCode> {
    let powers = root_powers(alg)?;
    code_with(alg, class, &powers)
}

pub(crate) fn code_with(alg: &GroupAlgebra, class: &CyclotomicClass, powers: &[Vec<u64>]) -> Result<MinimalCode> {
    let idempotent = idempotent_with(alg, class, powers)?;
    if !alg.is_idempotent(&idempotent)? {
        return Err(Error::InternalInvariant("e_C is not idempotent".into()));
    }
    let q = alg.q();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for gi in 0..alg.dim() {
        if rows.len() == class.size() {
            break;
        }
        let mut v = alg.translate(gi, &idempotent);
        for (row, &p) in rows.iter().zip(&pivots) {
            let c = v[p];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + (q - c) * b) % q;
                }
            }
        }
        if let Some(p) = v.iter().position(|&c| c != 0) {
            let inv = crate::arith::mod_inv(v[p], q).expect("prime field");
            for a in v.iter_mut() {
                *a = *a * inv % q;
            }
            for row in rows.iter_mut() {
                let c = row[p];
                if c != 0 {
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a = (*a + (q - c) * b) % q;
                    }
                }
            }
            rows.push(v);
            pivots.push(p);
        }
    }
    if rows.len() != class.size() {
        return Err(Error::InternalInvariant(format!(
            "ideal has dimension {} but the class has {} members",
            rows.len(),
            class.size()
        )));
    }
    Ok(MinimalCode { class: class.clone(), dimension: rows.len(), idempotent, generator: rows, q })
}

fn check_weight_caps(code: &MinimalCode) -> Result<u64> {
    let n = code.idempotent.coefficients().len() as u64;
    if n > MAX_CODE_LENGTH {
        return Err(Error::CapExceeded { size: n as u128, cap: MAX_CODE_LENGTH as u128 });
    }
    let total = (code.q as u128).checked_pow(code.dimension as u32).unwrap_or(u128::MAX);
    if total > MAX_CODEWORDS as u128 {
        return Err(Error::CapExceeded { size: total, cap: MAX_CODEWORDS as u128 });
    }
    Ok(total as u64)
}

pub fn weight_distribution(code: &MinimalCode) -> Result<BTreeMap<usize, u64>> {
    weight_distribution_with(code, Exec::default())
}

/// Exhaustive census `A_w` over all `q^dim` codewords.
pub fn weight_distribution_with(code: &MinimalCode, exec: Exec) -> Result<BTreeMap<usize, u64>> {
    let total = check_weight_caps(code)?;
    let n = code.idempotent.coefficients().len();
    let hist = if code.q == 2 {
        binary_census(&code.generator, n, exec)
    } else {
        qary_census(&code.generator, n, code.q, exec)
    };
    let out: BTreeMap<usize, u64> = hist.into_iter().enumerate().filter(|(_, c)| *c > 0).collect();
    let sum: u64 = out.values().sum();
    if sum != total || out.get(&0) != Some(&1) {
        return Err(Error::InternalInvariant("weight census does not cover the code exactly once".into()));
    }
    Ok(out)
}

/// Splits `k` message digits into `low` enumerated by counter and the rest
/// fixed per chunk.
fn split_digits(k: usize, q: u64) -> (usize, u64) {
    let mut low = 0;
    while low < k && q.pow(low as u32) < 4096 {
        low += 1;
    }
    (low, q.pow((k - low) as u32))
}

fn binary_census(rows: &[Vec<u64>], n: usize, exec: Exec) -> Vec<u64> {
    let words = n.div_ceil(64);
    let packed: Arc<Vec<Vec<u64>>> = Arc::new(
        rows.iter()
            .map(|r| {
                let mut w = vec![0u64; words];
                for (i, &c) in r.iter().enumerate() {
                    if c != 0 {
                        w[i / 64] |= 1 << (i % 64);
                    }
                }
                w
            })
            .collect(),
    );
    let k = rows.len();
    let (low, chunks) = split_digits(k, 2);
    exec.fold_range(
        0..chunks,
        || vec![0u64; n + 1],
        |mut hist, chunk| {
            let mut v = vec![0u64; words];
            for bit in 0..k - low {
                if chunk >> bit & 1 == 1 {
                    v.iter_mut().zip(&packed[low + bit]).for_each(|(a, b)| *a ^= b);
                }
            }
            for step in 0..1u64 << low {
                hist[v.iter().map(|w| w.count_ones() as usize).sum::<usize>()] += 1;
                // counter increment: every touched digit flips its row in
                let flips = ((step + 1).trailing_zeros() as usize + 1).min(low);
                for row in &packed[..flips] {
                    v.iter_mut().zip(row).for_each(|(a, b)| *a ^= b);
                }
            }
            hist
        },
        add_hist,
    )
}

fn qary_census(rows: &[Vec<u64>], n: usize, q: u64, exec: Exec) -> Vec<u64> {
    let k = rows.len();
    let (low, chunks) = split_digits(k, q);
    exec.fold_range(
        0..chunks,
        || vec![0u64; n + 1],
        |mut hist, chunk| {
            let mut v = vec![0u64; n];
            let mut c = chunk;
            for row in &rows[low..] {
                let digit = c % q;
                c /= q;
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + digit * b) % q;
                }
            }
            let mut digits = vec![0u64; low];
            for _ in 0..q.pow(low as u32) {
                hist[v.iter().filter(|&&x| x != 0).count()] += 1;
                // +1 on the counter: each touched digit adds its row once
                for (d, row) in digits.iter_mut().zip(rows) {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a = (*a + b) % q;
                    }
                    *d += 1;
                    if *d < q {
                        break;
                    }
                    *d = 0;
                }
            }
            hist
        },
        add_hist,
    )
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}
