//! Closed-form evaluation of the number of non-equivalent minimal abelian
//! codes, i.e. the number of isomorphism classes of cocyclic subgroups.
//!
//! The count is multiplicative over Sylow components. For a `p`-group the
//! dispatcher tries, in this order:
//!
//! 1. homocyclic `(C_{p^a})^r`: the number of divisors of the exponent, `a + 1`;
//! 2. rank two `C_{p^n} x C_{p^m}`, `n > m`: `(n - m + 1)(m + 1)`;
//! 3. `H^k` with `k >= 2`: same count as `H`;
//! 4. `K x H` with `K` homocyclic and `exp K = exp H`: same count as `H`
//!    (the top cyclic factor is kept once, its other copies are peeled off);
//! 5. brute-force enumeration.
//!
//! Rule 4 never peels a homocyclic factor whose exponent exceeds the rest:
//! `C_27^2 x C_9 x C_3` keeps one `C_27` and lands in brute force.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::cocyclic::{eta_bruteforce_with, EnumOptions};
use crate::error::{Error, Result};
use crate::group::AbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum Step {
    SylowSplit { group: AbelianGroup, components: Vec<AbelianGroup> },
    Homocyclic { group: AbelianGroup, value: u64 },
    Rank2 { group: AbelianGroup, n: u32, m: u32, value: u64 },
    PowerCollapse { group: AbelianGroup, base: AbelianGroup, copies: u32 },
    HomocyclicFactorPeel { group: AbelianGroup, peeled: AbelianGroup, remainder: AbelianGroup },
    BruteForce { group: AbelianGroup, value: u64 },
}

impl Step {
    /// Value contributed by a terminal step.
    pub fn leaf_value(&self) -> Option<u64> {
        match self {
            Step::Homocyclic { value, .. } | Step::Rank2 { value, .. } | Step::BruteForce { value, .. } => {
                Some(*value)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::SylowSplit { group, components } => {
                write!(f, "SylowSplit {group} ->")?;
                for c in components {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            Step::Homocyclic { group, value } => write!(f, "Homocyclic {group} = {value}"),
            Step::Rank2 { group, n, m, value } => write!(f, "Rank2 {group} (n={n}, m={m}) = {value}"),
            Step::PowerCollapse { group, base, copies } => write!(f, "PowerCollapse {group} = ({base})^{copies}"),
            Step::HomocyclicFactorPeel { group, peeled, remainder } => {
                write!(f, "HomocyclicFactorPeel {group} = {peeled} x {remainder}")
            }
            Step::BruteForce { group, value } => write!(f, "BruteForce {group} = {value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaResult {
    pub value: u64,
    pub derivation: Vec<Step>,
}

impl EtaResult {
    /// Recomputes the value from the trace: the product of the terminal steps.
    pub fn replay(&self) -> u64 {
        self.derivation.iter().filter_map(Step::leaf_value).product()
    }
}

pub fn eta(g: &AbelianGroup) -> Result<EtaResult> {
    eta_with(g, &EnumOptions::default())
}

pub fn eta_with(g: &AbelianGroup, opts: &EnumOptions) -> Result<EtaResult> {
    let mut derivation = Vec::new();
    let comps = g.sylow_decompose();
    if comps.len() > 1 {
        derivation.push(Step::SylowSplit {
            group: g.clone(),
            components: comps.iter().map(|(_, c)| c.clone()).collect(),
        });
    }
    let mut value = 1u64;
    for (p, comp) in &comps {
        value *= eta_p_group(*p, comp.primaries()[p].clone(), opts, &mut derivation)?;
    }
    Ok(EtaResult { value, derivation })
}

fn eta_p_group(p: u64, parts: Vec<u32>, opts: &EnumOptions, trace: &mut Vec<Step>) -> Result<u64> {
    let group = AbelianGroup::p_group(p, &parts)?;
    let top = parts[0];
    if parts.iter().all(|&a| a == top) {
        let value = top as u64 + 1;
        trace.push(Step::Homocyclic { group, value });
        return Ok(value);
    }
    if parts.len() == 2 {
        let (n, m) = (parts[0], parts[1]);
        let value = eta_rank2(n, m)?;
        trace.push(Step::Rank2 { group, n, m, value });
        return Ok(value);
    }
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &a in &parts {
        *mult.entry(a).or_default() += 1;
    }
    let k = mult.values().fold(0u64, |acc, &c| gcd(acc, c as u64)) as u32;
    if k >= 2 {
        let base: Vec<u32> = mult
            .iter()
            .rev()
            .flat_map(|(&a, &c)| std::iter::repeat_n(a, (c / k) as usize))
            .collect();
        trace.push(Step::PowerCollapse { group, base: AbelianGroup::p_group(p, &base)?, copies: k });
        return eta_p_group(p, base, opts, trace);
    }
    let top_copies = mult[&top];
    if top_copies >= 2 {
        let peeled = vec![top; (top_copies - 1) as usize];
        let remainder = parts[(top_copies - 1) as usize..].to_vec();
        trace.push(Step::HomocyclicFactorPeel {
            group,
            peeled: AbelianGroup::p_group(p, &peeled)?,
            remainder: AbelianGroup::p_group(p, &remainder)?,
        });
        return eta_p_group(p, remainder, opts, trace);
    }
    let value = eta_bruteforce_with(&group, opts)?.eta;
    trace.push(Step::BruteForce { group, value });
    Ok(value)
}

/// `(n - m + 1)(m + 1)` for `C_{p^n} x C_{p^m}`; `m = 0` is the cyclic case.
pub fn eta_rank2(n: u32, m: u32) -> Result<u64> {
    if n <= m {
        return Err(Error::InvalidArgument(format!("rank-two count needs n > m, got n={n}, m={m}")));
    }
    Ok((n - m + 1) as u64 * (m + 1) as u64)
}

/// Count for `C_{N^l} x C_{N^s}` where `N = prod p_i^{k_i}`:
/// `prod (k_i l - k_i s + 1)(k_i s + 1)`.
pub fn eta_corollary_nls(factorization: &[(u64, u32)], l: u32, s: u32) -> Result<u64> {
    if l <= s || s < 1 {
        return Err(Error::InvalidArgument(format!("need l > s >= 1, got l={l}, s={s}")));
    }
    factorization.iter().try_fold(1u64, |acc, &(p, k)| {
        if k < 1 {
            return Err(Error::InvalidArgument(format!("exponent of {p} must be >= 1")));
        }
        let (k, l, s) = (k as u64, l as u64, s as u64);
        Ok(acc * (k * l - k * s + 1) * (k * s + 1))
    })
}

/// Whether the count equals the number of divisors of the exponent; by the
/// characterization this holds exactly when every Sylow subgroup is homocyclic.
pub fn eta_equals_tau(g: &AbelianGroup) -> bool {
    g.is_homocyclic_sylowwise()
}
