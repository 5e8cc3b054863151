//! Explicit automorphisms carrying one cocyclic subgroup onto an isomorphic one.
//!
//! For a `p`-group `G` of exponent `p^n` and cocyclic `H` with `G/H = <xH>`
//! of order `p^m`, every `g` is uniquely `i x + h` with `0 <= i < p^m` and
//! `h` in `H`. Given `K`, `y` likewise and an isomorphism `theta: H -> K`
//! with `theta(p^m x) = p^m y`, the map `i x + h -> i y + theta(h)` is an
//! automorphism sending `H` to `K`. Composite groups are handled one Sylow
//! component at a time.
//!
//! Whenever a choice is free, the lexicographically smallest coordinate
//! vector is taken.

use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inv, valuation};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::hom::GroupHom;
use crate::orbit::aut_generators;
use crate::subgroup::{express, CyclicFactor, Subgroup};

fn require_p_group(g: &AbelianGroup) -> Result<u64> {
    match g.single_prime() {
        Some(p) => Ok(p),
        None if g.is_trivial() => Ok(1),
        None => Err(Error::InvalidArgument(format!("{g} is not a p-group"))),
    }
}

fn subgroup_prime(h: &Subgroup) -> Result<u64> {
    require_p_group(h.ambient())
}

/// `x` lies outside the Frattini subgroup `pH`, i.e. it belongs to some
/// minimal generating set of `H`.
pub fn is_frattini_generator(h: &Subgroup, x: &GroupElement) -> Result<bool> {
    let p = subgroup_prime(h)?;
    h.ambient().check(x)?;
    if !h.contains(x) {
        return Err(Error::InvalidArgument(format!("{x} is not in {h}")));
    }
    if h.is_trivial() {
        return Ok(false);
    }
    Ok(!h.multiple(p as i128).contains(x))
}

/// For `x` in `pH`, a generator `a` of `H` (outside `pH`) with `x` in `<a>`.
///
/// Writes `x` in a cyclic decomposition of `H` and divides the coefficient
/// vector by `p` until some coefficient is prime to `p`. The zero element
/// lifts to the first basis vector of the decomposition.
pub fn lift_to_generator(h: &Subgroup, x: &GroupElement) -> Result<GroupElement> {
    if is_frattini_generator(h, x)? {
        return Err(Error::InvalidArgument(format!("{x} already generates a summand of {h}")));
    }
    let p = subgroup_prime(h)?;
    let g = h.ambient();
    let factors = h.decompose();
    if factors.is_empty() {
        return Err(Error::InvalidArgument("the trivial group has no generators".into()));
    }
    let gens: Vec<_> = factors.iter().map(|f| f.generator.clone()).collect();
    let mut coeffs = express(g, &gens, x)
        .ok_or_else(|| Error::InternalInvariant(format!("{x} not expressible in a basis of {h}")))?;
    if coeffs.iter().all(|&c| c == 0) {
        return Ok(gens[0].clone());
    }
    while coeffs.iter().all(|&c| c % p == 0) {
        for c in coeffs.iter_mut() {
            *c /= p;
        }
    }
    let ints: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
    Ok(combine(g, &gens, &ints))
}

fn combine(g: &AbelianGroup, gens: &[GroupElement], coeffs: &[i128]) -> GroupElement {
    gens.iter()
        .zip(coeffs)
        .fold(g.identity(), |acc, (b, &c)| g.add_unchecked(&acc, &g.scalar_mul_unchecked(c, b)))
}

fn log_p(p: u64, n: u64) -> u32 {
    if p <= 1 {
        0
    } else {
        valuation(n, p)
    }
}

/// An element `x` of maximal order `p^n` whose coset generates `G/H`, and
/// `m` with `|G/H| = p^m`.
pub fn find_cyclic_coset_generator(g: &AbelianGroup, h: &Subgroup) -> Result<(GroupElement, u32)> {
    let p = require_p_group(g)?;
    if h.ambient() != g {
        return Err(g.mismatch());
    }
    if !h.is_cocyclic() {
        return Err(Error::NotCocyclic(h.to_string()));
    }
    let exp = g.exponent();
    let m = log_p(p, h.index());
    let of_max_order = |mut pool: Box<dyn Iterator<Item = GroupElement> + '_>| {
        pool.find(|z| g.order_unchecked(z) == exp)
            .ok_or_else(|| Error::InternalInvariant(format!("no element of order {exp}")))
    };
    if h.exponent() < exp || m == 0 {
        return Ok((of_max_order(Box::new(g.elements()))?, m));
    }
    let pm = p.pow(m) as i128;
    let a = g
        .elements()
        .find(|a| !h.contains(&g.scalar_mul_unchecked(pm / p as i128, a)))
        .ok_or_else(|| Error::InternalInvariant(format!("no coset generator for {h}")))?;
    if g.order_unchecked(&g.scalar_mul_unchecked(pm, &a)) == exp / pm as u64 {
        return Ok((a, m));
    }
    let mut in_h = h.elements();
    in_h.sort();
    let y = of_max_order(Box::new(in_h.into_iter()))?;
    Ok((g.add_unchecked(&y, &a), m))
}

/// Which construction produced `theta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaCase {
    /// `p^m x` is trivial; any isomorphism works.
    Trivial,
    /// `p^m x` generates a cyclic summand of `H`.
    Generator,
    /// `p^m x` lies in `pH`; it is lifted to a generator first.
    NonGenerator,
    /// The summand construction failed; `p^m x` was carried to `p^m y` by
    /// a search through the automorphisms of `H`.
    Transported,
}

impl fmt::Display for ThetaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ThetaCase::Trivial => "trivial",
            ThetaCase::Generator => "generator",
            ThetaCase::NonGenerator => "non-generator",
            ThetaCase::Transported => "transported",
        };
        f.write_str(s)
    }
}

/// An isomorphism `H -> K` inside `G`. `hom` maps the abstract group with
/// generators `domain` (a basis of `H`) into `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theta {
    pub hom: GroupHom,
    pub domain: Vec<GroupElement>,
    pub case: ThetaCase,
}

impl Theta {
    fn new(g: &AbelianGroup, mut pairs: Vec<(CyclicFactor, GroupElement)>, case: ThetaCase) -> Result<Self> {
        pairs.sort_by_key(|a| Reverse(a.0.order));
        let orders: Vec<u64> = pairs.iter().map(|(f, _)| f.order).collect();
        let source = AbelianGroup::from_cyclic_orders(&orders)?;
        if source.generator_orders() != orders.as_slice() {
            return Err(Error::InternalInvariant("domain basis is not a p-group basis".into()));
        }
        let (domain, images): (Vec<_>, Vec<_>) = pairs.into_iter().map(|(f, img)| (f.generator, img)).unzip();
        let hom = GroupHom::new(source, g.clone(), images)?;
        Ok(Self { hom, domain, case })
    }

    /// Image of `h` (which must lie in the span of `domain`).
    pub fn apply(&self, h: &GroupElement) -> Result<GroupElement> {
        let g = self.hom.target();
        g.check(h)?;
        let coeffs = express(g, &self.domain, h)
            .ok_or_else(|| Error::InvalidArgument(format!("{h} is outside the domain of theta")))?;
        self.hom.apply(&GroupElement(coeffs))
    }

    /// Checks that `theta` is an isomorphism from `h` onto `k`.
    pub fn validate(&self, h: &Subgroup, k: &Subgroup) -> Result<()> {
        let g = self.hom.target();
        let span = Subgroup::from_generators(g, &self.domain)?;
        if span != *h || span.order() != self.hom.source().order() {
            return Err(Error::InternalInvariant("theta domain is not a basis of H".into()));
        }
        let image = Subgroup::from_generators(g, self.hom.images())?;
        if image != *k || image.order() != h.order() {
            return Err(Error::InternalInvariant("theta is not an isomorphism onto K".into()));
        }
        Ok(())
    }
}

/// Completes `<u>` to a direct decomposition of `s`: returns a basis of a
/// complement. Fails when `<u>` is not a direct summand.
fn summand_complement(s: &Subgroup, u: &GroupElement) -> Result<Vec<CyclicFactor>> {
    let g = s.ambient();
    let cyc = Subgroup::from_generators(g, std::slice::from_ref(u))?;
    let o = cyc.order() as i128;
    let mut out = Vec::new();
    for f in s.decompose_quotient(&cyc)? {
        let fo = f.order as i128;
        // shift the lift by a multiple of u so that its order is f.order
        let c = express(g, std::slice::from_ref(u), &g.scalar_mul_unchecked(fo, &f.generator))
            .ok_or_else(|| Error::InternalInvariant("quotient generator does not close".into()))?[0]
            as i128;
        let d = gcd(fo as u64, o as u64) as i128;
        if c % d != 0 {
            return Err(Error::NotDirectSummand(format!("<{u}> in {s}")));
        }
        let md = (o / d) as u64;
        let shift = if md == 1 {
            0
        } else {
            let inv = mod_inv(((fo / d) as u64) % md, md).expect("coprime after dividing gcd");
            ((c / d) as u128 * inv as u128 % md as u128) as i128
        };
        let gen = g.add_unchecked(&f.generator, &g.scalar_mul_unchecked(-shift, u));
        out.push(CyclicFactor { generator: gen, order: f.order });
    }
    let mut all: Vec<_> = out.iter().map(|f| f.generator.clone()).collect();
    all.push(u.clone());
    let total: u64 = out.iter().map(|f| f.order).product::<u64>() * o as u64;
    if Subgroup::from_generators(g, &all)? != *s || total != s.order() {
        return Err(Error::NotDirectSummand(format!("<{u}> in {s}")));
    }
    Ok(out)
}

/// Pairs two bases of isomorphic groups by order.
fn match_bases(
    mut from: Vec<CyclicFactor>,
    mut to: Vec<CyclicFactor>,
) -> Result<Vec<(CyclicFactor, GroupElement)>> {
    from.sort_by_key(|a| Reverse(a.order));
    to.sort_by_key(|a| Reverse(a.order));
    if from.len() != to.len() || from.iter().zip(&to).any(|(a, b)| a.order != b.order) {
        return Err(Error::InternalInvariant("complements are not isomorphic".into()));
    }
    Ok(from.into_iter().zip(to).map(|(a, b)| (a, b.generator)).collect())
}

/// An isomorphism `theta: H -> K` with `theta(p^m x) = p^m y`.
pub fn build_theta(
    g: &AbelianGroup,
    h: &Subgroup,
    k: &Subgroup,
    x: &GroupElement,
    y: &GroupElement,
    m: u32,
) -> Result<Theta> {
    let p = require_p_group(g)?;
    if h.ambient() != g || k.ambient() != g {
        return Err(g.mismatch());
    }
    g.check(x)?;
    g.check(y)?;
    if h.iso_type() != k.iso_type() {
        return Err(Error::TypeMismatch { left: h.iso_type().to_string(), right: k.iso_type().to_string() });
    }
    let pm = p.pow(m) as i128;
    let u = g.scalar_mul_unchecked(pm, x);
    let v = g.scalar_mul_unchecked(pm, y);
    if !h.contains(&u) || !k.contains(&v) {
        return Err(Error::InvalidArgument(format!("p^m x = {u} or p^m y = {v} is outside its subgroup")));
    }
    if g.order_unchecked(&u) != g.order_unchecked(&v) {
        return Err(Error::InvalidArgument("p^m x and p^m y have different orders".into()));
    }
    let theta = if u.is_zero() && v.is_zero() {
        Theta::new(g, match_bases(h.decompose(), k.decompose())?, ThetaCase::Trivial)?
    } else if is_frattini_generator(h, &u)? {
        if !is_frattini_generator(k, &v)? {
            return Err(Error::InternalInvariant(format!("{u} generates H but {v} does not generate K")));
        }
        let ord = g.order_unchecked(&u);
        let mut pairs = match_bases(summand_complement(h, &u)?, summand_complement(k, &v)?)?;
        pairs.push((CyclicFactor { generator: u.clone(), order: ord }, v.clone()));
        Theta::new(g, pairs, ThetaCase::Generator)?
    } else {
        if is_frattini_generator(k, &v)? {
            return Err(Error::InternalInvariant(format!("{v} generates K but {u} does not generate H")));
        }
        let a = lift_to_generator(h, &u)?;
        let b = lift_to_generator(k, &v)?;
        let ord = g.order_unchecked(&a);
        if g.order_unchecked(&b) != ord {
            return Err(Error::InternalInvariant("lifted generators have different orders".into()));
        }
        // u = c a and v = c' b with c, c' of equal p-valuation; rescale b so that c b = v
        let c = express(g, std::slice::from_ref(&a), &u).expect("u lies in <a>")[0];
        let c2 = express(g, std::slice::from_ref(&b), &v).expect("v lies in <b>")[0];
        let t = valuation(c, p);
        if t != valuation(c2, p) {
            return Err(Error::InternalInvariant("lift exponents differ".into()));
        }
        let pt = p.pow(t);
        let unit_mod = ord / pt;
        let alpha = mod_inv((c / pt) % unit_mod, unit_mod).expect("unit");
        let w = ((c2 / pt) % unit_mod) as u128 * alpha as u128 % unit_mod as u128;
        let b = g.scalar_mul_unchecked(w as i128, &b);
        let mut pairs = match_bases(summand_complement(h, &a)?, summand_complement(k, &b)?)?;
        pairs.push((CyclicFactor { generator: a, order: ord }, b));
        Theta::new(g, pairs, ThetaCase::NonGenerator)?
    };
    if theta.apply(&u)? != v {
        return Err(Error::InternalInvariant("theta(p^m x) != p^m y".into()));
    }
    Ok(theta)
}

fn sorted_decomposition(s: &Subgroup) -> Vec<CyclicFactor> {
    let mut f = s.decompose();
    f.sort_by_key(|a| Reverse(a.order));
    f
}

/// An isomorphism `H -> K` with `theta(u) = v`, found by carrying `u` to
/// `v` inside an abstract copy of `H` under a generating set of its
/// automorphism group. Fails if no such isomorphism exists.
pub fn transport_theta(g: &AbelianGroup, h: &Subgroup, k: &Subgroup, u: &GroupElement, v: &GroupElement) -> Result<Theta> {
    if h.iso_type() != k.iso_type() {
        return Err(Error::TypeMismatch { left: h.iso_type().to_string(), right: k.iso_type().to_string() });
    }
    let (hf, kf) = (sorted_decomposition(h), sorted_decomposition(k));
    let orders: Vec<u64> = hf.iter().map(|f| f.order).collect();
    let abs = AbelianGroup::from_cyclic_orders(&orders)?;
    let hgens: Vec<_> = hf.iter().map(|f| f.generator.clone()).collect();
    let kgens: Vec<_> = kf.iter().map(|f| f.generator.clone()).collect();
    let coords = |gens: &[GroupElement], z: &GroupElement| {
        express(g, gens, z)
            .map(GroupElement)
            .ok_or_else(|| Error::InvalidArgument(format!("{z} is outside the subgroup")))
    };
    let (start, goal) = (coords(&hgens, u)?, coords(&kgens, v)?);
    let gens = aut_generators(&abs);
    let mut parent: HashMap<GroupElement, Option<(GroupElement, usize)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        for (i, f) in gens.iter().enumerate() {
            let next = f.apply(&cur)?;
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), i)));
                queue.push_back(next);
            }
        }
    }
    if !parent.contains_key(&goal) {
        return Err(Error::InternalInvariant(format!("no isomorphism H -> K carries {u} to {v}")));
    }
    let mut sigma = GroupHom::identity(&abs);
    let mut cur = goal;
    while let Some(Some((prev, i))) = parent.get(&cur) {
        sigma = sigma.compose(&gens[*i])?;
        cur = prev.clone();
    }
    let pairs = hf
        .into_iter()
        .zip(sigma.images())
        .map(|(f, img)| {
            let ints: Vec<i128> = img.coords().iter().map(|&c| c as i128).collect();
            (f, combine(g, &kgens, &ints))
        })
        .collect();
    Theta::new(g, pairs, ThetaCase::Transported)
}

/// One Sylow component of a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowWitness {
    pub prime: u64,
    pub group: AbelianGroup,
    pub h: Subgroup,
    pub k: Subgroup,
    pub x: GroupElement,
    pub y: GroupElement,
    pub m_exponent: u32,
    pub theta: Theta,
    /// Why the summand construction was abandoned, when it was.
    pub fallback_reason: Option<String>,
}

impl SylowWitness {
    fn build(g: &AbelianGroup, h: &Subgroup, k: &Subgroup) -> Result<Self> {
        let prime = require_p_group(g)?;
        let (x, m) = find_cyclic_coset_generator(g, h)?;
        let (y, m2) = find_cyclic_coset_generator(g, k)?;
        if m != m2 {
            return Err(Error::TypeMismatch { left: h.quotient_type().to_string(), right: k.quotient_type().to_string() });
        }
        let (theta, fallback_reason) = match build_theta(g, h, k, &x, &y, m) {
            Ok(t) => (t, None),
            Err(e @ Error::NotDirectSummand(_)) => {
                let pm = prime.pow(m) as i128;
                let (u, v) = (g.scalar_mul_unchecked(pm, &x), g.scalar_mul_unchecked(pm, &y));
                (transport_theta(g, h, k, &u, &v)?, Some(e.to_string()))
            }
            Err(e) => return Err(e),
        };
        Ok(Self { prime, group: g.clone(), h: h.clone(), k: k.clone(), x, y, m_exponent: m, theta, fallback_reason })
    }

    /// `g = i x + h` with `0 <= i < p^m`, `h` in `H`.
    pub fn split(&self, z: &GroupElement) -> Result<(u64, GroupElement)> {
        let g = &self.group;
        g.check(z)?;
        let mut gens = vec![self.x.clone()];
        gens.extend(self.h.basis().iter().cloned());
        let coeffs = express(g, &gens, z).ok_or_else(|| Error::InternalInvariant(format!("{z} outside <x> + H")))?;
        let i = if self.prime <= 1 { 0 } else { coeffs[0] % self.prime.pow(self.m_exponent) };
        let rest = g.add_unchecked(z, &g.scalar_mul_unchecked(-(i as i128), &self.x));
        Ok((i, rest))
    }

    /// `i x + h -> i y + theta(h)`, evaluated pointwise.
    pub fn phi_pointwise(&self, z: &GroupElement) -> Result<GroupElement> {
        let (i, h) = self.split(z)?;
        let g = &self.group;
        Ok(g.add_unchecked(&g.scalar_mul_unchecked(i as i128, &self.y), &self.theta.apply(&h)?))
    }

    fn phi(&self) -> Result<GroupHom> {
        let g = &self.group;
        let images = (0..g.rank()).map(|j| self.phi_pointwise(&g.basis_element(j))).collect::<Result<Vec<_>>>()?;
        GroupHom::new(g.clone(), g.clone(), images)
    }

    /// Checks every defining property of the component.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let exp = g.exponent();
        for (z, s, name) in [(&self.x, &self.h, "x"), (&self.y, &self.k, "y")] {
            if g.order_unchecked(z) != exp {
                return Err(Error::InternalInvariant(format!("{name} = {z} does not have order {exp}")));
            }
            let cyc = Subgroup::from_generators(g, std::slice::from_ref(z))?;
            if !cyc.join(s)?.is_whole() {
                return Err(Error::InternalInvariant(format!("{name}-coset does not generate G/{s}")));
            }
        }
        self.theta.validate(&self.h, &self.k)?;
        let pm = if self.prime <= 1 { 1 } else { self.prime.pow(self.m_exponent) as i128 };
        if self.theta.apply(&g.scalar_mul_unchecked(pm, &self.x))? != g.scalar_mul_unchecked(pm, &self.y) {
            return Err(Error::InternalInvariant("theta(p^m x) != p^m y".into()));
        }
        Ok(())
    }
}

/// An automorphism `phi` of `G` with `phi(H) = K`, with its per-component
/// construction data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub group: AbelianGroup,
    pub h: Subgroup,
    pub k: Subgroup,
    pub phi: GroupHom,
    pub components: Vec<SylowWitness>,
}

impl WitnessReport {
    /// Re-checks all invariants: `phi` is an automorphism mapping `H` onto
    /// `K`, each component is valid, and `phi` restricts to `theta` on `H`.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        if self.phi.source() != g || self.phi.target() != g {
            return Err(g.mismatch());
        }
        self.phi.validate_automorphism()?;
        if self.phi.image_of(&self.h)? != self.k {
            return Err(Error::InternalInvariant("phi(H) != K".into()));
        }
        for c in &self.components {
            c.verify()?;
            let range = g.sylow_range(c.prime).unwrap_or(0..0);
            for (d, img) in c.theta.domain.iter().zip(c.theta.hom.images()) {
                let image = self.phi.apply(&embed(g, &range, d))?;
                if image != embed(g, &range, img) {
                    return Err(Error::InternalInvariant("theta disagrees with phi on H".into()));
                }
            }
        }
        Ok(())
    }
}

fn embed(g: &AbelianGroup, range: &std::ops::Range<usize>, z: &GroupElement) -> GroupElement {
    let mut c = vec![0; g.rank()];
    c[range.clone()].copy_from_slice(z.coords());
    GroupElement(c)
}

/// Builds and verifies an automorphism of `G` carrying `H` onto `K`.
pub fn extend_to_automorphism(g: &AbelianGroup, h: &Subgroup, k: &Subgroup) -> Result<WitnessReport> {
    if h.ambient() != g || k.ambient() != g {
        return Err(g.mismatch());
    }
    for s in [h, k] {
        if !s.is_cocyclic() {
            return Err(Error::NotCocyclic(s.to_string()));
        }
    }
    if h.iso_type() != k.iso_type() {
        return Err(Error::TypeMismatch { left: h.iso_type().to_string(), right: k.iso_type().to_string() });
    }
    let mut components = Vec::new();
    let mut images = vec![g.identity(); g.rank()];
    for (p, comp) in g.sylow_decompose() {
        let w = SylowWitness::build(&comp, &h.sylow_part(p)?, &k.sylow_part(p)?)?;
        let range = g.sylow_range(p).expect("prime of G");
        for (j, img) in range.clone().zip(w.phi()?.images()) {
            images[j] = embed(g, &range, img);
        }
        components.push(w);
    }
    let phi = GroupHom::new(g.clone(), g.clone(), images)?;
    let report = WitnessReport { group: g.clone(), h: h.clone(), k: k.clone(), phi, components };
    report.verify()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> AbelianGroup {
        AbelianGroup::parse(s).unwrap()
    }

    fn el(g: &AbelianGroup, c: &[u64]) -> GroupElement {
        g.element(c).unwrap()
    }

    fn sub(g: &AbelianGroup, gens: &[&[u64]]) -> Subgroup {
        let gens: Vec<_> = gens.iter().map(|c| el(g, c)).collect();
        Subgroup::from_generators(g, &gens).unwrap()
    }

    #[test]
    fn frattini_membership() {
        let g = grp("C9xC3");
        let whole = Subgroup::whole(&g);
        assert!(is_frattini_generator(&whole, &el(&g, &[1, 0])).unwrap());
        assert!(!is_frattini_generator(&whole, &g.identity()).unwrap());
        assert!(!is_frattini_generator(&whole, &el(&g, &[3, 0])).unwrap());
        let h = sub(&g, &[&[3, 0]]);
        assert!(is_frattini_generator(&h, &el(&g, &[1, 0])).is_err());
        let c9 = grp("C9");
        assert!(!is_frattini_generator(&Subgroup::whole(&c9), &el(&c9, &[3])).unwrap());
        assert!(is_frattini_generator(&Subgroup::whole(&grp("C6")), &el(&grp("C6"), &[1, 1])).is_err());
    }

    #[test]
    fn lifting() {
        let c9 = grp("C9");
        assert_eq!(lift_to_generator(&Subgroup::whole(&c9), &el(&c9, &[3])).unwrap(), el(&c9, &[1]));
        let g = grp("C9xC3");
        assert_eq!(lift_to_generator(&Subgroup::whole(&g), &el(&g, &[3, 0])).unwrap(), el(&g, &[1, 0]));
        let g = grp("C4xC2");
        assert_eq!(lift_to_generator(&Subgroup::whole(&g), &el(&g, &[2, 0])).unwrap(), el(&g, &[1, 0]));
        assert!(lift_to_generator(&Subgroup::whole(&g), &el(&g, &[1, 0])).is_err());
    }

    #[test]
    fn coset_generators() {
        let g = grp("C9xC3");
        assert_eq!(find_cyclic_coset_generator(&g, &sub(&g, &[&[3, 1]])).unwrap(), (el(&g, &[1, 0]), 2));
        assert_eq!(find_cyclic_coset_generator(&g, &sub(&g, &[&[1, 0]])).unwrap(), (el(&g, &[1, 1]), 1));
        assert_eq!(find_cyclic_coset_generator(&g, &Subgroup::whole(&g)).unwrap().1, 0);
        let not_cocyclic = sub(&g, &[&[0, 1]]);
        assert!(matches!(find_cyclic_coset_generator(&g, &Subgroup::trivial(&g)), Err(Error::NotCocyclic(_))));
        assert!(find_cyclic_coset_generator(&g, &not_cocyclic).is_ok());
    }

    #[test]
    fn theta_pins_the_power() {
        let g = grp("C9xC3");
        let (h, k) = (sub(&g, &[&[3, 1]]), sub(&g, &[&[3, 2]]));
        let (x, m) = find_cyclic_coset_generator(&g, &h).unwrap();
        let (y, _) = find_cyclic_coset_generator(&g, &k).unwrap();
        let theta = build_theta(&g, &h, &k, &x, &y, m).unwrap();
        theta.validate(&h, &k).unwrap();
        assert_eq!(theta.apply(&g.scalar_mul(9, &x).unwrap()).unwrap(), g.scalar_mul(9, &y).unwrap());
        let elems = h.elements();
        for a in &elems {
            for b in &elems {
                let lhs = theta.apply(&g.add(a, b).unwrap()).unwrap();
                let rhs = g.add(&theta.apply(a).unwrap(), &theta.apply(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let other = sub(&g, &[&[1, 0]]);
        assert!(matches!(build_theta(&g, &h, &other, &x, &y, m), Err(Error::TypeMismatch { .. })));
    }

    #[test]
    fn witness_examples() {
        let g = grp("C9xC3");
        let (h, k) = (sub(&g, &[&[3, 1]]), sub(&g, &[&[3, 2]]));
        let w = extend_to_automorphism(&g, &h, &k).unwrap();
        assert_eq!(w.phi.image_of(&h).unwrap(), k);
        let same = extend_to_automorphism(&g, &h, &h).unwrap();
        same.verify().unwrap();
        let g = grp("C36xC6");
        let h = sub(&g, &[&[0, 1, 0, 1]]);
        let k = sub(&g, &[&[2, 1, 0, 0], &[0, 0, 3, 1]]);
        let w = extend_to_automorphism(&g, &h, &k).unwrap();
        assert_eq!(w.components.len(), 2);
        assert_eq!(w.phi.image_of(&h).unwrap(), k);
    }

    #[test]
    fn witness_rejections() {
        let g = grp("C9xC3");
        let c9 = sub(&g, &[&[1, 0]]);
        let c3 = sub(&g, &[&[3, 1]]);
        assert!(matches!(extend_to_automorphism(&g, &c9, &c3), Err(Error::TypeMismatch { .. })));
        let t = Subgroup::trivial(&g);
        assert!(matches!(extend_to_automorphism(&g, &t, &t), Err(Error::NotCocyclic(_))));
    }

    #[test]
    fn frattini_generator_without_summand() {
        // every valid x gives 3x = 3a + b with a of order 27, b of order 3:
        // outside 3H, but <3x> of order 9 is not a direct summand of H
        let g = grp("C27xC9xC3");
        let h = sub(&g, &[&[1, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        let (x, m) = find_cyclic_coset_generator(&g, &h).unwrap();
        assert_eq!((x.clone(), m), (el(&g, &[1, 1, 0]), 1));
        let u = g.scalar_mul(3, &x).unwrap();
        assert!(is_frattini_generator(&h, &u).unwrap());
        assert!(matches!(build_theta(&g, &h, &h, &x, &x, m), Err(Error::NotDirectSummand(_))));
        let w = extend_to_automorphism(&g, &h, &h).unwrap();
        assert_eq!(w.components[0].theta.case, ThetaCase::Transported);
        assert!(w.components[0].fallback_reason.is_some());
        assert_eq!(w.components[0].theta.apply(&u).unwrap(), u);
    }

    #[test]
    fn pointwise_phi_matches_hom() {
        let g = grp("C8xC2");
        let h = sub(&g, &[&[1, 0]]);
        let k = sub(&g, &[&[1, 1]]);
        let w = extend_to_automorphism(&g, &h, &k).unwrap();
        let c = &w.components[0];
        for z in g.elements() {
            assert_eq!(c.phi_pointwise(&z).unwrap(), w.phi.apply(&z).unwrap());
        }
    }
}
