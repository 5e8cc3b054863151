//! Subgroups in canonical echelon form.
//!
//! A subgroup `S <= G` is identified with the lattice `L = pi^{-1}(S)` in
//! `Z^k`, which contains `diag(d_1, ..., d_k) Z^k`. The row Hermite normal
//! form of `L` is upper triangular with pivots `h_ii | d_i` and every entry
//! above a pivot reduced into `[0, h_jj)`. Rows with `h_ii = d_i` are the
//! zero element of `G`; the remaining rows form the canonical basis. Two
//! subgroups are equal iff their canonical bases are identical.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::xgcd;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::isotype::IsoType;
use crate::snf::{smith_form_with_basis, IntMatrix};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    basis: Vec<GroupElement>,
    pivots: Vec<usize>,
    ambient: Arc<AbelianGroup>,
    order: u64,
}

/// One cyclic summand of a decomposition: a generator and its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub generator: GroupElement,
    pub order: u64,
}

fn moduli(g: &AbelianGroup) -> Vec<i128> {
    g.generator_orders().iter().map(|&d| d as i128).collect()
}

/// Upper-triangular row HNF (k x k) of the lattice spanned by `rows` and
/// `diag(d)`. Every pivot divides the corresponding `d_i`.
pub(crate) fn hermite_lattice<'a, I>(g: &AbelianGroup, rows: I) -> IntMatrix
where
    I: IntoIterator<Item = &'a [u64]>,
{
    let d = moduli(g);
    let k = d.len();
    let mut pool: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.iter().map(|&x| x as i128).collect::<Vec<_>>())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let mut hnf = vec![vec![0i128; k]; k];
    for i in 0..k {
        let mut piv = vec![0i128; k];
        piv[i] = d[i];
        let mut rest = Vec::with_capacity(pool.len());
        for mut row in pool.drain(..) {
            if row[i] != 0 {
                let (gcd, s, t) = xgcd(piv[i], row[i]);
                let a = piv[i] / gcd;
                let b = row[i] / gcd;
                piv[i] = gcd;
                row[i] = 0;
                for j in i + 1..k {
                    let (x, y) = (piv[j], row[j]);
                    piv[j] = (s * x + t * y).rem_euclid(d[j]);
                    row[j] = (b * x - a * y).rem_euclid(d[j]);
                }
            }
            if row[i + 1..].iter().any(|&x| x != 0) {
                rest.push(row);
            }
        }
        hnf[i] = piv;
        pool = rest;
    }
    for i in 0..k {
        for j in i + 1..k {
            let q = hnf[i][j].div_euclid(hnf[j][j]);
            if q != 0 {
                let (top, bottom) = hnf.split_at_mut(j);
                for (x, y) in top[i][j..].iter_mut().zip(&bottom[0][j..]) {
                    *x -= q * y;
                }
            }
        }
    }
    hnf
}

impl Subgroup {
    fn from_hermite(ambient: Arc<AbelianGroup>, hnf: &IntMatrix) -> Self {
        let d = ambient.generator_orders();
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        let mut order = 1u64;
        for (i, row) in hnf.iter().enumerate() {
            let h = row[i] as u64;
            if h < d[i] {
                basis.push(GroupElement(row.iter().map(|&x| x as u64).collect()));
                pivots.push(i);
                order *= d[i] / h;
            }
        }
        Subgroup { basis, pivots, ambient, order }
    }

    /// Closure of `gens` in canonical form.
    pub fn from_generators(ambient: &AbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            ambient.check(g)?;
        }
        Ok(Self::from_generators_in(Arc::new(ambient.clone()), gens))
    }

    pub(crate) fn from_generators_in(ambient: Arc<AbelianGroup>, gens: &[GroupElement]) -> Self {
        let hnf = hermite_lattice(&ambient, gens.iter().map(|g| g.coords()));
        Self::from_hermite(ambient, &hnf)
    }

    pub fn trivial(ambient: &AbelianGroup) -> Self {
        Self::from_generators_in(Arc::new(ambient.clone()), &[])
    }

    pub fn whole(ambient: &AbelianGroup) -> Self {
        let gens: Vec<_> = (0..ambient.rank()).map(|i| ambient.basis_element(i)).collect();
        Self::from_generators_in(Arc::new(ambient.clone()), &gens)
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    /// Canonical echelon basis.
    pub fn basis(&self) -> &[GroupElement] {
        &self.basis
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn index(&self) -> u64 {
        self.ambient.order() / self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.ambient.order()
    }

    pub fn exponent(&self) -> u64 {
        self.basis
            .iter()
            .fold(1, |acc, b| crate::arith::lcm(acc, self.ambient.order_unchecked(b)))
    }

    /// Full k x k lattice matrix (canonical rows, plus `d_i e_i` where no pivot).
    pub fn lattice_matrix(&self) -> IntMatrix {
        let d = self.ambient.generator_orders();
        let k = d.len();
        let mut out = Vec::with_capacity(k);
        let mut it = self.pivots.iter().zip(&self.basis).peekable();
        for (i, &di) in d.iter().enumerate() {
            match it.peek() {
                Some(&(&p, row)) if p == i => {
                    out.push(row.coords().iter().map(|&x| x as i128).collect());
                    it.next();
                }
                _ => {
                    let mut r = vec![0; k];
                    r[i] = di as i128;
                    out.push(r);
                }
            }
        }
        out
    }

    /// Membership by echelon reduction.
    pub fn contains(&self, g: &GroupElement) -> bool {
        if !self.ambient.contains_element(g) {
            return false;
        }
        let d = self.ambient.generator_orders();
        let mut v: Vec<u128> = g.coords().iter().map(|&x| x as u128).collect();
        let mut rows = self.pivots.iter().zip(&self.basis).peekable();
        for i in 0..v.len() {
            let row = match rows.peek() {
                Some(&(&p, row)) if p == i => {
                    rows.next();
                    row
                }
                _ => {
                    if v[i] != 0 {
                        return false;
                    }
                    continue;
                }
            };
            let h = row.coords()[i] as u128;
            if !v[i].is_multiple_of(h) {
                return false;
            }
            let q = v[i] / h;
            for j in i..v.len() {
                let dj = d[j] as u128;
                v[j] = (v[j] + (dj - row.coords()[j] as u128 % dj) * (q % dj)) % dj;
            }
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.ambient != other.ambient {
            return Err(self.ambient.mismatch());
        }
        let gens: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_generators_in(self.ambient.clone(), &gens))
    }

    /// `n * S`.
    pub fn multiple(&self, n: i128) -> Subgroup {
        let gens: Vec<_> = self.basis.iter().map(|b| self.ambient.scalar_mul_unchecked(n, b)).collect();
        Self::from_generators_in(self.ambient.clone(), &gens)
    }

    /// All elements, each exactly once (via unique echelon coefficients).
    pub fn elements(&self) -> Vec<GroupElement> {
        let g = &self.ambient;
        let d = g.generator_orders();
        let mut out = vec![g.identity()];
        for (&p, row) in self.pivots.iter().zip(&self.basis) {
            let steps = d[p] / row.coords()[p];
            let mut next = Vec::with_capacity(out.len() * steps as usize);
            for base in &out {
                let mut cur = base.clone();
                for _ in 0..steps {
                    next.push(cur.clone());
                    cur = g.add_unchecked(&cur, row);
                }
            }
            out = next;
        }
        out
    }

    /// Cyclic decomposition of `self / sub`, generators taken from `self`.
    /// Factors come in divisibility order; factors of order 1 are dropped.
    pub fn decompose_quotient(&self, sub: &Subgroup) -> Result<Vec<CyclicFactor>> {
        if self.ambient != sub.ambient {
            return Err(self.ambient.mismatch());
        }
        let outer = self.lattice_matrix();
        let inner = sub.lattice_matrix();
        let k = outer.len();
        // relation matrix: inner = rel * outer, outer upper triangular
        let mut rel = vec![vec![0i128; k]; k];
        for (i, target) in inner.iter().enumerate() {
            for j in 0..k {
                let acc: i128 = (0..j).map(|l| rel[i][l] * outer[l][j]).sum();
                let num = target[j] - acc;
                if num % outer[j][j] != 0 {
                    return Err(Error::InvalidArgument("quotient by a non-subgroup".into()));
                }
                rel[i][j] = num / outer[j][j];
            }
        }
        let md = moduli(&self.ambient);
        let sf = smith_form_with_basis(&rel, outer, Some(&md));
        Ok(sf
            .diagonal
            .iter()
            .zip(sf.basis)
            .filter(|(&f, _)| f > 1)
            .map(|(&f, row)| CyclicFactor {
                generator: GroupElement(row.into_iter().map(|x| x as u64).collect()),
                order: f as u64,
            })
            .collect())
    }

    /// A basis `S = <b_1> + ... + <b_r>` (internal direct sum) with orders.
    pub fn decompose(&self) -> Vec<CyclicFactor> {
        self.decompose_quotient(&Subgroup::trivial(&self.ambient))
            .expect("trivial subgroup is contained in every subgroup")
    }

    /// Isomorphism type of `S` via Smith normal form.
    pub fn iso_type(&self) -> IsoType {
        IsoType::from_cyclic_orders(self.decompose().iter().map(|c| c.order))
    }

    /// Isomorphism type of `G / S`.
    pub fn quotient_type(&self) -> IsoType {
        IsoType::from_cyclic_orders(
            crate::snf::invariant_factors(&self.lattice_matrix())
                .into_iter()
                .map(|x| x as u64),
        )
    }

    /// `G / S` is cyclic (this includes `S = G`).
    pub fn is_cocyclic(&self) -> bool {
        self.quotient_type().is_cyclic()
    }

    /// Coordinates of the Sylow `p`-part, as a subgroup of the Sylow component.
    pub fn sylow_part(&self, p: u64) -> Result<Subgroup> {
        let range = self
            .ambient
            .sylow_range(p)
            .ok_or_else(|| Error::InvalidArgument(format!("{p} does not divide |G|")))?;
        let comp = AbelianGroup::p_group(p, &self.ambient.primaries()[&p])?;
        let gens: Vec<_> = self.basis.iter().map(|b| GroupElement(b.coords()[range.clone()].to_vec())).collect();
        Ok(Subgroup::from_generators_in(Arc::new(comp), &gens))
    }

    /// Product of subgroups of the Sylow components, in ascending prime order.
    pub fn assemble(ambient: &AbelianGroup, parts: &[Subgroup]) -> Result<Subgroup> {
        let comps = ambient.sylow_decompose();
        if comps.len() != parts.len() {
            return Err(ambient.mismatch());
        }
        let k = ambient.rank();
        let mut gens = Vec::new();
        for ((p, comp), part) in comps.iter().zip(parts) {
            if part.ambient() != comp {
                return Err(Error::AmbientMismatch { expected: comp.to_string() });
            }
            let range = ambient.sylow_range(*p).expect("prime of ambient");
            for b in part.basis() {
                let mut c = vec![0; k];
                c[range.clone()].copy_from_slice(b.coords());
                gens.push(GroupElement(c));
            }
        }
        Ok(Subgroup::from_generators_in(Arc::new(ambient.clone()), &gens))
    }
}

/// Integer coefficients `c` with `sum c_i * gens_i = target` in `g`, reduced
/// modulo each generator's order; `None` if `target` is not in the span.
pub fn express(g: &AbelianGroup, gens: &[GroupElement], target: &GroupElement) -> Option<Vec<u64>> {
    let d = moduli(g);
    let k = d.len();
    let s = gens.len();
    let gen_orders: Vec<i128> = gens.iter().map(|x| g.order_unchecked(x) as i128).collect();
    type Row = (Vec<i128>, Vec<i128>);
    let mut pool: Vec<Row> = gens
        .iter()
        .enumerate()
        .map(|(l, x)| {
            let mut tail = vec![0; s];
            tail[l] = 1 % gen_orders[l];
            (x.coords().iter().map(|&c| c as i128).collect(), tail)
        })
        .collect();
    let mut pivots: Vec<Row> = Vec::with_capacity(k);
    for i in 0..k {
        let mut piv: Row = (vec![0; k], vec![0; s]);
        piv.0[i] = d[i];
        let mut rest = Vec::with_capacity(pool.len());
        for mut row in pool.drain(..) {
            if row.0[i] != 0 {
                let (gcd, a_s, a_t) = xgcd(piv.0[i], row.0[i]);
                let a = piv.0[i] / gcd;
                let b = row.0[i] / gcd;
                piv.0[i] = gcd;
                row.0[i] = 0;
                for j in i + 1..k {
                    let (x, y) = (piv.0[j], row.0[j]);
                    piv.0[j] = (a_s * x + a_t * y).rem_euclid(d[j]);
                    row.0[j] = (b * x - a * y).rem_euclid(d[j]);
                }
                for l in 0..s {
                    let (x, y) = (piv.1[l], row.1[l]);
                    piv.1[l] = (a_s * x + a_t * y).rem_euclid(gen_orders[l]);
                    row.1[l] = (b * x - a * y).rem_euclid(gen_orders[l]);
                }
            }
            if row.0[i + 1..].iter().any(|&x| x != 0) {
                rest.push(row);
            }
        }
        pivots.push(piv);
        pool = rest;
    }
    let mut v: Vec<i128> = target.coords().iter().map(|&c| c as i128).collect();
    let mut coeffs = vec![0i128; s];
    for (i, (left, tail)) in pivots.iter().enumerate() {
        let r = v[i].rem_euclid(d[i]);
        if r % left[i] != 0 {
            return None;
        }
        let q = r / left[i];
        for j in i..k {
            v[j] = (v[j] - q * left[j]).rem_euclid(d[j]);
        }
        for l in 0..s {
            coeffs[l] = (coeffs[l] + q * tail[l]).rem_euclid(gen_orders[l]);
        }
    }
    Some(coeffs.into_iter().map(|c| c as u64).collect())
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({self} <= {})", self.ambient)
    }
}

#[derive(Serialize, Deserialize)]
struct SubgroupRepr {
    ambient: AbelianGroup,
    basis: Vec<GroupElement>,
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubgroupRepr { ambient: (*self.ambient).clone(), basis: self.basis.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SubgroupRepr::deserialize(d)?;
        Subgroup::from_generators(&repr.ambient, &repr.basis).map_err(serde::de::Error::custom)
    }
}
