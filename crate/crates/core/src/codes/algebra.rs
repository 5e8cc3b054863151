//! The group algebra `GF(q) G` with coefficients indexed by the lexicographic
//! position of each group element.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::mod_inv;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::hom::GroupHom;

use super::field::FieldSpec;

/// Largest group the algebra tables are built for.
pub const MAX_ALGEBRA_ORDER: u64 = 4096;

/// An element `sum a_g g` of `GF(q) G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraElement {
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: AbelianGroup,
    field: FieldSpec,
    elements: Vec<GroupElement>,
    /// `add[i * n + j]` = index of `elements[i] + elements[j]`.
    add: Vec<u32>,
}

impl GroupAlgebra {
    pub fn new(group: &AbelianGroup, field: FieldSpec) -> Result<Self> {
        let n = group.order();
        if n > MAX_ALGEBRA_ORDER {
            return Err(Error::CapExceeded { size: n as u128, cap: MAX_ALGEBRA_ORDER as u128 });
        }
        let elements: Vec<_> = group.elements().collect();
        let mut add = Vec::with_capacity((n * n) as usize);
        for a in &elements {
            for b in &elements {
                add.push(group.index_of(&group.add_unchecked(a, b)) as u32);
            }
        }
        Ok(Self { group: group.clone(), field, elements, add })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub(crate) fn sum_index(&self, i: usize, j: usize) -> usize {
        self.add[i * self.dim() + j] as usize
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { coeffs: vec![0; self.dim()] }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(&self.group.identity()).expect("identity is in G")
    }

    /// The group element `g` as an algebra element.
    pub fn basis(&self, g: &GroupElement) -> Result<AlgebraElement> {
        self.group.check(g)?;
        let mut e = self.zero();
        e.coeffs[self.group.index_of(g) as usize] = 1;
        Ok(e)
    }

    /// From a sparse description; coefficients are reduced mod `q`.
    pub fn from_map(&self, map: &BTreeMap<GroupElement, u64>) -> Result<AlgebraElement> {
        let mut e = self.zero();
        for (g, &c) in map {
            self.group.check(g)?;
            e.coeffs[self.group.index_of(g) as usize] = c % self.q();
        }
        Ok(e)
    }

    pub(crate) fn element_from_coeffs(&self, coeffs: Vec<u64>) -> AlgebraElement {
        debug_assert_eq!(coeffs.len(), self.dim());
        AlgebraElement { coeffs }
    }

    /// Nonzero coefficients keyed by group element.
    pub fn support(&self, a: &AlgebraElement) -> BTreeMap<GroupElement, u64> {
        self.elements
            .iter()
            .zip(&a.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(g, &c)| (g.clone(), c))
            .collect()
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.coeffs.len() != self.dim() || a.coeffs.iter().any(|&c| c >= self.q()) {
            return Err(Error::InvalidArgument("element of a different group algebra".into()));
        }
        Ok(())
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let q = self.q();
        Ok(AlgebraElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % q).collect() })
    }

    pub fn scale(&self, c: u64, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        let q = self.q();
        Ok(AlgebraElement { coeffs: a.coeffs.iter().map(|x| x * (c % q) % q).collect() })
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let q = self.q();
        let n = self.dim();
        let mut out = vec![0u64; n];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    let k = self.sum_index(i, j);
                    out[k] = (out[k] + x * y) % q;
                }
            }
        }
        Ok(AlgebraElement { coeffs: out })
    }

    /// `g * a`: coefficients shifted by `g`.
    pub(crate) fn translate(&self, gi: usize, a: &AlgebraElement) -> Vec<u64> {
        let mut out = vec![0u64; self.dim()];
        for (j, &c) in a.coeffs.iter().enumerate() {
            out[self.sum_index(gi, j)] = c;
        }
        out
    }

    pub fn is_idempotent(&self, a: &AlgebraElement) -> Result<bool> {
        Ok(self.mul(a, a)? == *a)
    }

    /// Linear extension of an automorphism of `G`.
    pub fn apply_hom(&self, phi: &GroupHom, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        if phi.source() != &self.group || phi.target() != &self.group {
            return Err(self.group.mismatch());
        }
        let mut out = vec![0u64; self.dim()];
        for (g, &c) in self.elements.iter().zip(&a.coeffs) {
            if c != 0 {
                let k = self.group.index_of(&phi.apply(g)?) as usize;
                out[k] = (out[k] + c) % self.q();
            }
        }
        Ok(AlgebraElement { coeffs: out })
    }

    /// `|G|^{-1}` in `GF(q)`.
    pub(crate) fn order_inverse(&self) -> u64 {
        mod_inv(self.group.order() % self.q(), self.q()).expect("q is coprime to |G|")
    }
}
