//! Prime fields and their extensions `GF(q^d) = GF(q)[x] / (f)`.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, multiplicative_order};
use crate::error::{Error, Result};
use crate::group::AbelianGroup;

/// Polynomials over `GF(q)`, coefficients lowest degree first, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], q: u64) -> Poly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = crate::arith::mod_inv(m[dm], q).expect("nonzero leading coefficient");
    while r.len() > dm && !r.is_empty() {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % q;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let j = top - dm + i;
                r[j] = (r[j] + q - c * mi % q) % q;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], q: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    poly_rem(&out, m, q)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], q: u64) -> Poly {
    let mut result: Poly = vec![1];
    let mut b = poly_rem(base, m, q);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, m, q);
        }
        b = poly_mulmod(&b, &b, m, q);
        e >>= 1;
    }
    result
}

fn poly_sub(a: &[u64], b: &[u64], q: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + q - b.get(i).copied().unwrap_or(0)) % q)
        .collect();
    trim(out)
}

fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, q);
        a = b;
        b = r;
    }
    a
}

/// `x^(q^k) mod f` by repeated `q`-th powers.
fn frobenius_power(k: u32, f: &[u64], q: u64) -> Poly {
    let mut x: Poly = vec![0, 1];
    for _ in 0..k {
        x = poly_powmod(&x, q, f, q);
    }
    x
}

/// Rabin's test for a monic `f` of degree `d`.
pub fn is_irreducible(f: &[u64], q: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    if poly_sub(&frobenius_power(d as u32, f, q), &x, q) != poly_rem(&[], f, q) {
        return false;
    }
    factorize(d as u64).iter().all(|&(r, _)| {
        let h = poly_sub(&frobenius_power((d as u64 / r) as u32, f, q), &x, q);
        poly_gcd(f, &h, q).len() == 1
    })
}

/// The first monic irreducible polynomial of degree `d` over `GF(q)`, in the
/// order of the lower coefficients read as a base-`q` number.
pub fn first_irreducible(q: u64, d: u32) -> Poly {
    if d == 1 {
        return vec![0, 1];
    }
    let mut low = vec![0u64; d as usize];
    loop {
        let mut f = low.clone();
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, q) {
            return f;
        }
        for c in low.iter_mut() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
}

/// Splitting field data for `GF(q) G`: `d` is the order of `q` modulo `exp(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub q: u64,
    pub degree: u32,
    /// Monic, lowest coefficient first (length `degree + 1`).
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn for_group(q: u64, g: &AbelianGroup) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if gcd(q, g.order()) != 1 {
            return Err(Error::CharacteristicDividesOrder { q, order: g.order() });
        }
        let degree = multiplicative_order(q % g.exponent().max(1), g.exponent()).unwrap_or(1).max(1) as u32;
        Ok(Self { q, degree, modulus: first_irreducible(q, degree) })
    }

    pub fn field(&self) -> ExtField {
        ExtField { q: self.q, d: self.degree as usize, modulus: self.modulus.clone() }
    }
}

/// Arithmetic in `GF(q^d)`; elements are coefficient vectors of length `d`.
#[derive(Clone, Debug)]
pub struct ExtField {
    q: u64,
    d: usize,
    modulus: Vec<u64>,
}

pub type FieldElem = Vec<u64>;

impl ExtField {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn zero(&self) -> FieldElem {
        vec![0; self.d]
    }

    pub fn one(&self) -> FieldElem {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    fn pad(&self, mut p: Poly) -> FieldElem {
        p.resize(self.d, 0);
        p
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FieldElem {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.q).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FieldElem {
        self.pad(poly_mulmod(&trim(a.to_vec()), &trim(b.to_vec()), &self.modulus, self.q))
    }

    pub fn pow(&self, a: &[u64], e: u64) -> FieldElem {
        self.pad(poly_powmod(&trim(a.to_vec()), e, &self.modulus, self.q))
    }

    /// Order of the multiplicative group.
    pub fn unit_count(&self) -> u64 {
        self.q.pow(self.d as u32) - 1
    }

    /// Element of `GF(q^d)` with index `i` (base-`q` digits, lowest first).
    fn element_at(&self, mut i: u64) -> FieldElem {
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = i % self.q;
            i /= self.q;
        }
        v
    }

    /// A primitive `e`-th root of unity: the first `a^((q^d - 1)/e)` of exact
    /// order `e`, scanning `a` in index order.
    pub fn primitive_root_of_unity(&self, e: u64) -> Result<FieldElem> {
        let n = self.unit_count();
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::InvalidArgument(format!("{e} does not divide {n}")));
        }
        let one = self.one();
        let primes: Vec<u64> = factorize(e).into_iter().map(|(r, _)| r).collect();
        for i in 1..=n {
            let z = self.pow(&self.element_at(i), n / e);
            if z.iter().all(|&c| c == 0) {
                continue;
            }
            if primes.iter().all(|&r| self.pow(&z, e / r) != one) {
                return Ok(z);
            }
        }
        Err(Error::InternalInvariant(format!("no primitive {e}-th root of unity")))
    }
}
