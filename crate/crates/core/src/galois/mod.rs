//! Finite field arithmetic.
//!
//! Two layers:
//!
//! - [`Gf`] is a small field GF(q), `q = p^e <= 2^16`, with log/antilog
//!   tables built once at construction. Elements are plain `u32` indices:
//!   the base-`p` digits of the index are the coefficients of the element
//!   over the polynomial basis `1, x, .., x^(e-1)`, constant term least
//!   significant. Matrix entries everywhere else in the crate are `Gf`
//!   indices.
//! - [`FieldSpec`] is an extension GF(q^m) of a `Gf`, given by the
//!   lexicographically smallest monic irreducible polynomial of degree `m`
//!   over GF(q). Its [`FieldElement`]s are coefficient vectors over the
//!   polynomial basis `1, a, .., a^(m-1)`. There is no table and no size
//!   limit, which is what the Gabidulin encoder needs for large `m`.
//!
//! All values are immutable after construction.

mod poly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest supported base field for matrix entries.
pub const MAX_BASE_ORDER: u64 = 1 << 16;

/// Largest field whose element list [`FieldSpec::elements`] will materialize.
pub const DEFAULT_ELEMENT_GUARD: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Table-driven GF(p^e).
#[derive(Clone)]
pub struct Gf {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf {
    /// GF(p^e). Fails on composite `p`, `e = 0`, or `p^e > 2^16`.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidDegree);
        }
        let order = BigUint::from(p).pow(e);
        if order > BigUint::from(MAX_BASE_ORDER) {
            return Err(Error::DegreeTooLarge {
                size: order,
                limit: MAX_BASE_ORDER,
            });
        }
        let prime = Self::prime(p as u32);
        if e == 1 {
            return Ok(prime);
        }
        let modulus = poly::smallest_irreducible(&prime, e as usize);
        Ok(Self::extension_tables(&prime, modulus))
    }

    /// GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    fn prime(p: u32) -> Self {
        let q = p;
        let generator = (1..p)
            .find(|&g| {
                let mut x = 1u64;
                for step in 1..p {
                    x = x * u64::from(g) % u64::from(p);
                    if x == 1 {
                        return step == p - 1;
                    }
                }
                false
            })
            .expect("every prime field has a primitive root");
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) {
            exp.push(x);
            log[x as usize] = i;
            x = (u64::from(x) * u64::from(generator) % u64::from(p)) as u32;
        }
        exp.extend_from_within(..);
        Gf {
            p,
            degree: 1,
            order: q,
            modulus: vec![0, 1],
            exp,
            log,
        }
    }

    fn extension_tables(prime: &Gf, modulus: Vec<u32>) -> Self {
        let p = prime.p;
        let e = (modulus.len() - 1) as u32;
        let q = p.pow(e);
        let to_digits = |mut v: u32| {
            let mut d = Vec::with_capacity(e as usize);
            for _ in 0..e {
                d.push(v % p);
                v /= p;
            }
            d
        };
        let from_digits = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mul = |a: u32, b: u32| {
            from_digits(&poly::mulmod(prime, &to_digits(a), &to_digits(b), &modulus))
        };
        let generator = (p..q)
            .find(|&g| {
                let mut x = 1u32;
                for step in 1..q {
                    x = mul(x, g);
                    if x == 1 {
                        return step == q - 1;
                    }
                }
                false
            })
            .expect("every finite field has a primitive element");
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) {
            exp.push(x);
            log[x as usize] = i;
            x = mul(x, generator);
        }
        exp.extend_from_within(..);
        Gf {
            p,
            degree: e,
            order: q,
            modulus,
            exp,
            log,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Defining polynomial over GF(p), constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.degree == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let l = self.log[a as usize];
        if l == 0 {
            1
        } else {
            self.exp[(self.order - 1 - l) as usize]
        }
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = u64::from(self.order - 1);
        self.exp[((u64::from(self.log[a as usize]) * (e % n)) % n) as usize]
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Gf {}

impl Hash for Gf {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.modulus.hash(state);
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

/// GF(q^m) over a base field GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    base: Arc<Gf>,
    degree: usize,
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// GF(p^m) over the prime field.
    pub fn new(p: u64, m: usize) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Self::extension(Arc::new(Gf::new(p, 1)?), m)
    }

    /// GF(q^m) over `base`, where `q = base.order()`.
    pub fn extension(base: Arc<Gf>, m: usize) -> Result<Arc<Self>> {
        if m == 0 {
            return Err(Error::InvalidDegree);
        }
        let modulus = poly::smallest_irreducible(&base, m);
        Ok(Arc::new(FieldSpec {
            base,
            degree: m,
            modulus,
        }))
    }

    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    /// Degree over the base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> usize {
        self.degree * self.base.degree() as usize
    }

    /// Monic defining polynomial over the base field, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.base.order()).pow(self.degree as u32)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: Arc::clone(self),
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    /// The basis element `a^i`, for `i < m`.
    pub fn basis_element(self: &Arc<Self>, i: usize) -> FieldElement {
        assert!(i < self.degree, "basis index {i} out of range");
        let mut e = self.zero();
        e.coeffs[i] = 1;
        e
    }

    /// Element from its coordinates over the polynomial basis.
    pub fn element(self: &Arc<Self>, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        if let Some(&digit) = coeffs.iter().find(|&&c| !self.base.contains(c)) {
            return Err(Error::InvalidDigit {
                digit,
                order: self.base.order(),
            });
        }
        Ok(FieldElement {
            spec: Arc::clone(self),
            coeffs: coeffs.to_vec(),
        })
    }

    /// Element whose coordinates are the base-q digits of `index`,
    /// constant coordinate least significant.
    pub fn from_index(self: &Arc<Self>, mut index: u128) -> Result<FieldElement> {
        let q = u128::from(self.base.order());
        let mut coeffs = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            coeffs.push((index % q) as u32);
            index /= q;
        }
        if index != 0 {
            return Err(Error::InvalidParams(format!(
                "element index out of range for a field of size {}",
                self.order()
            )));
        }
        Ok(FieldElement {
            spec: Arc::clone(self),
            coeffs,
        })
    }

    /// Every element, in index order. Refuses fields larger than `guard`.
    pub fn elements(self: &Arc<Self>, guard: u64) -> Result<Vec<FieldElement>> {
        let order = self.order();
        if order > BigUint::from(guard) {
            return Err(Error::DegreeTooLarge {
                size: order,
                limit: guard,
            });
        }
        let n: u128 = u128::try_from(order).expect("bounded by guard");
        (0..n).map(|i| self.from_index(i)).collect()
    }

    fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {:?}",
            self.base.order(),
            self.degree,
            self.modulus
        )
    }
}

#[derive(Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Coordinates over the polynomial basis, as base field digits.
    pub fn expand(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec.same(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<u32>) -> Self {
        FieldElement {
            spec: Arc::clone(&self.spec),
            coeffs,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.spec.base;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let f = &self.spec.base;
        self.with_coeffs(self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let spec = &self.spec;
        let f = &spec.base;
        let m = spec.degree;
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = f.add(prod[i + j], f.mul(a, b));
                }
            }
        }
        // the modulus is monic: x^m = -(c_0 + .. + c_{m-1} x^{m-1})
        for i in (m..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in spec.modulus[..m].iter().enumerate() {
                if mj != 0 {
                    let idx = i - m + j;
                    prod[idx] = f.sub(prod[idx], f.mul(c, mj));
                }
            }
        }
        prod.truncate(m);
        self.with_coeffs(prod)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.spec.base;
        let inv = poly::inv_mod(f, &self.coeffs, &self.spec.modulus)
            .expect("nonzero element of a field is invertible");
        let mut coeffs = inv;
        coeffs.resize(self.spec.degree, 0);
        Ok(self.with_coeffs(coeffs))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.spec.one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        acc
    }

    /// `self^(base_q^t)`. `base_q` must be `p^s` with `s` dividing the
    /// absolute degree of the field.
    pub fn frobenius(&self, base_q: u64, t: u64) -> Result<Self> {
        let p = u64::from(self.spec.characteristic());
        let total = self.spec.absolute_degree() as u64;
        let s = match prime_power(base_q) {
            Some((bp, s)) if bp == p && total.is_multiple_of(u64::from(s)) => u64::from(s),
            _ => return Err(Error::InvalidBase(base_q)),
        };
        // x^(q^(total/s)) = x
        let steps = t % (total / s);
        let mut out = self.clone();
        for _ in 0..steps {
            out = out.pow(base_q);
        }
        Ok(out)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same(&other.spec) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// `q^e` as an exact integer, `1` for a negative exponent.
pub(crate) fn ceil_pow(q: u64, exponent: i64) -> BigUint {
    if exponent <= 0 {
        BigUint::one()
    } else {
        BigUint::from(q).pow(exponent as u32)
    }
}
