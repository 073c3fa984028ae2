//! Finite field arithmetic over `F_{r^k}`.
//!
//! Elements are plain integer indices: the element `c_0 + c_1 y + … +
//! c_{k-1} y^{k-1}` (coefficients in `F_r`, reduced modulo the field's
//! defining polynomial) has index `c_0 + c_1 r + … + c_{k-1} r^{k-1}`. The
//! prime subfield is therefore exactly the indices `0..r`.
//!
//! Fields with at most [`TABLE_BUDGET`] elements carry log/antilog tables
//! (and full addition tables when tiny). Larger fields, which only appear as
//! splitting fields while building generator polynomials, fall back to
//! polynomial-basis arithmetic with identical element indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, prime_factors};

/// Field element index.
pub type Elem = u64;

/// Largest field that gets log/antilog tables.
pub const TABLE_BUDGET: u64 = 1 << 20;
/// Largest field supported by the polynomial-basis fallback.
pub const MAX_ORDER: u64 = 1 << 62;
/// Fields this small also get full addition tables.
const ADD_TABLE_MAX: u64 = 256;

#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    r: u64,
    k: u32,
    order: u64,
    /// Monic defining polynomial over `F_r`, ascending, length `k + 1`.
    modulus: Vec<u64>,
    r_pows: Vec<u64>,
    primitive: Elem,
    tables: Option<Tables>,
}

struct Tables {
    /// `exp[i] = g^i` for `i < 2(order - 1)` so log sums need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// Serialized form of a field: characteristic, degree and defining polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub r: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

/// Table-backed field `F_{r^k}` with the lexicographically first monic
/// irreducible modulus (ordered by the index of its non-leading part).
pub fn construct_field(r: u64, k: u32) -> Result<FieldSpec> {
    let order = checked_order(r, k, TABLE_BUDGET)?;
    let modulus = first_irreducible(r, k, order);
    FieldSpec::build(r, k, modulus, true)
}

/// Like [`construct_field`] but falls back to untabled arithmetic above the
/// table budget (up to [`MAX_ORDER`]).
pub fn construct_field_large(r: u64, k: u32) -> Result<FieldSpec> {
    let order = checked_order(r, k, MAX_ORDER)?;
    let modulus = first_irreducible(r, k, order);
    FieldSpec::build(r, k, modulus, order <= TABLE_BUDGET)
}

fn checked_order(r: u64, k: u32, limit: u64) -> Result<u64> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    if k == 0 {
        return Err(Error::FieldTooLarge { r, k, limit });
    }
    match r.checked_pow(k) {
        Some(order) if order <= limit => Ok(order),
        _ => Err(Error::FieldTooLarge { r, k, limit }),
    }
}

fn first_irreducible(r: u64, k: u32, order: u64) -> Vec<u64> {
    (0..order)
        .map(|low| {
            let mut m = digits(low, r, k as usize);
            m.push(1);
            m
        })
        .find(|m| fp::is_irreducible(m, r))
        .expect("irreducible polynomials exist in every degree")
}

fn digits(mut x: u64, r: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % r);
        x /= r;
    }
    out
}

impl FieldSpec {
    /// Builds a field from an explicit monic defining polynomial.
    pub fn with_modulus(r: u64, modulus: Vec<u64>) -> Result<FieldSpec> {
        if !is_prime(r) {
            return Err(Error::NotPrime(r));
        }
        let k = modulus.len().saturating_sub(1) as u32;
        checked_order(r, k, TABLE_BUDGET)?;
        if modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= r)
            || !fp::is_irreducible(&modulus, r)
        {
            return Err(Error::ReducibleModulus { r, k });
        }
        FieldSpec::build(r, k, modulus, true)
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<FieldSpec> {
        let spec = FieldSpec::with_modulus(d.r, d.modulus.clone())?;
        if spec.degree() != d.k {
            return Err(Error::Parse(format!(
                "field degree {} does not match modulus of degree {}",
                d.k,
                spec.degree()
            )));
        }
        Ok(spec)
    }

    fn build(r: u64, k: u32, modulus: Vec<u64>, tabled: bool) -> Result<FieldSpec> {
        let order = r.pow(k);
        let r_pows = (0..=k).map(|i| r.pow(i)).collect();
        let mut inner = Inner {
            r,
            k,
            order,
            modulus,
            r_pows,
            primitive: 1,
            tables: None,
        };
        inner.primitive = find_primitive(&inner);
        if tabled {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.r
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_tabled(&self) -> bool {
        self.0.tables.is_some()
    }

    /// Smallest-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        self.0.primitive
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            r: self.0.r,
            k: self.0.k,
            modulus: self.0.modulus.clone(),
        }
    }

    pub fn same_field(&self, other: &FieldSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.r == other.0.r && self.0.modulus == other.0.modulus)
    }

    pub fn element(&self, value: Elem) -> Result<FieldElement> {
        if value >= self.order() {
            return Err(Error::Parse(format!(
                "element index {value} out of range for field of order {}",
                self.order()
            )));
        }
        Ok(FieldElement {
            spec: self.clone(),
            value,
        })
    }

    /// Canonical index of the prime-field constant `c mod r`.
    #[inline]
    pub fn from_int(&self, c: i64) -> Elem {
        (c as i128).rem_euclid(self.0.r as i128) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.r == 2 {
            return a ^ b;
        }
        if let Some(t) = &f.tables {
            if let Some(add) = &t.add {
                return add[(a * f.order + b) as usize] as Elem;
            }
        }
        let mut out = 0;
        let (mut a, mut b) = (a, b);
        for i in 0..f.k as usize {
            let s = (a % f.r + b % f.r) % f.r;
            out += s * f.r_pows[i];
            a /= f.r;
            b /= f.r;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.0;
        if f.r == 2 {
            return a;
        }
        if let Some(t) = &f.tables {
            return t.neg[a as usize] as Elem;
        }
        neg_digits(f, a)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize] as Elem,
            None => slow_mul(&self.0, a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.0.tables {
            Some(t) => {
                let n = (self.order() - 1) as u32;
                t.exp[((n - t.log[a as usize]) % n) as usize] as Elem
            }
            None => self.pow(a, self.order() - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.order() - 1;
        match &self.0.tables {
            Some(t) => {
                let l = (t.log[a as usize] as u128 * (e % n) as u128 % n as u128) as usize;
                t.exp[l] as Elem
            }
            None => slow_pow(&self.0, a, e % n + if e.is_multiple_of(n) { n } else { 0 }),
        }
    }

    /// `a^(r^i)`.
    pub fn frobenius(&self, a: Elem, i: u32) -> Elem {
        let mut x = a;
        for _ in 0..i % self.degree() {
            x = self.pow(x, self.0.r);
        }
        x
    }

    /// `a^sqrt(order)`, the involution behind the Hermitian form.
    pub fn hermitian_conjugate(&self, a: Elem) -> Result<Elem> {
        if !self.degree().is_multiple_of(2) {
            return Err(Error::NotSquareOrder {
                r: self.0.r,
                k: self.0.k,
            });
        }
        Ok(self.frobenius(a, self.degree() / 2))
    }

    /// Element of exact multiplicative order `p`: `g^((order-1)/p)` for the
    /// smallest-index primitive element `g`.
    pub fn primitive_root_of_unity(&self, p: u64) -> Result<Elem> {
        let n = self.order() - 1;
        if p < 2 || !n.is_multiple_of(p) {
            return Err(Error::NoRootOfUnity { p, order: n });
        }
        Ok(self.pow(self.0.primitive, n / p))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.order() - 1;
        for q in prime_factors(ord) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == 1 {
                ord /= q;
            }
        }
        Ok(ord)
    }

    /// Evaluates a polynomial with prime-field coefficients at `x`.
    fn eval_prime_poly(&self, coeffs: &[u64], x: Elem) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (modulus {:?})", self.0.r, self.0.k, self.0.modulus)
    }
}

fn neg_digits(f: &Inner, a: Elem) -> Elem {
    let mut out = 0;
    let mut a = a;
    for i in 0..f.k as usize {
        let c = a % f.r;
        out += ((f.r - c) % f.r) * f.r_pows[i];
        a /= f.r;
    }
    out
}

fn slow_mul(f: &Inner, a: Elem, b: Elem) -> Elem {
    let k = f.k as usize;
    if f.r == 2 {
        // carry-less product then reduction by the modulus bits
        let mut prod: u128 = 0;
        for i in 0..k {
            if (b >> i) & 1 == 1 {
                prod ^= (a as u128) << i;
            }
        }
        let m: u128 = f
            .modulus
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc | ((c as u128) << i));
        for i in (k..2 * k).rev() {
            if (prod >> i) & 1 == 1 {
                prod ^= m << (i - k);
            }
        }
        return prod as Elem;
    }
    let r = f.r;
    let ad = digits(a, r, k);
    let bd = digits(b, r, k);
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in ad.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in bd.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % r;
        }
    }
    for i in (k..2 * k).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for (j, &m) in f.modulus.iter().enumerate() {
            prod[i - k + j] = (prod[i - k + j] + (r - c) * m) % r;
        }
    }
    prod[..k].iter().rev().fold(0, |acc, &c| acc * r + c)
}

fn slow_pow(f: &Inner, mut a: Elem, mut e: u64) -> Elem {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(f, acc, a);
        }
        a = slow_mul(f, a, a);
        e >>= 1;
    }
    acc
}

fn find_primitive(f: &Inner) -> Elem {
    let n = f.order - 1;
    let factors = prime_factors(n);
    (1..f.order)
        .find(|&g| factors.iter().all(|&q| slow_pow(f, g, n / q) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn build_tables(f: &Inner) -> Tables {
    let order = f.order as usize;
    let n = order - 1;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; order];
    let mut x: Elem = 1;
    for i in 0..n {
        exp[i] = x as u32;
        exp[i + n] = x as u32;
        log[x as usize] = i as u32;
        x = slow_mul(f, x, f.primitive);
    }
    let neg = (0..f.order).map(|a| neg_digits(f, a) as u32).collect();
    let add = (f.order <= ADD_TABLE_MAX).then(|| {
        let mut t = Vec::with_capacity(order * order);
        for a in 0..f.order {
            for b in 0..f.order {
                let ad = digits(a, f.r, f.k as usize);
                let bd = digits(b, f.r, f.k as usize);
                let s = ad
                    .iter()
                    .zip(&bd)
                    .rev()
                    .fold(0, |acc, (&x, &y)| acc * f.r + (x + y) % f.r);
                t.push(s as u32);
            }
        }
        t
    });
    Tables { exp, log, neg, add }
}

/// An element bundled with its field; arithmetic is checked for matching
/// fields.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F_{}^{}", self.value, self.spec.0.r, self.spec.0.k)
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.spec.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.spec.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.spec.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.spec.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.spec.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.spec.pow(self.value, e))
    }

    pub fn frobenius(&self, i: u32) -> FieldElement {
        self.with(self.spec.frobenius(self.value, i))
    }
}

/// The embedding `F_{r^j} -> F_{r^k}` (`j | k`) sending the generator `y` of
/// the small field to the smallest-index root of its modulus in the big one.
pub struct Embedding {
    src: FieldSpec,
    dst: FieldSpec,
    images: Vec<Elem>,
    preimages: HashMap<Elem, Elem>,
}

impl Embedding {
    pub fn new(src: &FieldSpec, dst: &FieldSpec) -> Result<Embedding> {
        let r = src.characteristic();
        let (j, k) = (src.degree(), dst.degree());
        if r != dst.characteristic() || k % j != 0 {
            return Err(Error::NotSubfield { r, j, k });
        }
        let q = src.order();
        if src.same_field(dst) {
            let images: Vec<Elem> = (0..q).collect();
            let preimages = images.iter().map(|&a| (a, a)).collect();
            return Ok(Embedding {
                src: src.clone(),
                dst: dst.clone(),
                images,
                preimages,
            });
        }
        // nonzero elements of the subfield of order q are the powers of h
        let h = dst.pow(dst.primitive_element(), (dst.order() - 1) / (q - 1));
        let mut candidates: Vec<Elem> = std::iter::successors(Some(1), |&x| {
            let y = dst.mul(x, h);
            (y != 1).then_some(y)
        })
        .collect();
        candidates.push(0);
        candidates.sort_unstable();
        let root = candidates
            .into_iter()
            .find(|&x| dst.eval_prime_poly(src.modulus(), x) == 0)
            .ok_or_else(|| Error::Inconsistent("no root of subfield modulus".into()))?;
        let mut root_pows = Vec::with_capacity(j as usize);
        let mut x = 1;
        for _ in 0..j {
            root_pows.push(x);
            x = dst.mul(x, root);
        }
        let images: Vec<Elem> = (0..q)
            .map(|a| {
                digits(a, r, j as usize)
                    .iter()
                    .zip(&root_pows)
                    .fold(0, |acc, (&c, &b)| dst.add(acc, dst.mul(c, b)))
            })
            .collect();
        let preimages: HashMap<Elem, Elem> =
            images.iter().enumerate().map(|(a, &b)| (b, a as Elem)).collect();
        if preimages.len() != q as usize {
            return Err(Error::Inconsistent("embedding is not injective".into()));
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            images,
            preimages,
        })
    }

    pub fn source(&self) -> &FieldSpec {
        &self.src
    }

    pub fn target(&self) -> &FieldSpec {
        &self.dst
    }

    #[inline]
    pub fn embed(&self, a: Elem) -> Elem {
        self.images[a as usize]
    }

    pub fn project(&self, b: Elem) -> Result<Elem> {
        self.preimages
            .get(&b)
            .copied()
            .ok_or(Error::NotInSubfield(b))
    }
}

/// Polynomials over a prime field `F_r`, used only to find irreducible moduli.
mod fp {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv(a: u64, r: u64) -> u64 {
        crate::numtheory::pow_mod(a, r - 2, r)
    }

    pub fn rem(a: &[u64], m: &[u64], r: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        trim(&mut a);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], r);
        while a.len() > dm {
            let c = a[a.len() - 1] * lead_inv % r;
            let shift = a.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + (r - c) * mi % r) % r;
            }
            trim(&mut a);
        }
        a
    }

    fn mul_mod(a: &[u64], b: &[u64], m: &[u64], r: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % r;
            }
        }
        rem(&prod, m, r)
    }

    fn pow_mod(base: &[u64], mut e: u64, m: &[u64], r: u64) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = rem(base, m, r);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &b, m, r);
            }
            b = mul_mod(&b, &b, m, r);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], r: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let t = rem(&a, &b, r);
            a = b;
            b = t;
        }
        a
    }

    fn sub(a: &[u64], b: &[u64], r: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + r - y) % r
            })
            .collect();
        trim(&mut out);
        out
    }

    /// `x^(r^i) mod f`.
    fn frob_x(i: u32, f: &[u64], r: u64) -> Vec<u64> {
        let mut x = rem(&[0, 1], f, r);
        for _ in 0..i {
            x = pow_mod(&x, r, f, r);
        }
        x
    }

    /// Rabin's test for a monic `f` of degree `k >= 1`.
    pub fn is_irreducible(f: &[u64], r: u64) -> bool {
        let k = (f.len() - 1) as u32;
        if k == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        let x = [0u64, 1];
        if sub(&frob_x(k, f, r), &x, r) != rem(&[], f, r) {
            return false;
        }
        crate::numtheory::prime_factors(k as u64).into_iter().all(|l| {
            let h = sub(&frob_x(k / l as u32, f, r), &x, r);
            gcd(f, &h, r).len() == 1
        })
    }
}
