//! Dense univariate polynomials over a [`FieldSpec`], minimal polynomials of
//! roots of unity, and the generator polynomials of quadratic residue codes.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{construct_field_large, Elem, Embedding, FieldSpec};
use crate::numtheory::{cyclotomic_cosets, is_quadratic_residue, multiplicative_order};

/// Coefficients ascending by degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn trim(v: &mut Vec<Elem>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Polynomial {
    pub fn new(spec: &FieldSpec, mut coeffs: Vec<Elem>) -> Result<Polynomial> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= spec.order()) {
            return Err(Error::Parse(format!("coefficient {bad} outside the field")));
        }
        trim(&mut coeffs);
        Ok(Polynomial {
            spec: spec.clone(),
            coeffs,
        })
    }

    pub fn zero(spec: &FieldSpec) -> Polynomial {
        Polynomial {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Polynomial {
        Polynomial {
            spec: spec.clone(),
            coeffs: vec![1],
        }
    }

    /// `x - root`.
    pub fn linear(spec: &FieldSpec, root: Elem) -> Polynomial {
        Polynomial {
            spec: spec.clone(),
            coeffs: vec![spec.neg(root), 1],
        }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(spec: &FieldSpec, n: usize) -> Polynomial {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = spec.neg(1);
        coeffs[n] = 1;
        if n == 0 {
            coeffs = Vec::new();
        }
        Polynomial {
            spec: spec.clone(),
            coeffs,
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let f = &self.spec;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs: Vec<Elem> = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        trim(&mut coeffs);
        Ok(Polynomial {
            spec: f.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|&c| self.spec.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        let mut coeffs: Vec<Elem> = self.coeffs.iter().map(|&a| self.spec.mul(a, c)).collect();
        trim(&mut coeffs);
        Polynomial {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial {
            spec: self.spec.clone(),
            coeffs: mul_raw(&self.spec, &self.coeffs, &other.coeffs),
        })
    }

    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(divisor)?;
        let f = &self.spec;
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = f.mul(rem[top], lead_inv);
            let shift = top - dd;
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d));
            }
            trim(&mut rem);
        }
        trim(&mut quot);
        Ok((
            Polynomial {
                spec: f.clone(),
                coeffs: quot,
            },
            Polynomial {
                spec: f.clone(),
                coeffs: rem,
            },
        ))
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.divmod(self)?.1.is_zero())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.spec.inv(self.leading()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.spec;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Polynomial {
        let f = &self.spec;
        let mut coeffs: Vec<Elem> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect();
        trim(&mut coeffs);
        Polynomial {
            spec: f.clone(),
            coeffs,
        }
    }
}

fn mul_raw(f: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Minimal polynomial over `emb.source()` of `beta` in `emb.target()`:
/// the product of `x - beta^(q^j)` over the distinct conjugates.
pub fn minimal_polynomial(beta: Elem, emb: &Embedding) -> Result<Polynomial> {
    let big = emb.target();
    let q = emb.source().order();
    let mut conjugates = vec![beta];
    loop {
        let next = big.pow(*conjugates.last().unwrap(), q);
        if next == beta {
            break;
        }
        conjugates.push(next);
    }
    let mut prod = vec![1];
    for &c in &conjugates {
        prod = mul_raw(big, &prod, &[big.neg(c), 1]);
    }
    let coeffs = prod
        .into_iter()
        .map(|c| {
            emb.project(c).map_err(|_| {
                Error::Inconsistent(format!(
                    "minimal polynomial coefficient {c} is not in the base field"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::new(emb.source(), coeffs)
}

/// The splitting of `x^p - 1` into residue and non-residue factors.
#[derive(Debug, Clone)]
pub struct QrGenerators {
    pub p: u64,
    /// `∏_{l ∈ QR(p)} (x - α^l)`.
    pub g1: Polynomial,
    /// `∏_{l ∈ NQR(p)} (x - α^l)`.
    pub g2: Polynomial,
    /// Degree `m` of the splitting field `F_{q^m}` over the base field.
    pub splitting_degree: u64,
    pub construction: Construction,
}

/// How the pair was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Minimal polynomials of `α^l` in the splitting field; `g1` collects
    /// the residue exponents for the deterministic `α`.
    SplittingField,
    /// Idempotents in `F_q[x]/(x^p - 1)` when the splitting field is too
    /// large to build; `g1` is the lexicographically smaller generator.
    Idempotent,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorDescriptor {
    pub p: u64,
    pub g1: Vec<Elem>,
    pub g2: Vec<Elem>,
    pub splitting_degree: u64,
    pub construction: Construction,
}

impl QrGenerators {
    pub fn descriptor(&self) -> GeneratorDescriptor {
        GeneratorDescriptor {
            p: self.p,
            g1: self.g1.coeffs.clone(),
            g2: self.g2.coeffs.clone(),
            splitting_degree: self.splitting_degree,
            construction: self.construction,
        }
    }
}

/// Generator polynomials of the QR code pair of length `p` over `q_spec`,
/// using the deterministic root of unity `α` of the splitting field, or the
/// idempotent construction when that field is out of reach.
pub fn qr_generator_polynomial(q_spec: &FieldSpec, p: u64) -> Result<QrGenerators> {
    match qr_generators_twisted(q_spec, p, 1) {
        Err(Error::FieldTooLarge { .. }) => qr_generators_idempotent(q_spec, p),
        other => other,
    }
}

/// Reduces `a` modulo `x^p - 1`.
fn cyclic_reduce(f: &FieldSpec, a: &[Elem], p: usize) -> Vec<Elem> {
    let mut out = vec![0; p];
    for (i, &c) in a.iter().enumerate() {
        out[i % p] = f.add(out[i % p], c);
    }
    out
}

/// The QR pair from the primitive idempotents of the 3-dimensional algebra
/// spanned by `1`, `Σ_{l ∈ QR} x^l` and `Σ_{l ∈ NQR} x^l` modulo `x^p - 1`.
///
/// `E0 = J/p` is the idempotent of the repetition code. On the complement
/// `1 - E0`, `y = (1 - E0) Q(x)` satisfies `y^2 + y + c(1 - E0) = 0`; the two
/// roots `η0, η1` of `z^2 + z + c` in `F_q` give idempotents
/// `F_a = (y - η_b (1 - E0)) / (η_a - η_b)`, and the odd-like codes are
/// generated by `gcd(E0 + F_a, x^p - 1)`.
pub fn qr_generators_idempotent(q_spec: &FieldSpec, p: u64) -> Result<QrGenerators> {
    let f = q_spec;
    let q = f.order();
    if q.is_multiple_of(p) || !is_quadratic_residue((q % p) as i64, p)? {
        return Err(Error::NotQuadraticResidue { q, p });
    }
    let m = multiplicative_order(q % p, p)?;
    let n = p as usize;
    let p_inv = f.inv(f.from_int((p % f.characteristic()) as i64))?;
    let e0 = vec![p_inv; n];
    let mut one_minus_e0: Vec<Elem> = e0.iter().map(|&x| f.neg(x)).collect();
    one_minus_e0[0] = f.add(one_minus_e0[0], 1);
    let half = f.from_int(((p - 1) / 2 % f.characteristic()) as i64);
    let shift = f.mul(half, p_inv);
    let y: Vec<Elem> = (0..n)
        .map(|i| {
            let qi = if i > 0 && is_quadratic_residue(i as i64, p).unwrap_or(false) { 1 } else { 0 };
            f.sub(qi, shift)
        })
        .collect();
    let y2 = cyclic_reduce(f, &mul_raw(f, &y, &y), n);
    let y2_plus_y: Vec<Elem> = y2.iter().zip(&y).map(|(&a, &b)| f.add(a, b)).collect();
    // y^2 + y = -c (1 - E0); coordinate 1 of 1 - E0 is -1/p ≠ 0
    let c = f.neg(f.div(y2_plus_y[1], one_minus_e0[1])?);
    let check: Vec<Elem> = one_minus_e0.iter().map(|&x| f.neg(f.mul(c, x))).collect();
    if check != y2_plus_y {
        return Err(Error::Inconsistent("Gauss period relation fails".into()));
    }
    let roots: Vec<Elem> = (0..q)
        .filter(|&z| f.add(f.add(f.mul(z, z), z), c) == 0)
        .collect();
    let [eta0, eta1] = roots[..] else {
        return Err(Error::Inconsistent(format!(
            "expected two Gauss periods, found {}",
            roots.len()
        )));
    };
    let idempotent = |a: Elem, b: Elem| -> Result<Vec<Elem>> {
        let inv = f.inv(f.sub(a, b))?;
        Ok((0..n)
            .map(|i| {
                let fa = f.mul(f.sub(y[i], f.mul(b, one_minus_e0[i])), inv);
                f.add(e0[i], fa)
            })
            .collect())
    };
    let modulus = Polynomial::x_pow_minus_one(f, n);
    let mut gens = Vec::new();
    for (a, b) in [(eta0, eta1), (eta1, eta0)] {
        let e = idempotent(a, b)?;
        if cyclic_reduce(f, &mul_raw(f, &e, &e), n) != e {
            return Err(Error::Inconsistent("idempotent is not idempotent".into()));
        }
        let g = Polynomial::new(f, e)?.gcd(&modulus)?;
        if g.degree() != Some((n - 1) / 2) {
            return Err(Error::Inconsistent("idempotent generator has wrong degree".into()));
        }
        gens.push(g);
    }
    gens.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    let g2 = gens.pop().expect("two generators");
    let g1 = gens.pop().expect("two generators");
    let product = Polynomial::linear(f, 1).mul(&g1)?.mul(&g2)?;
    if product != modulus {
        return Err(Error::Inconsistent(
            "(x - 1) g1 g2 differs from x^p - 1".into(),
        ));
    }
    Ok(QrGenerators {
        p,
        g1,
        g2,
        splitting_degree: m,
        construction: Construction::Idempotent,
    })
}

/// As [`qr_generator_polynomial`] with `α` replaced by `α^twist`.
pub fn qr_generators_twisted(q_spec: &FieldSpec, p: u64, twist: u64) -> Result<QrGenerators> {
    let q = q_spec.order();
    if q.is_multiple_of(p) {
        return Err(Error::NotQuadraticResidue { q, p });
    }
    if !is_quadratic_residue((q % p) as i64, p)? {
        return Err(Error::NotQuadraticResidue { q, p });
    }
    let m = multiplicative_order(q % p, p)?;
    let big_degree = u32::try_from(m * q_spec.degree() as u64)
        .map_err(|_| Error::FieldTooLarge {
            r: q_spec.characteristic(),
            k: u32::MAX,
            limit: crate::gf::MAX_ORDER,
        })?;
    let big = construct_field_large(q_spec.characteristic(), big_degree)?;
    let emb = Embedding::new(q_spec, &big)?;
    let alpha = big.pow(big.primitive_root_of_unity(p)?, twist);
    if big.pow(alpha, p) != 1 || alpha == 1 {
        return Err(Error::Precondition(format!(
            "α^{twist} is not a primitive {p}-th root of unity"
        )));
    }
    let cosets = cyclotomic_cosets(q % p, p)?;
    let mut g1 = Polynomial::one(q_spec);
    let mut g2 = Polynomial::one(q_spec);
    for coset in &cosets.cosets[1..] {
        let rep = coset[0];
        let factor = minimal_polynomial(big.pow(alpha, rep), &emb)?;
        if factor.degree() != Some(coset.len()) {
            return Err(Error::Inconsistent(format!(
                "minimal polynomial degree differs from coset size {}",
                coset.len()
            )));
        }
        if is_quadratic_residue(rep as i64, p)? {
            g1 = g1.mul(&factor)?;
        } else {
            g2 = g2.mul(&factor)?;
        }
    }
    let product = Polynomial::linear(q_spec, 1).mul(&g1)?.mul(&g2)?;
    if product != Polynomial::x_pow_minus_one(q_spec, p as usize) {
        return Err(Error::Inconsistent(
            "(x - 1) g1 g2 differs from x^p - 1".into(),
        ));
    }
    Ok(QrGenerators {
        p,
        g1,
        g2,
        splitting_degree: m,
        construction: Construction::SplittingField,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::construct_field;
    use crate::numtheory::quadratic_nonresidues;

    fn poly(spec: &FieldSpec, c: &[Elem]) -> Polynomial {
        Polynomial::new(spec, c.to_vec()).unwrap()
    }

    #[test]
    fn ring_examples() {
        let f2 = construct_field(2, 1).unwrap();
        let x1 = poly(&f2, &[1, 1]);
        assert_eq!(x1.mul(&x1).unwrap(), poly(&f2, &[1, 0, 1]));

        let f3 = construct_field(3, 1).unwrap();
        let a = poly(&f3, &[2, 0, 1]); // x^2 - 1
        let b = poly(&f3, &[2, 1]); // x - 1
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert_eq!(b.scale(2).gcd(&a).unwrap(), b);

        let x7 = Polynomial::x_pow_minus_one(&f2, 7);
        let h = poly(&f2, &[1, 1, 0, 1]);
        let (q, r) = x7.divmod(&h).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&h).unwrap(), x7);
        assert_eq!(x7.divmod(&Polynomial::zero(&f2)).unwrap_err(), Error::ZeroDivisor);
    }

    #[test]
    fn divmod_reconstructs() {
        let f9 = construct_field(3, 2).unwrap();
        let a = poly(&f9, &[3, 7, 0, 5, 8, 1, 2]);
        let b = poly(&f9, &[4, 0, 6]);
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert_eq!(a.eval(0), 3);
    }

    #[test]
    fn mixed_fields_rejected() {
        let f2 = construct_field(2, 1).unwrap();
        let f4 = construct_field(2, 2).unwrap();
        assert_eq!(
            poly(&f2, &[1]).add(&poly(&f4, &[1])).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f2 = construct_field(2, 1).unwrap();
        let f8 = construct_field(2, 3).unwrap();
        let emb = Embedding::new(&f2, &f8).unwrap();
        assert_eq!(minimal_polynomial(1, &emb).unwrap(), poly(&f2, &[1, 1]));
        let g = f8.primitive_element();
        let m = minimal_polynomial(g, &emb).unwrap();
        assert!(m == poly(&f2, &[1, 1, 0, 1]) || m == poly(&f2, &[1, 0, 1, 1]));

        // degree equals the coset size of the discrete log
        let f4 = construct_field(2, 2).unwrap();
        let f4096 = construct_field(2, 12).unwrap();
        let emb = Embedding::new(&f4, &f4096).unwrap();
        let prim = f4096.primitive_element();
        for e in [1u64, 3, 5, 13, 63, 315, 1365] {
            let beta = f4096.pow(prim, e);
            let mut orbit = vec![e];
            let mut x = e * 4 % 4095;
            while x != e {
                orbit.push(x);
                x = x * 4 % 4095;
            }
            let m = minimal_polynomial(beta, &emb).unwrap();
            assert_eq!(m.degree(), Some(orbit.len()));
            // divides x^(4^6 - 1) - 1, squarefree
            let big = Polynomial::x_pow_minus_one(&f4, 4095);
            assert!(m.divides(&big).unwrap());
            assert_eq!(m.gcd(&m.derivative()).unwrap(), Polynomial::one(&f4));
        }
    }

    /// Irreducible iff no monic factor of degree `1..=deg/2` over a tiny field.
    fn irreducible_by_trial(m: &Polynomial) -> bool {
        let f = m.spec();
        let d = m.degree().unwrap();
        for deg in 1..=d / 2 {
            for low in 0..f.order().pow(deg as u32) {
                let mut c = Vec::new();
                let mut x = low;
                for _ in 0..deg {
                    c.push(x % f.order());
                    x /= f.order();
                }
                c.push(1);
                if poly(f, &c).divides(m).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn minimal_polynomials_are_irreducible() {
        let f3 = construct_field(3, 1).unwrap();
        let f81 = construct_field(3, 4).unwrap();
        let emb = Embedding::new(&f3, &f81).unwrap();
        for beta in 1..81 {
            let m = minimal_polynomial(beta, &emb).unwrap();
            assert!(irreducible_by_trial(&m));
            assert_eq!(m.eval(emb.embed(0)), m.eval(0));
        }
    }

    #[test]
    fn qr_generator_examples() {
        let f2 = construct_field(2, 1).unwrap();
        let g = qr_generator_polynomial(&f2, 7).unwrap();
        let a = poly(&f2, &[1, 1, 0, 1]);
        let b = poly(&f2, &[1, 0, 1, 1]);
        assert!((g.g1 == a && g.g2 == b) || (g.g1 == b && g.g2 == a));

        let f4 = construct_field(2, 2).unwrap();
        let g = qr_generator_polynomial(&f4, 13).unwrap();
        assert_eq!(g.g1.degree(), Some(6));
        assert_eq!(g.splitting_degree, 6);
        assert!(g.g1.divides(&Polynomial::x_pow_minus_one(&f4, 13)).unwrap());

        let f3 = construct_field(3, 1).unwrap();
        assert!(matches!(
            qr_generator_polynomial(&f3, 7),
            Err(Error::NotQuadraticResidue { .. })
        ));
    }

    #[test]
    fn generator_pair_invariants() {
        for (r, k, p) in [
            (2u64, 1u32, 7u64),
            (2, 1, 17),
            (2, 1, 23),
            (2, 1, 41),
            (3, 1, 11),
            (3, 1, 13),
            (2, 2, 5),
            (2, 2, 13),
            (2, 2, 29),
            (3, 2, 5),
            (3, 2, 7),
            (5, 2, 13),
            (5, 2, 17),
        ] {
            let f = construct_field(r, k).unwrap();
            let g = qr_generator_polynomial(&f, p).unwrap();
            let half = ((p - 1) / 2) as usize;
            assert_eq!(g.g1.degree(), Some(half), "q={} p={p}", f.order());
            assert_eq!(g.g2.degree(), Some(half));
            let n = quadratic_nonresidues(p).unwrap()[0];
            let t = qr_generators_twisted(&f, p, n).unwrap();
            assert_eq!(t.g1, g.g2);
            assert_eq!(t.g2, g.g1);
        }
    }

    #[test]
    fn large_splitting_field_fallback() {
        // F_4, p = 29: splitting field F_{4^14} = F_{2^28} is untabled
        let f4 = construct_field(2, 2).unwrap();
        let g = qr_generator_polynomial(&f4, 29).unwrap();
        assert_eq!(g.splitting_degree, 14);
        assert_eq!(g.g1.degree(), Some(14));
    }

    #[test]
    fn idempotent_route_agrees_with_splitting_field() {
        for (r, k, p) in [(2, 1, 7), (2, 1, 17), (2, 2, 13), (3, 2, 5), (3, 1, 13), (5, 2, 13), (2, 2, 29)] {
            let f = construct_field(r, k).unwrap();
            let a = qr_generators_twisted(&f, p, 1).unwrap();
            let b = qr_generators_idempotent(&f, p).unwrap();
            assert_eq!(b.construction, Construction::Idempotent);
            let mut x = vec![a.g1.coeffs.clone(), a.g2.coeffs.clone()];
            let mut y = vec![b.g1.coeffs.clone(), b.g2.coeffs.clone()];
            x.sort();
            y.sort();
            assert_eq!(x, y, "q = {}, p = {p}", f.order());
        }
    }

    #[test]
    fn idempotent_route_covers_huge_splitting_fields() {
        // ord_101(4) = 50, so the splitting field would be F_{2^100}
        let f4 = construct_field(2, 2).unwrap();
        let g = qr_generator_polynomial(&f4, 101).unwrap();
        assert_eq!(g.construction, Construction::Idempotent);
        assert_eq!(g.splitting_degree, 50);
        assert_eq!(g.g1.degree(), Some(50));
    }
}
