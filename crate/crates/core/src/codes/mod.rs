//! Linear codes over finite fields.
//!
//! A [`LinearCode`] stores its generator matrix in reduced row-echelon form,
//! which makes equality of codes (as literal subspaces, not up to coordinate
//! permutation) a matrix comparison. Each coordinate carries a [`Label`] so
//! the extension coordinate `∞` can be followed through duals and
//! intersections.

mod enumerate;
pub mod linalg;
mod weights;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldDescriptor, FieldSpec};
use crate::poly::Polynomial;

pub use enumerate::{enumerate, CodewordRange, Codewords, DEFAULT_BUDGET};
pub use weights::{
    macwilliams_transform, shell, shells, weight, weight_distribution,
    weight_distribution_direct, WeightDistribution,
};

/// Coordinate label: a cyclic position or the extension point `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "LabelRepr", into = "LabelRepr")]
pub enum Label {
    Index(u32),
    Infinity,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Index(u32),
    Name(String),
}

impl From<Label> for LabelRepr {
    fn from(l: Label) -> Self {
        match l {
            Label::Index(i) => LabelRepr::Index(i),
            Label::Infinity => LabelRepr::Name("inf".into()),
        }
    }
}

impl TryFrom<LabelRepr> for Label {
    type Error = String;

    fn try_from(r: LabelRepr) -> std::result::Result<Self, Self::Error> {
        match r {
            LabelRepr::Index(i) => Ok(Label::Index(i)),
            LabelRepr::Name(s) if s == "inf" => Ok(Label::Infinity),
            LabelRepr::Name(s) => Err(format!("unknown coordinate label {s:?}")),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Index(i) => write!(f, "{i}"),
            Label::Infinity => write!(f, "∞"),
        }
    }
}

fn default_labels(n: usize) -> Vec<Label> {
    (0..n as u32).map(Label::Index).collect()
}

#[derive(Clone)]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    labels: Vec<Label>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.spec.same_field(&other.spec) && self.rows == other.rows
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over {:?}", self.n, self.dim(), self.spec)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// JSON form of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    /// Row-major element indices of the RREF generator matrix.
    pub genmat: Vec<Elem>,
    pub labels: Vec<Label>,
}

impl LinearCode {
    /// Span of `generators`, which may be dependent.
    pub fn from_generators(spec: &FieldSpec, n: usize, generators: Vec<Vec<Elem>>) -> Result<LinearCode> {
        Self::with_labels(spec, generators, default_labels(n))
    }

    pub fn with_labels(spec: &FieldSpec, mut rows: Vec<Vec<Elem>>, labels: Vec<Label>) -> Result<LinearCode> {
        let n = labels.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "generator of length {} for a code of length {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= spec.order()) {
                return Err(Error::Parse(format!("element index {bad} outside the field")));
            }
        }
        let pivots = linalg::rref(spec, &mut rows, n);
        Ok(LinearCode {
            spec: spec.clone(),
            n,
            rows,
            pivots,
            labels,
        })
    }

    pub fn zero_code(spec: &FieldSpec, n: usize) -> LinearCode {
        LinearCode {
            spec: spec.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
            labels: default_labels(n),
        }
    }

    pub fn full_space(spec: &FieldSpec, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        LinearCode {
            spec: spec.clone(),
            n,
            rows,
            pivots: (0..n).collect(),
            labels: default_labels(n),
        }
    }

    /// Span of the all-one vector.
    pub fn all_one_span(spec: &FieldSpec, n: usize) -> LinearCode {
        LinearCode::from_generators(spec, n, vec![vec![1; n]]).expect("well-formed")
    }

    /// The cyclic code generated by `g`, a divisor of `x^n - 1`.
    pub fn from_cyclic(g: &Polynomial, n: usize) -> Result<LinearCode> {
        let spec = g.spec();
        let modulus = Polynomial::x_pow_minus_one(spec, n);
        if g.is_zero() || !g.divides(&modulus)? {
            return Err(Error::NotDivisible(format!("{g:?} does not divide x^{n} - 1")));
        }
        let deg = g.degree().unwrap_or(0);
        let rows = (0..n - deg)
            .map(|shift| {
                let mut v = vec![0; n];
                v[shift..shift + g.coeffs().len()].copy_from_slice(g.coeffs());
                v
            })
            .collect();
        let code = LinearCode::from_generators(spec, n, rows)?;
        if !code.is_cyclic() {
            return Err(Error::Inconsistent("generated code is not cyclic".into()));
        }
        Ok(code)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_matrix(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Number of codewords, `q^k`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.spec.order() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if !self.spec.same_field(&other.spec) {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::Shape(format!(
                "codes of length {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Message-to-codeword map `m ↦ m G`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dim() {
            return Err(Error::Shape(format!(
                "message of length {} for dimension {}",
                message.len(),
                self.dim()
            )));
        }
        let f = &self.spec;
        let mut out = vec![0; self.n];
        for (&m, row) in message.iter().zip(&self.rows) {
            if m == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = &self.spec;
        let mut rest = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = rest[p];
            if c == 0 {
                continue;
            }
            let c = f.neg(c);
            for (x, &g) in rest.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, g));
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.rows.iter().all(|r| other.contains(r))
    }

    fn is_cyclic(&self) -> bool {
        self.rows.iter().all(|row| {
            let mut shifted = vec![0; self.n];
            for (i, &x) in row.iter().enumerate() {
                shifted[(i + 1) % self.n] = x;
            }
            self.contains(&shifted)
        })
    }

    /// Applies `v ↦ (v_{σ(0)}, …)` where `perm[i]` is the source position
    /// of output position `i`.
    pub fn permute(&self, perm: &[usize]) -> Result<LinearCode> {
        if perm.len() != self.n {
            return Err(Error::Shape("permutation length".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| perm.iter().map(|&s| row[s]).collect())
            .collect();
        let labels = perm.iter().map(|&s| self.labels[s]).collect();
        LinearCode::with_labels(&self.spec, rows, labels)
    }

    /// Appends the coordinate `∞` making every codeword's coordinate sum zero.
    pub fn extend(&self) -> LinearCode {
        let f = &self.spec;
        let rows: Vec<Vec<Elem>> = self
            .rows
            .iter()
            .map(|row| {
                let sum = row.iter().fold(0, |a, &x| f.add(a, x));
                let mut v = row.clone();
                v.push(f.neg(sum));
                v
            })
            .collect();
        let mut labels = self.labels.clone();
        labels.push(Label::Infinity);
        LinearCode {
            spec: f.clone(),
            n: self.n + 1,
            rows,
            pivots: self.pivots.clone(),
            labels,
        }
    }

    /// Deletes coordinate `pos`.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.n {
            return Err(Error::Shape(format!("no coordinate {pos}")));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut v = row.clone();
                v.remove(pos);
                v
            })
            .collect();
        let mut labels = self.labels.clone();
        labels.remove(pos);
        LinearCode::with_labels(&self.spec, rows, labels)
    }

    /// Multiplies coordinate `pos` of every codeword by `c` (nonzero).
    pub fn scale_coordinate(&self, pos: usize, c: Elem) -> Result<LinearCode> {
        if pos >= self.n {
            return Err(Error::Shape(format!("no coordinate {pos}")));
        }
        if c == 0 {
            return Err(Error::ZeroInverse);
        }
        let f = &self.spec;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut v = row.clone();
                v[pos] = f.mul(v[pos], c);
                v
            })
            .collect();
        LinearCode::with_labels(f, rows, self.labels.clone())
    }

    pub fn dual_euclidean(&self) -> LinearCode {
        let rows = linalg::nullspace(&self.spec, &self.rows, &self.pivots, self.n);
        LinearCode::with_labels(&self.spec, rows, self.labels.clone()).expect("well-formed")
    }

    /// Coordinate-wise conjugation `x ↦ x^sqrt(q)`.
    pub fn conjugate(&self) -> Result<LinearCode> {
        let f = &self.spec;
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| f.hermitian_conjugate(x)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        LinearCode::with_labels(f, rows, self.labels.clone())
    }

    /// Dual under `(x, y)_H = Σ x_i y_i^sqrt(q)`; needs a field of square order.
    pub fn dual_hermitian(&self) -> Result<LinearCode> {
        // y ⊥_H C  ⇔  conj(y) ⊥_E C
        self.dual_euclidean().conjugate()
    }

    pub fn hermitian_product(&self, x: &[Elem], y: &[Elem]) -> Result<Elem> {
        let f = &self.spec;
        x.iter().zip(y).try_fold(0, |acc, (&a, &b)| {
            Ok(f.add(acc, f.mul(a, f.hermitian_conjugate(b)?)))
        })
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        LinearCode::with_labels(&self.spec, rows, self.labels.clone())
    }

    /// `C ∩ D = (C^⊥ + D^⊥)^⊥`.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        if self.labels != other.labels {
            return Err(Error::Shape("coordinate labels differ".into()));
        }
        Ok(self.dual_euclidean().sum(&other.dual_euclidean())?.dual_euclidean())
    }

    pub fn is_even_like(&self) -> bool {
        let f = &self.spec;
        self.rows
            .iter()
            .all(|row| row.iter().fold(0, |a, &x| f.add(a, x)) == 0)
    }

    /// Subcode of codewords whose coordinates sum to zero.
    pub fn even_like_subcode(&self) -> LinearCode {
        let f = &self.spec;
        let sums: Vec<Elem> = self
            .rows
            .iter()
            .map(|row| row.iter().fold(0, |a, &x| f.add(a, x)))
            .collect();
        let Some(anchor) = sums.iter().position(|&s| s != 0) else {
            return self.clone();
        };
        let anchor_inv = f.inv(sums[anchor]).expect("nonzero");
        let rows = self
            .rows
            .iter()
            .zip(&sums)
            .enumerate()
            .filter(|&(i, _)| i != anchor)
            .map(|(_, (row, &s))| {
                let c = f.neg(f.mul(s, anchor_inv));
                row.iter()
                    .zip(&self.rows[anchor])
                    .map(|(&x, &a)| f.add(x, f.mul(c, a)))
                    .collect()
            })
            .collect();
        LinearCode::with_labels(f, rows, self.labels.clone()).expect("well-formed")
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            field: self.spec.descriptor(),
            n: self.n,
            k: self.dim(),
            genmat: self.rows.iter().flatten().copied().collect(),
            labels: self.labels.clone(),
        }
    }

    /// Rebuilds a code; the matrix must already be in canonical RREF form.
    pub fn from_descriptor(d: &CodeDescriptor) -> Result<LinearCode> {
        let spec = FieldSpec::from_descriptor(&d.field)?;
        if d.labels.len() != d.n || d.genmat.len() != d.n * d.k {
            return Err(Error::Parse("generator matrix shape does not match n, k".into()));
        }
        let rows: Vec<Vec<Elem>> = if d.n == 0 {
            Vec::new()
        } else {
            d.genmat.chunks(d.n).map(<[Elem]>::to_vec).collect()
        };
        let code = LinearCode::with_labels(&spec, rows.clone(), d.labels.clone())?;
        if code.rows != rows {
            return Err(Error::Parse(
                "generator matrix is not in reduced row-echelon form".into(),
            ));
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.descriptor()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<LinearCode> {
        let d: CodeDescriptor =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        LinearCode::from_descriptor(&d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::construct_field;

    fn hamming7() -> LinearCode {
        let f2 = construct_field(2, 1).unwrap();
        let g = Polynomial::new(&f2, vec![1, 1, 0, 1]).unwrap();
        LinearCode::from_cyclic(&g, 7).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        let f2 = construct_field(2, 1).unwrap();
        let parity = LinearCode::from_cyclic(&Polynomial::linear(&f2, 1), 3).unwrap();
        let words: Vec<Vec<Elem>> = enumerate(&parity, DEFAULT_BUDGET).unwrap().collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        let h = hamming7();
        assert_eq!(h.dim(), 4);
        let min = enumerate(&h, DEFAULT_BUDGET)
            .unwrap()
            .map(|w| weight(&w))
            .filter(|&w| w > 0)
            .min();
        assert_eq!(min, Some(3));
        let bad = Polynomial::new(&f2, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            LinearCode::from_cyclic(&bad, 7),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn extension() {
        let h = hamming7();
        let e = h.extend();
        assert_eq!((e.len(), e.dim()), (8, 4));
        assert_eq!(e.labels()[7], Label::Infinity);
        let dist = weight_distribution_direct(&e, DEFAULT_BUDGET, crate::Exec::Sequential).unwrap();
        assert_eq!(dist.counts, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        // even-like codes extend by an all-zero column
        let even = h.even_like_subcode();
        assert!(even.extend().generator_matrix().iter().all(|r| r[7] == 0));
        assert_eq!(e.puncture(7).unwrap(), h);
    }

    #[test]
    fn duals() {
        let e = hamming7().extend();
        assert_eq!(e.dual_euclidean(), e);
        let f3 = construct_field(3, 1).unwrap();
        let full = LinearCode::full_space(&f3, 4);
        assert_eq!(full.dual_euclidean(), LinearCode::zero_code(&f3, 4));
        let f4 = construct_field(2, 2).unwrap();
        let c = LinearCode::from_generators(&f4, 2, vec![vec![1, 1]]).unwrap();
        assert_eq!(c.dual_hermitian().unwrap(), c);
        let f8 = construct_field(2, 3).unwrap();
        let c8 = LinearCode::from_generators(&f8, 2, vec![vec![1, 1]]).unwrap();
        assert!(matches!(c8.dual_hermitian(), Err(Error::NotSquareOrder { .. })));
    }

    #[test]
    fn hermitian_dual_is_orthogonal() {
        let f9 = construct_field(3, 2).unwrap();
        let c = LinearCode::from_generators(&f9, 5, vec![vec![1, 2, 3, 4, 5], vec![0, 7, 1, 1, 8]]).unwrap();
        let d = c.dual_hermitian().unwrap();
        assert_eq!(d.dim(), 3);
        for x in c.generator_matrix() {
            for y in d.generator_matrix() {
                assert_eq!(c.hermitian_product(x, y).unwrap(), 0);
            }
        }
        assert_eq!(d.dual_hermitian().unwrap(), c);
    }

    #[test]
    fn intersections() {
        let h = hamming7();
        assert_eq!(h.intersect(&h).unwrap(), h);
        let z = LinearCode::zero_code(h.spec(), 7);
        assert_eq!(h.intersect(&z).unwrap(), z);
        let f3 = construct_field(3, 1).unwrap();
        assert!(h.intersect(&LinearCode::zero_code(&f3, 7)).is_err());
        assert!(h.intersect(&LinearCode::zero_code(h.spec(), 6)).is_err());
    }

    #[test]
    fn even_like() {
        let f2 = construct_field(2, 1).unwrap();
        let full = LinearCode::full_space(&f2, 3);
        let even = full.even_like_subcode();
        assert_eq!(even.dim(), 2);
        assert_eq!(
            even,
            LinearCode::from_cyclic(&Polynomial::linear(&f2, 1), 3).unwrap()
        );
        assert_eq!(even.even_like_subcode(), even);
    }

    #[test]
    fn json_round_trip() {
        let e = hamming7().extend();
        let json = e.to_json();
        let back = LinearCode::from_json(&json).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.labels(), e.labels());
        assert_eq!(back.to_json(), json);
        assert!(json.contains("\"inf\""));
        let broken = json.replace("\"k\":4", "\"k\":3");
        assert!(LinearCode::from_json(&broken).is_err());
    }
}
