//! Extended quadratic residue code pairs and the claims made about them:
//! the Hermitian and Euclidean hull cases, duadic duality of the extended
//! codes, and the 3-design property of the shells.
//!
//! Throughout, `D1` is the odd-like code generated by the residue factor
//! `g1 = ∏_{l ∈ QR(p)} (x - α^l)` for the deterministic root of unity `α`
//! chosen by [`crate::poly::qr_generator_polynomial`]; `E1` (its extension)
//! is "the" extended QR code. `D2`/`E2` come from the non-residue factor.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::codes::{CodeDescriptor, CodewordRange, LinearCode};
use crate::designs::{derived_lambdas, BlockMultiset, DesignReport, SubsetCounter};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{construct_field, Elem, FieldSpec};
use crate::numtheory::{is_prime, is_quadratic_residue, require_odd_prime, theorem_conditions};
use crate::poly::{qr_generator_polynomial, GeneratorDescriptor, QrGenerators};

/// A pair of QR codes of length `p` over `F_q`, `q = r^exponent`, together
/// with their even-like subcodes and extensions.
#[derive(Debug, Clone)]
pub struct QrPair {
    pub r: u64,
    pub exponent: u32,
    pub p: u64,
    pub field: FieldSpec,
    pub generators: QrGenerators,
    pub d1: LinearCode,
    pub d2: LinearCode,
    pub c1: LinearCode,
    pub c2: LinearCode,
    pub e1: LinearCode,
    pub e2: LinearCode,
}

#[derive(Debug, Clone, Serialize)]
pub struct QrPairDescriptor {
    pub r: u64,
    pub exponent: u32,
    pub q: u64,
    pub p: u64,
    pub generators: GeneratorDescriptor,
    pub d1: CodeDescriptor,
    pub d2: CodeDescriptor,
    pub c1: CodeDescriptor,
    pub c2: CodeDescriptor,
    pub e1: CodeDescriptor,
    pub e2: CodeDescriptor,
}

fn check_primes(r: u64, p: u64) -> Result<()> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    require_odd_prime(p)?;
    if r == p {
        return Err(Error::SamePrime(r));
    }
    Ok(())
}

fn invariant(holds: bool, what: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!("QR pair invariant violated: {what}")))
    }
}

/// The pair over `F_{r^2}` (the Hermitian setting).
pub fn build_qr_pair(r: u64, p: u64) -> Result<QrPair> {
    build_qr_pair_general(r, 2, p)
}

/// The pair over `F_{r^exponent}`; `r^exponent` must be a residue mod `p`.
pub fn build_qr_pair_general(r: u64, exponent: u32, p: u64) -> Result<QrPair> {
    check_primes(r, p)?;
    if exponent == 0 {
        return Err(Error::Precondition("field exponent must be positive".into()));
    }
    let field = construct_field(r, exponent)?;
    let generators = qr_generator_polynomial(&field, p)?;
    let n = p as usize;
    let d1 = LinearCode::from_cyclic(&generators.g1, n)?;
    let d2 = LinearCode::from_cyclic(&generators.g2, n)?;
    let c1 = d1.even_like_subcode();
    let c2 = d2.even_like_subcode();
    let half = (n - 1) / 2;
    invariant(d1.dim() == half + 1 && d2.dim() == half + 1, "dim D_i = (p+1)/2")?;
    invariant(c1.dim() == half && c2.dim() == half, "dim C_i = (p-1)/2")?;
    invariant(c1.intersect(&c2)?.dim() == 0, "C1 ∩ C2 = {0}")?;
    let ones = LinearCode::all_one_span(&field, n);
    invariant(c1.sum(&ones)? == d1, "D1 = C1 + <1>")?;
    invariant(c2.sum(&ones)? == d2, "D2 = C2 + <1>")?;
    let e1 = d1.extend();
    let e2 = d2.extend();
    Ok(QrPair {
        r,
        exponent,
        p,
        field,
        generators,
        d1,
        d2,
        c1,
        c2,
        e1,
        e2,
    })
}

impl QrPair {
    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn descriptor(&self) -> QrPairDescriptor {
        QrPairDescriptor {
            r: self.r,
            exponent: self.exponent,
            q: self.q(),
            p: self.p,
            generators: self.generators.descriptor(),
            d1: self.d1.descriptor(),
            d2: self.d2.descriptor(),
            c1: self.c1.descriptor(),
            c2: self.c2.descriptor(),
            e1: self.e1.descriptor(),
            e2: self.e2.descriptor(),
        }
    }

    fn dual(&self, code: &LinearCode, regime: Regime) -> Result<LinearCode> {
        match regime {
            Regime::Hermitian => code.dual_hermitian(),
            Regime::Euclidean => Ok(code.dual_euclidean()),
        }
    }

    fn require_hermitian(&self) -> Result<()> {
        if self.exponent != 2 {
            return Err(Error::NotSquareOrder {
                r: self.r,
                k: self.exponent,
            });
        }
        Ok(())
    }

    /// The scalar `-1/p` of the last entry of `M = diag(1, …, 1, -1/p)`.
    pub fn m_entry(&self) -> Elem {
        let f = &self.field;
        let p_mod = f.from_int((self.p % self.r) as i64);
        f.neg(f.inv(p_mod).expect("p is not divisible by r"))
    }

    /// `code · M`.
    pub fn apply_m(&self, code: &LinearCode) -> Result<LinearCode> {
        code.scale_coordinate(code.len() - 1, self.m_entry())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Hermitian,
    Euclidean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "(i)")]
    I,
    #[serde(rename = "(ii)")]
    Ii,
    #[serde(rename = "(iii)")]
    Iii,
    #[serde(rename = "(iv)")]
    Iv,
    #[serde(rename = "(v)")]
    V,
    #[serde(rename = "(vi)")]
    Vi,
    #[serde(rename = "(vii)")]
    Vii,
    #[serde(rename = "(viii)")]
    Viii,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::I => "(i)",
            CaseLabel::Ii => "(ii)",
            CaseLabel::Iii => "(iii)",
            CaseLabel::Iv => "(iv)",
            CaseLabel::V => "(v)",
            CaseLabel::Vi => "(vi)",
            CaseLabel::Vii => "(vii)",
            CaseLabel::Viii => "(viii)",
        };
        f.write_str(s)
    }
}

/// What the hull `E ∩ E^⊥` is predicted to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictedCode {
    Zero,
    AllOneSpan,
    /// The extension of the dual of the unextended odd-like code.
    ExtendedEvenLikeDual,
    SelfDual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionCase {
    pub regime: Regime,
    pub r: u64,
    pub q: u64,
    pub p: u64,
    pub label: CaseLabel,
    /// Whether `-r` (Hermitian) or `-1` (Euclidean) is a residue mod `p`.
    pub twist_is_residue: bool,
    /// Whether `p ≡ -1 (mod r)`.
    pub p_is_minus_one: bool,
    pub predicted_dim: usize,
    pub predicted: PredictedCode,
}

fn make_case(regime: Regime, r: u64, q: u64, p: u64, residue: bool) -> IntersectionCase {
    let minus_one = (p + 1).is_multiple_of(r);
    let half = (p as usize - 1) / 2;
    let (offset, predicted, predicted_dim) = match (residue, minus_one) {
        (true, false) => (0, PredictedCode::Zero, 0),
        (true, true) => (1, PredictedCode::AllOneSpan, 1),
        (false, false) => (2, PredictedCode::ExtendedEvenLikeDual, half),
        (false, true) => (3, PredictedCode::SelfDual, half + 1),
    };
    use CaseLabel::*;
    let labels = match regime {
        Regime::Hermitian => [I, Ii, Iii, Iv],
        Regime::Euclidean => [V, Vi, Vii, Viii],
    };
    IntersectionCase {
        regime,
        r,
        q,
        p,
        label: labels[offset],
        twist_is_residue: residue,
        p_is_minus_one: minus_one,
        predicted_dim,
        predicted,
    }
}

/// Hull of the extended QR code over `F_{r^2}` under the Hermitian form.
pub fn classify_hermitian(r: u64, p: u64) -> Result<IntersectionCase> {
    check_primes(r, p)?;
    let residue = is_quadratic_residue(-(r as i64), p)?;
    Ok(make_case(Regime::Hermitian, r, r * r, p, residue))
}

/// Hull of the extended QR code over `F_{r^exponent}` under the Euclidean form.
pub fn classify_euclidean(r: u64, exponent: u32, p: u64) -> Result<IntersectionCase> {
    check_primes(r, p)?;
    let q = r
        .checked_pow(exponent)
        .ok_or(Error::FieldTooLarge {
            r,
            k: exponent,
            limit: crate::gf::MAX_ORDER,
        })?;
    if !is_quadratic_residue((q % p) as i64, p)? {
        return Err(Error::NotQuadraticResidue { q, p });
    }
    let residue = is_quadratic_residue(-1, p)?;
    Ok(make_case(Regime::Euclidean, r, q, p, residue))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullCheck {
    /// `"E1"` or `"E2"`.
    pub code: &'static str,
    pub dim: usize,
    pub matches_prediction: bool,
    /// Generator matrices of the hull and of the predicted code on mismatch.
    pub mismatch: Option<(CodeDescriptor, CodeDescriptor)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub r: u64,
    pub p: u64,
    pub q: u64,
    pub case: CaseLabel,
    pub predicted: IntersectionCase,
    pub computed: Vec<HullCheck>,
    pub pass: bool,
    pub per_shell: Vec<ShellEntry>,
}

/// Computes `E ∩ E^⊥` for both extended codes and compares with `case`.
pub fn verify_intersection(pair: &QrPair, case: &IntersectionCase) -> Result<IntersectionReport> {
    if (case.r, case.p, case.q) != (pair.r, pair.p, pair.q()) {
        return Err(Error::Precondition(format!(
            "case for (r, q, p) = ({}, {}, {}) applied to pair ({}, {}, {})",
            case.r,
            case.q,
            case.p,
            pair.r,
            pair.q(),
            pair.p
        )));
    }
    if case.regime == Regime::Hermitian {
        pair.require_hermitian()?;
    }
    let mut computed = Vec::new();
    for (name, d, e) in [("E1", &pair.d1, &pair.e1), ("E2", &pair.d2, &pair.e2)] {
        let hull = e.intersect(&pair.dual(e, case.regime)?)?;
        let expected = match case.predicted {
            PredictedCode::Zero => LinearCode::zero_code(&pair.field, e.len()),
            PredictedCode::AllOneSpan => LinearCode::all_one_span(&pair.field, e.len()),
            PredictedCode::ExtendedEvenLikeDual => pair.dual(d, case.regime)?.extend(),
            PredictedCode::SelfDual => e.clone(),
        };
        let matches = hull.dim() == case.predicted_dim && hull == expected;
        computed.push(HullCheck {
            code: name,
            dim: hull.dim(),
            matches_prediction: matches,
            mismatch: (!matches).then(|| (hull.descriptor(), expected.descriptor())),
        });
    }
    Ok(IntersectionReport {
        r: pair.r,
        p: pair.p,
        q: pair.q(),
        case: case.label,
        predicted: case.clone(),
        pass: computed.iter().all(|c| c.matches_prediction),
        computed,
        per_shell: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityCheck {
    pub claim: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub r: u64,
    pub p: u64,
    pub q: u64,
    /// `"part (1)"` when `-r` is a residue (cross duality), else `"part (2)"`.
    pub case: String,
    /// Field index of the last diagonal entry `-1/p` of `M`.
    pub m_entry: Elem,
    pub predicted: Vec<String>,
    pub computed: Vec<DualityCheck>,
    pub pass: bool,
    pub per_shell: Vec<ShellEntry>,
}

/// Checks `E1^⊥H = E2·M`, `E2^⊥H = E1·M` when `-r ∈ Q`, otherwise
/// `E_i^⊥H = E_i·M`, with `M = diag(1, …, 1, -1/p)`.
pub fn verify_duadic_duality(pair: &QrPair) -> Result<DualityReport> {
    pair.require_hermitian()?;
    let cross = is_quadratic_residue(-(pair.r as i64), pair.p)?;
    let claims: Vec<(String, &LinearCode, &LinearCode)> = if cross {
        vec![
            ("E1^⊥H = E2·M".into(), &pair.e1, &pair.e2),
            ("E2^⊥H = E1·M".into(), &pair.e2, &pair.e1),
        ]
    } else {
        vec![
            ("E1^⊥H = E1·M".into(), &pair.e1, &pair.e1),
            ("E2^⊥H = E2·M".into(), &pair.e2, &pair.e2),
        ]
    };
    let mut computed = Vec::new();
    for (claim, lhs, rhs) in &claims {
        let holds = lhs.dual_hermitian()? == pair.apply_m(rhs)?;
        computed.push(DualityCheck {
            claim: claim.clone(),
            holds,
        });
    }
    Ok(DualityReport {
        r: pair.r,
        p: pair.p,
        q: pair.q(),
        case: if cross { "part (1)" } else { "part (2)" }.into(),
        m_entry: pair.m_entry(),
        predicted: claims.into_iter().map(|(c, _, _)| c).collect(),
        pass: computed.iter().all(|c| c.holds),
        computed,
        per_shell: Vec::new(),
    })
}

/// Whether the weight-`ell` shells of `E1` and `E1^⊥H` have the same
/// supports with multiplicity.
pub fn shells_support_equality(pair: &QrPair, ell: usize, budget: u64) -> Result<bool> {
    if !theorem_conditions(pair.r, pair.p)? {
        return Err(Error::Precondition(format!(
            "theorem conditions fail for r = {}, p = {}",
            pair.r, pair.p
        )));
    }
    pair.require_hermitian()?;
    let dual = pair.e1.dual_hermitian()?;
    Ok(crate::codes::shell(&pair.e1, ell, budget)? == crate::codes::shell(&dual, ell, budget)?)
}

/// One shell of a survey.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellSurvey {
    pub weight: usize,
    pub count: u64,
    pub report: DesignReport,
}

struct WeightAccumulator {
    count: u64,
    counters: Vec<SubsetCounter>,
    /// Smallest support seen among blocks shorter than the largest strength.
    short_block: Option<Vec<usize>>,
}

struct SurveyAcc {
    n: usize,
    strengths: Vec<usize>,
    by_weight: BTreeMap<usize, WeightAccumulator>,
    scratch: Vec<usize>,
}

impl SurveyAcc {
    fn new(n: usize, strengths: &[usize]) -> SurveyAcc {
        SurveyAcc {
            n,
            strengths: strengths.to_vec(),
            by_weight: BTreeMap::new(),
            scratch: Vec::with_capacity(n),
        }
    }

    fn add(&mut self, word: &[Elem]) {
        self.scratch.clear();
        self.scratch
            .extend(word.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i));
        let ell = self.scratch.len();
        if ell == 0 {
            return;
        }
        let (n, strengths) = (self.n, &self.strengths);
        let acc = self.by_weight.entry(ell).or_insert_with(|| WeightAccumulator {
            count: 0,
            counters: strengths.iter().map(|&t| SubsetCounter::new(n, t)).collect(),
            short_block: None,
        });
        acc.count += 1;
        for c in &mut acc.counters {
            c.add_block(&self.scratch, 1);
        }
        let t_max = strengths.iter().copied().max().unwrap_or(0);
        if ell < t_max && acc.short_block.as_deref().is_none_or(|b| *self.scratch < *b) {
            acc.short_block = Some(self.scratch.clone());
        }
    }

    fn merge(mut self, other: SurveyAcc) -> SurveyAcc {
        for (ell, b) in other.by_weight {
            match self.by_weight.get_mut(&ell) {
                None => {
                    self.by_weight.insert(ell, b);
                }
                Some(a) => {
                    a.count += b.count;
                    for (x, y) in a.counters.iter_mut().zip(&b.counters) {
                        x.merge(y);
                    }
                    a.short_block = match (a.short_block.take(), b.short_block) {
                        (Some(x), Some(y)) => Some(x.min(y)),
                        (x, y) => x.or(y),
                    };
                }
            }
        }
        self
    }
}

/// Streams every codeword once and returns, for each strength in
/// `strengths` and each non-empty shell of nonzero weight, the design report.
fn survey_strengths(
    code: &LinearCode,
    strengths: &[usize],
    budget: u64,
    exec: Exec,
) -> Result<BTreeMap<usize, (u64, Vec<DesignReport>)>> {
    let n = code.len();
    if let Some(&t) = strengths.iter().find(|&&t| t == 0 || t > n) {
        return Err(Error::StrengthTooLarge { t, v: n });
    }
    let range = CodewordRange::new(code, budget)?;
    let acc = range.fold(
        exec,
        || SurveyAcc::new(n, strengths),
        |acc, w| acc.add(w),
        SurveyAcc::merge,
    );
    Ok(acc
        .by_weight
        .into_iter()
        .map(|(ell, a)| {
            let reports = strengths
                .iter()
                .zip(&a.counters)
                .map(|(&t, c)| {
                    let short = a.short_block.clone().filter(|b| b.len() < t);
                    DesignReport::from_counter(c, a.count, Some(ell), short)
                })
                .collect();
            (ell, (a.count, reports))
        })
        .collect())
}

/// Design reports for every non-empty shell of nonzero weight.
pub fn survey_shells(code: &LinearCode, t: usize, budget: u64, exec: Exec) -> Result<Vec<ShellSurvey>> {
    Ok(survey_strengths(code, &[t], budget, exec)?
        .into_iter()
        .map(|(weight, (count, mut reports))| ShellSurvey {
            weight,
            count,
            report: reports.remove(0),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellEntry {
    pub weight: usize,
    pub count: u64,
    pub lambda3: Option<u64>,
    pub lambda2: Option<u64>,
    pub lambda1: Option<u64>,
    pub is_design: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    Pass,
    Fail,
    /// The hypotheses do not hold; nothing was claimed.
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub r: u64,
    pub p: u64,
    pub q: u64,
    pub case: TheoremStatus,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
    pub per_shell: Vec<ShellEntry>,
}

/// Verifies that every non-empty shell of nonzero weight of the extended QR
/// code over `F_{r^2}` of length `p + 1` is a 3-design.
pub fn verify_main_theorem(r: u64, p: u64, budget: u64, exec: Exec) -> Result<TheoremReport> {
    check_primes(r, p)?;
    let q = r * r;
    let predicted = "every non-empty shell is a 3-design".to_string();
    if !theorem_conditions(r, p)? {
        let why = if p % 4 != 1 {
            format!("p = {p} is not 1 mod 4")
        } else {
            format!("r = {r} is a quadratic residue mod {p}")
        };
        return Ok(TheoremReport {
            r,
            p,
            q,
            case: TheoremStatus::Inapplicable,
            predicted,
            computed: format!("inapplicable: {why}"),
            pass: false,
            per_shell: Vec::new(),
        });
    }
    // |E1| = q^((p+1)/2) = r^(p+1); refuse before building anything.
    let size = (r as u128).checked_pow((p + 1) as u32);
    if size.is_none_or(|s| s > budget as u128) {
        return Err(Error::BudgetExceeded {
            required: size.map_or_else(|| format!("{r}^{}", p + 1), |s| s.to_string()),
            budget,
        });
    }
    let pair = build_qr_pair(r, p)?;
    let n = pair.e1.len();
    let shells = survey_strengths(&pair.e1, &[3, 2, 1], budget, exec)?;
    let mut per_shell = Vec::new();
    for (weight, (count, reports)) in shells {
        let [r3, r2, r1] = <[DesignReport; 3]>::try_from(reports).expect("three strengths");
        if r3.is_design {
            // λ2, λ1 are counted independently and must match the chain.
            let chain = derived_lambdas(&r3, n, weight)?;
            if r2.lambda != Some(chain[2].1) || r1.lambda != Some(chain[1].1) {
                return Err(Error::Inconsistent(format!(
                    "counted λ2/λ1 disagree with the λ3 chain at weight {weight}"
                )));
            }
        }
        per_shell.push(ShellEntry {
            weight,
            count,
            lambda3: r3.lambda,
            lambda2: r2.lambda,
            lambda1: r1.lambda,
            is_design: r3.is_design,
        });
    }
    let designs = per_shell.iter().filter(|s| s.is_design).count();
    let pass = designs == per_shell.len();
    Ok(TheoremReport {
        r,
        p,
        q,
        case: if pass {
            TheoremStatus::Pass
        } else {
            TheoremStatus::Fail
        },
        predicted,
        computed: format!("{designs} of {} non-empty shells are 3-designs", per_shell.len()),
        pass,
        per_shell,
    })
}

/// Supports of the weight-`ell` codewords of `E1` as a block multiset.
pub fn theorem_shell(pair: &QrPair, ell: usize, budget: u64) -> Result<BlockMultiset> {
    crate::codes::shell(&pair.e1, ell, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{weight_distribution_direct, DEFAULT_BUDGET};
    use crate::designs::check_t_design;

    #[test]
    fn pair_dimensions() {
        let pair = build_qr_pair(2, 13).unwrap();
        assert_eq!(pair.generators.g1.degree(), Some(6));
        assert_eq!((pair.d1.dim(), pair.c1.dim(), pair.e1.len()), (7, 6, 14));
        let pair = build_qr_pair(3, 5).unwrap();
        assert_eq!(pair.generators.g1.degree(), Some(2));
        assert_eq!((pair.e1.len(), pair.e1.dim()), (6, 3));
        assert!(matches!(build_qr_pair(2, 2), Err(Error::NotOddPrime(2))));
        assert!(matches!(build_qr_pair(4, 5), Err(Error::NotPrime(4))));
        assert!(matches!(build_qr_pair(5, 5), Err(Error::SamePrime(5))));
        // 2 is a non-residue mod 5, so no binary QR code of length 5
        assert!(matches!(
            build_qr_pair_general(2, 1, 5),
            Err(Error::NotQuadraticResidue { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_hermitian(2, 13).unwrap().label, CaseLabel::Iv);
        assert_eq!(classify_hermitian(3, 5).unwrap().label, CaseLabel::Iv);
        let c = classify_hermitian(2, 17).unwrap();
        assert_eq!((c.label, c.predicted_dim), (CaseLabel::Ii, 1));
        assert_eq!(classify_euclidean(2, 1, 7).unwrap().label, CaseLabel::Viii);
        assert_eq!(classify_euclidean(2, 1, 41).unwrap().label, CaseLabel::Vi);
        assert_eq!(classify_euclidean(5, 2, 13).unwrap().label, CaseLabel::V);
        assert!(classify_euclidean(2, 1, 5).is_err());
    }

    #[test]
    fn intersections_match_predictions() {
        for (r, p) in [(2, 13), (3, 5), (2, 17), (2, 7), (3, 7), (2, 11), (5, 7)] {
            let pair = build_qr_pair(r, p).unwrap();
            let case = classify_hermitian(r, p).unwrap();
            let rep = verify_intersection(&pair, &case).unwrap();
            assert!(rep.pass, "({r}, {p}) {:?}", rep.computed);
        }
        let pair = build_qr_pair_general(2, 1, 7).unwrap();
        let rep = verify_intersection(&pair, &classify_euclidean(2, 1, 7).unwrap()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.computed[0].dim, 4);
        let pair = build_qr_pair(2, 13).unwrap();
        assert!(verify_intersection(&pair, &classify_hermitian(3, 5).unwrap()).is_err());
    }

    #[test]
    fn duadic_duality() {
        for (r, p) in [(2, 13), (3, 5), (2, 17), (3, 7), (5, 7)] {
            let pair = build_qr_pair(r, p).unwrap();
            let rep = verify_duadic_duality(&pair).unwrap();
            assert!(rep.pass, "({r}, {p}) {:?}", rep.computed);
        }
        assert_eq!(build_qr_pair(2, 13).unwrap().m_entry(), 1);
        assert_eq!(build_qr_pair(3, 5).unwrap().m_entry(), 1);
        assert_eq!(verify_duadic_duality(&build_qr_pair(2, 17).unwrap()).unwrap().case, "part (1)");
    }

    #[test]
    fn theorem_small_instances() {
        for (r, p) in [(2, 13), (3, 5)] {
            let rep = verify_main_theorem(r, p, DEFAULT_BUDGET, Exec::Parallel).unwrap();
            assert_eq!(rep.case, TheoremStatus::Pass);
            assert!(!rep.per_shell.is_empty());
            let pair = build_qr_pair(r, p).unwrap();
            for s in &rep.per_shell {
                let direct = check_t_design(&theorem_shell(&pair, s.weight, DEFAULT_BUDGET).unwrap(), 3).unwrap();
                assert_eq!(direct.lambda, s.lambda3);
                assert!(shells_support_equality(&pair, s.weight, DEFAULT_BUDGET).unwrap());
            }
        }
        let rep = verify_main_theorem(2, 17, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        assert_eq!(rep.case, TheoremStatus::Inapplicable);
        assert!(matches!(
            verify_main_theorem(2, 29, 1 << 28, Exec::Sequential),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hull_and_dual_share_weight_distribution() {
        let pair = build_qr_pair(3, 5).unwrap();
        let dual = pair.e1.dual_hermitian().unwrap();
        assert_eq!(
            weight_distribution_direct(&pair.e1, DEFAULT_BUDGET, Exec::Sequential).unwrap(),
            weight_distribution_direct(&dual, DEFAULT_BUDGET, Exec::Sequential).unwrap()
        );
        let pair = build_qr_pair(2, 17).unwrap();
        assert!(matches!(
            shells_support_equality(&pair, 8, DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn survey_extended_hamming() {
        let pair = build_qr_pair_general(2, 1, 7).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let s = survey_shells(&pair.e1, 3, DEFAULT_BUDGET, exec).unwrap();
            let weights: Vec<usize> = s.iter().map(|x| x.weight).collect();
            assert_eq!(weights, vec![4, 8]);
            assert!(s.iter().all(|x| x.report.is_design));
            assert_eq!(s[0].report.lambda, Some(1));
        }
    }
}
