//! Combinatorial t-design verification.
//!
//! Three independent routes are provided:
//!
//! * direct counting ([`check_t_design`]): every block pushes each of its
//!   t-subsets into a counter array indexed by colex rank;
//! * Jacobi polynomials ([`jacobi`], [`jacobi_design_sweep`]): the shell of
//!   weight `ℓ` is a t-design iff the coefficient of `z^t x^(n-ℓ) y^(ℓ-t)` in
//!   `J_{C,T}` does not depend on the t-set `T`;
//! * the Assmus-Mattson criterion ([`assmus_mattson`]), which works from
//!   weight distributions alone.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::codes::{weight, CodewordRange, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::exec::{fold_tasks, Exec};

/// Blocks on the ground set `0..v`, kept with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockMultiset {
    v: usize,
    blocks: BTreeMap<Vec<usize>, u64>,
}

impl BlockMultiset {
    pub fn new(v: usize) -> BlockMultiset {
        BlockMultiset {
            v,
            blocks: BTreeMap::new(),
        }
    }

    pub fn from_blocks(v: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<BlockMultiset> {
        let mut out = BlockMultiset::new(v);
        for b in blocks {
            out.insert(b, 1)?;
        }
        Ok(out)
    }

    /// Adds `mult` copies of `block` (deduplicated and sorted).
    pub fn insert(&mut self, mut block: Vec<usize>, mult: u64) -> Result<()> {
        block.sort_unstable();
        block.dedup();
        if let Some(&bad) = block.iter().find(|&&x| x >= self.v) {
            return Err(Error::Shape(format!(
                "point {bad} outside ground set of size {}",
                self.v
            )));
        }
        if mult > 0 {
            *self.blocks.entry(block).or_insert(0) += mult;
        }
        Ok(())
    }

    /// `block` must already be sorted, distinct and inside the ground set.
    pub(crate) fn insert_unchecked(&mut self, block: Vec<usize>, mult: u64) {
        *self.blocks.entry(block).or_insert(0) += mult;
    }

    pub fn merge(&mut self, other: BlockMultiset) {
        for (b, m) in other.blocks {
            *self.blocks.entry(b).or_insert(0) += m;
        }
    }

    pub fn ground_size(&self) -> usize {
        self.v
    }

    /// Number of blocks counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.blocks.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, u64)> {
        self.blocks.iter().map(|(b, &m)| (b, m))
    }

    /// Common block size, if all blocks have the same size.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let mut sizes = self.blocks.keys().map(Vec::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// Image under the point permutation `x ↦ perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<BlockMultiset> {
        if perm.len() != self.v {
            return Err(Error::Shape("permutation length".into()));
        }
        let mut out = BlockMultiset::new(self.v);
        for (b, m) in self.iter() {
            out.insert(b.iter().map(|&x| perm[x]).collect(), m)?;
        }
        Ok(out)
    }
}

impl Serialize for BlockMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.blocks.len()))?;
        for (b, &m) in &self.blocks {
            let mut row: Vec<u64> = b.iter().map(|&x| x as u64).collect();
            row.push(m);
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// `binom[n][k]` for `n <= v`, `k <= t`.
fn binomial_table(v: usize, t: usize) -> Vec<Vec<u64>> {
    let mut b = vec![vec![0u64; t + 1]; v + 1];
    for n in 0..=v {
        b[n][0] = 1;
        for k in 1..=t.min(n) {
            b[n][k] = b[n - 1][k - 1] + if k < n { b[n - 1][k] } else { 0 };
        }
    }
    b
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Counts how often each t-subset of `0..v` lies in the inserted blocks.
/// Counters are indexed by the colex rank `Σ_i C(x_i, i + 1)` of the sorted
/// subset `x_0 < … < x_{t-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCounter {
    v: usize,
    t: usize,
    binom: Vec<Vec<u64>>,
    counts: Vec<u64>,
}

impl SubsetCounter {
    pub fn new(v: usize, t: usize) -> SubsetCounter {
        let binom = binomial_table(v, t);
        let size = binom[v][t] as usize;
        SubsetCounter {
            v,
            t,
            binom,
            counts: vec![0; size],
        }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &x)| self.binom[x][i + 1])
            .sum::<u64>() as usize
    }

    pub fn unrank(&self, mut rank: usize) -> Vec<usize> {
        let mut out = vec![0; self.t];
        for i in (0..self.t).rev() {
            let mut x = i;
            while x < self.v && self.binom[x + 1][i + 1] as usize <= rank {
                x += 1;
            }
            out[i] = x;
            rank -= self.binom[x][i + 1] as usize;
        }
        out
    }

    /// Adds `mult` to every t-subset of the sorted `block`.
    pub fn add_block(&mut self, block: &[usize], mult: u64) {
        let b = &self.binom;
        let c = &mut self.counts;
        match self.t {
            1 => {
                for &x in block {
                    c[x] += mult;
                }
            }
            2 => {
                for (j, &y) in block.iter().enumerate() {
                    let ry = b[y][2];
                    for &x in &block[..j] {
                        c[(ry + x as u64) as usize] += mult;
                    }
                }
            }
            3 => {
                for (k, &z) in block.iter().enumerate() {
                    let rz = b[z][3];
                    for (j, &y) in block[..k].iter().enumerate() {
                        let ryz = rz + b[y][2];
                        for &x in &block[..j] {
                            c[(ryz + x as u64) as usize] += mult;
                        }
                    }
                }
            }
            t => {
                if block.len() < t {
                    return;
                }
                let mut idx: Vec<usize> = (0..t).collect();
                loop {
                    let r: u64 = idx.iter().enumerate().map(|(i, &p)| b[block[p]][i + 1]).sum();
                    c[r as usize] += mult;
                    let mut i = t;
                    while i > 0 && idx[i - 1] == block.len() - t + i - 1 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    idx[i - 1] += 1;
                    for j in i..t {
                        idx[j] = idx[j - 1] + 1;
                    }
                }
            }
        }
    }

    pub fn merge(&mut self, other: &SubsetCounter) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignStatus {
    Design,
    NotDesign,
    /// No blocks at all; neither verified nor refuted.
    Empty,
}

/// Two t-subsets covered a different number of times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: Vec<usize>,
    pub first_count: u64,
    pub second: Vec<usize>,
    pub second_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub t: usize,
    pub v: usize,
    pub status: DesignStatus,
    pub is_design: bool,
    pub lambda: Option<u64>,
    pub block_size: Option<usize>,
    /// Block count with multiplicity.
    pub blocks: u64,
    pub witness: Option<Witness>,
    /// A block with fewer than `t` points, which rules out a design verdict.
    pub short_block: Option<Vec<usize>>,
}

impl DesignReport {
    pub(crate) fn from_counter(
        counter: &SubsetCounter,
        blocks: u64,
        block_size: Option<usize>,
        short_block: Option<Vec<usize>>,
    ) -> DesignReport {
        let (t, v) = (counter.t, counter.v);
        if blocks == 0 {
            return DesignReport {
                t,
                v,
                status: DesignStatus::Empty,
                is_design: false,
                lambda: None,
                block_size: None,
                blocks,
                witness: None,
                short_block: None,
            };
        }
        let counts = counter.counts();
        let first = counts[0];
        let witness = counts.iter().position(|&c| c != first).map(|i| Witness {
            first: counter.unrank(0),
            first_count: first,
            second: counter.unrank(i),
            second_count: counts[i],
        });
        let is_design = witness.is_none() && short_block.is_none();
        DesignReport {
            t,
            v,
            status: if is_design {
                DesignStatus::Design
            } else {
                DesignStatus::NotDesign
            },
            is_design,
            lambda: is_design.then_some(first),
            block_size,
            blocks,
            witness,
            short_block,
        }
    }
}

/// Exact t-design test by accumulating every block's t-subsets.
pub fn check_t_design(blocks: &BlockMultiset, t: usize) -> Result<DesignReport> {
    let v = blocks.ground_size();
    if t == 0 || t > v {
        return Err(Error::StrengthTooLarge { t, v });
    }
    let mut counter = SubsetCounter::new(v, t);
    let mut short_block = None;
    for (b, m) in blocks.iter() {
        if b.len() < t && short_block.is_none() {
            short_block = Some(b.clone());
        }
        counter.add_block(b, m);
    }
    Ok(DesignReport::from_counter(
        &counter,
        blocks.total(),
        blocks.uniform_block_size(),
        short_block,
    ))
}

/// `λ_s = λ_t C(v-s, t-s) / C(h-s, t-s)` for `s = 0..=t`.
pub fn derived_lambdas(report: &DesignReport, v: usize, h: usize) -> Result<Vec<(usize, u64)>> {
    let lambda = report
        .lambda
        .filter(|_| report.is_design)
        .ok_or_else(|| Error::Precondition("report is not a verified design".into()))?;
    let t = report.t;
    if h < t || v < h {
        return Err(Error::Precondition(format!(
            "block size {h} incompatible with t={t}, v={v}"
        )));
    }
    (0..=t)
        .map(|s| {
            let num = lambda as u128 * binomial(v - s, t - s) as u128;
            let den = binomial(h - s, t - s) as u128;
            if !num.is_multiple_of(den) {
                return Err(Error::Inconsistent(format!(
                    "λ_{s} = {num}/{den} is not an integer"
                )));
            }
            Ok((s, (num / den) as u64))
        })
        .collect()
}

/// Coefficient table of `J_{C,T}`: `(m1, n1) ↦ count`, where `m1` counts
/// nonzero coordinates inside `T` and `n1` those outside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiPolynomial {
    pub t_size: usize,
    pub n: usize,
    pub coeffs: BTreeMap<(usize, usize), u64>,
}

impl JacobiPolynomial {
    pub fn coefficient(&self, m1: usize, n1: usize) -> u64 {
        self.coeffs.get(&(m1, n1)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.coeffs.values().map(|&c| c as u128).sum()
    }
}

pub fn jacobi(code: &LinearCode, subset: &[usize], budget: u64) -> Result<JacobiPolynomial> {
    let n = code.len();
    let mut in_t = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(Error::Shape(format!("coordinate {i} outside length {n}")));
        }
        in_t[i] = true;
    }
    let t_size = in_t.iter().filter(|&&b| b).count();
    let range = CodewordRange::new(code, budget)?;
    let mut coeffs = BTreeMap::new();
    range.visit(0, range.total(), |w| {
        let m1 = w.iter().zip(&in_t).filter(|&(&x, &t)| t && x != 0).count();
        *coeffs.entry((m1, weight(w) - m1)).or_insert(0) += 1;
    });
    Ok(JacobiPolynomial {
        t_size,
        n,
        coeffs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum JacobiVerdict {
    Design { lambda: u64 },
    NotDesign { min: u64, max: u64 },
    EmptyShell,
}

impl JacobiVerdict {
    pub fn is_design(&self) -> bool {
        matches!(self, JacobiVerdict::Design { .. })
    }
}

struct SupportCache {
    words_per: usize,
    masks: Vec<u64>,
    weights: Vec<u32>,
}

impl SupportCache {
    fn build(code: &LinearCode, budget: u64) -> Result<SupportCache> {
        let range = CodewordRange::new(code, budget)?;
        let words_per = code.len().div_ceil(64).max(1);
        let mut masks = Vec::with_capacity(range.total() as usize * words_per);
        let mut weights = Vec::with_capacity(range.total() as usize);
        range.visit(0, range.total(), |w| {
            let mut m = vec![0u64; words_per];
            for (i, &x) in w.iter().enumerate() {
                if x != 0 {
                    m[i / 64] |= 1 << (i % 64);
                }
            }
            masks.extend(m);
            weights.push(weight(w) as u32);
        });
        Ok(SupportCache {
            words_per,
            masks,
            weights,
        })
    }

    /// Full coefficient table of `J_{C,T}` as `table[m1 * (n+1) + n1]`.
    fn jacobi_table(&self, t_mask: &[u64], n: usize) -> Vec<u64> {
        let mut table = vec![0u64; (n + 1) * (n + 1)];
        for (mask, &wt) in self.masks.chunks(self.words_per).zip(&self.weights) {
            let m1: u32 = mask.iter().zip(t_mask).map(|(a, b)| (a & b).count_ones()).sum();
            table[m1 as usize * (n + 1) + (wt - m1) as usize] += 1;
        }
        table
    }
}

/// For every weight `ℓ`, whether the coefficient of `z^t x^(n-ℓ) y^(ℓ-t)` in
/// `J_{C,T}` is the same for all `C(n, t)` choices of `T`.
pub fn jacobi_design_sweep(
    code: &LinearCode,
    t: usize,
    budget: u64,
    exec: Exec,
) -> Result<BTreeMap<usize, JacobiVerdict>> {
    let n = code.len();
    if t == 0 || t > n {
        return Err(Error::StrengthTooLarge { t, v: n });
    }
    let cache = SupportCache::build(code, budget)?;
    let subsets = SubsetCounter::new(n, t);
    let n_subsets = subsets.counts().len();
    let empty = cache.jacobi_table(&vec![0; cache.words_per], n);
    // per weight: (min, max) of the coefficient over all T
    let (lo, hi) = fold_tasks(
        exec,
        n_subsets,
        || (vec![u64::MAX; n + 1], vec![0u64; n + 1]),
        |(lo, hi), rank| {
            let mut t_mask = vec![0u64; cache.words_per];
            for i in subsets.unrank(rank) {
                t_mask[i / 64] |= 1 << (i % 64);
            }
            let table = cache.jacobi_table(&t_mask, n);
            for ell in t..=n {
                let c = table[t * (n + 1) + ell - t];
                lo[ell] = lo[ell].min(c);
                hi[ell] = hi[ell].max(c);
            }
        },
        |(mut lo, mut hi), (lo2, hi2)| {
            for i in 0..=n {
                lo[i] = lo[i].min(lo2[i]);
                hi[i] = hi[i].max(hi2[i]);
            }
            (lo, hi)
        },
    );
    Ok((t..=n)
        .map(|ell| {
            // T = ∅ collapses J to the weight enumerator
            let verdict = if empty[ell] == 0 {
                JacobiVerdict::EmptyShell
            } else if lo[ell] == hi[ell] {
                JacobiVerdict::Design { lambda: lo[ell] }
            } else {
                JacobiVerdict::NotDesign {
                    min: lo[ell],
                    max: hi[ell],
                }
            };
            (ell, verdict)
        })
        .collect())
}

pub fn jacobi_design_check(
    code: &LinearCode,
    t: usize,
    ell: usize,
    budget: u64,
    exec: Exec,
) -> Result<JacobiVerdict> {
    if ell < t || ell > code.len() {
        return Err(Error::Precondition(format!(
            "weight {ell} outside {t}..={}",
            code.len()
        )));
    }
    Ok(jacobi_design_sweep(code, t, budget, exec)?[&ell])
}

/// Outcome of the Assmus-Mattson criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmReport {
    pub n: usize,
    pub q: u64,
    pub t: usize,
    pub d: usize,
    pub e: usize,
    pub w0: usize,
    pub w1: usize,
    /// Nonzero dual weights in `(0, n - t]`.
    pub s: usize,
    pub applicable: bool,
    pub primal_range: (usize, usize),
    pub dual_range: (usize, usize),
    /// Weights of the code in `primal_range` (empty if not applicable).
    pub design_weights_primal: Vec<usize>,
    pub design_weights_dual: Vec<usize>,
}

/// `w - ⌊(w + q - 2)/(q - 1)⌋`.
fn am_bracket(w: usize, q: u64) -> usize {
    let q = q as usize;
    w - (w + q - 2) / (q - 1)
}

/// Largest `w` with `am_bracket(w, q) < bound` (`n` when `q = 2`).
pub fn am_largest_weight(bound: usize, q: u64, n: usize) -> usize {
    if q == 2 {
        return n;
    }
    let mut w = 0;
    while am_bracket(w + 1, q) < bound {
        w += 1;
    }
    w
}

/// Assmus-Mattson from the sets of nonzero weights of `C` and `C^⊥E`
/// (weight 0 may be included or not).
pub fn assmus_mattson_weights(
    n: usize,
    q: u64,
    t: usize,
    primal_weights: &[usize],
    dual_weights: &[usize],
) -> Result<AmReport> {
    if q < 2 {
        return Err(Error::InvalidDistribution(format!("field order {q}")));
    }
    if let Some(&w) = primal_weights.iter().chain(dual_weights).find(|&&w| w > n) {
        return Err(Error::InvalidDistribution(format!("weight {w} exceeds length {n}")));
    }
    let min_nonzero = |ws: &[usize]| ws.iter().copied().filter(|&w| w > 0).min();
    let d = min_nonzero(primal_weights)
        .ok_or_else(|| Error::InvalidDistribution("code has no nonzero weight".into()))?;
    let e = min_nonzero(dual_weights)
        .ok_or_else(|| Error::InvalidDistribution("dual has no nonzero weight".into()))?;
    if t >= d {
        return Err(Error::StrengthNotBelowDistance { t, d });
    }
    let mut dual_sorted: Vec<usize> = dual_weights.iter().copied().filter(|&w| w > 0).collect();
    dual_sorted.sort_unstable();
    dual_sorted.dedup();
    let s = dual_sorted.iter().filter(|&&w| w <= n - t).count();
    let w0 = am_largest_weight(d, q, n);
    let w1 = am_largest_weight(e, q, n);
    let applicable = s <= d - t;
    let primal_range = (d, w0);
    let dual_range = (e, (n - t).min(w1));
    let in_range = |ws: &[usize], (lo, hi): (usize, usize)| -> Vec<usize> {
        if !applicable {
            return Vec::new();
        }
        let mut v: Vec<usize> = ws.iter().copied().filter(|&w| w >= lo && w <= hi).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    Ok(AmReport {
        n,
        q,
        t,
        d,
        e,
        w0,
        w1,
        s,
        applicable,
        primal_range,
        dual_range,
        design_weights_primal: in_range(primal_weights, primal_range),
        design_weights_dual: in_range(dual_weights, dual_range),
    })
}

/// Assmus-Mattson from full weight distributions of `C` and `C^⊥E`.
pub fn assmus_mattson(
    n: usize,
    q: u64,
    t: usize,
    dist: &WeightDistribution,
    dual_dist: &WeightDistribution,
) -> Result<AmReport> {
    for d in [dist, dual_dist] {
        d.validate(q)?;
        if d.len() != n {
            return Err(Error::InvalidDistribution(format!(
                "distribution of length {} for n = {n}",
                d.len()
            )));
        }
    }
    assmus_mattson_weights(n, q, t, &dist.support(), &dual_dist.support())
}
