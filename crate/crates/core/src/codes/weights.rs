//! Weight distributions, the MacWilliams transform and shells.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::designs::BlockMultiset;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::Elem;

use super::enumerate::CodewordRange;
use super::LinearCode;

pub fn weight(word: &[Elem]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

/// `counts[i]` = number of codewords of weight `i`, for `i = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn len(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    pub fn support(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks `A_0 = 1` and that the total is a power of `q`; returns the
    /// dimension.
    pub fn validate(&self, q: u64) -> Result<u32> {
        if self.counts.first() != Some(&1) {
            return Err(Error::InvalidDistribution("A_0 must be 1".into()));
        }
        let total = self.total();
        let mut size = 1u128;
        let mut k = 0;
        while size < total {
            size *= q as u128;
            k += 1;
        }
        if size != total {
            return Err(Error::InvalidDistribution(format!(
                "total {total} is not a power of {q}"
            )));
        }
        Ok(k)
    }
}

pub fn weight_distribution_direct(code: &LinearCode, budget: u64, exec: Exec) -> Result<WeightDistribution> {
    let range = CodewordRange::new(code, budget)?;
    let n = code.len();
    let counts = range.fold(
        exec,
        || vec![0u64; n + 1],
        |acc, w| acc[weight(w)] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(WeightDistribution { counts })
}

/// Direct enumeration when affordable, otherwise the MacWilliams transform
/// of the dual's distribution.
pub fn weight_distribution(code: &LinearCode, budget: u64, exec: Exec) -> Result<WeightDistribution> {
    match weight_distribution_direct(code, budget, exec) {
        Ok(d) => Ok(d),
        Err(primal_err @ Error::BudgetExceeded { .. }) => {
            let dual = code.dual_euclidean();
            match weight_distribution_direct(&dual, budget, exec) {
                Ok(d) => macwilliams_transform(&d, code.spec().order()),
                Err(_) => Err(primal_err),
            }
        }
        Err(e) => Err(e),
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Krawtchouk polynomial `K_j(i) = Σ_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)`.
fn krawtchouk(n: usize, q: u64, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j {
        let term = binomial(i, s) * binomial(n - i, j - s) * BigInt::from(q - 1).pow((j - s) as u32);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Distribution of `C^⊥E` from that of `C` over `F_q`.
pub fn macwilliams_transform(dist: &WeightDistribution, q: u64) -> Result<WeightDistribution> {
    dist.validate(q)?;
    let n = dist.len();
    let size = BigInt::from(dist.total());
    let counts = (0..=n)
        .map(|j| {
            let sum: BigInt = dist
                .counts
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| BigInt::from(a) * krawtchouk(n, q, j, i))
                .sum();
            if !(&sum % &size).is_zero() || sum.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "MacWilliams coefficient {j} is not a nonnegative integer"
                )));
            }
            (sum / &size)
                .to_u64()
                .ok_or_else(|| Error::Inconsistent("count overflows u64".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(WeightDistribution { counts })
}

fn support_of(word: &[Elem]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect()
}

/// Supports of the weight-`ell` codewords, with multiplicity.
pub fn shell(code: &LinearCode, ell: usize, budget: u64) -> Result<BlockMultiset> {
    let range = CodewordRange::new(code, budget)?;
    let mut blocks = BlockMultiset::new(code.len());
    range.visit(0, range.total(), |w| {
        if weight(w) == ell {
            blocks.insert_unchecked(support_of(w), 1);
        }
    });
    Ok(blocks)
}

/// Every shell at once, keyed by weight (weight 0 included).
pub fn shells(code: &LinearCode, budget: u64, exec: Exec) -> Result<BTreeMap<usize, BlockMultiset>> {
    let range = CodewordRange::new(code, budget)?;
    let n = code.len();
    Ok(range.fold(
        exec,
        BTreeMap::new,
        |acc: &mut BTreeMap<usize, BlockMultiset>, w| {
            let s = support_of(w);
            acc.entry(s.len())
                .or_insert_with(|| BlockMultiset::new(n))
                .insert_unchecked(s, 1);
        },
        |mut a, b| {
            for (ell, blocks) in b {
                match a.get_mut(&ell) {
                    Some(existing) => existing.merge(blocks),
                    None => {
                        a.insert(ell, blocks);
                    }
                }
            }
            a
        },
    ))
}
