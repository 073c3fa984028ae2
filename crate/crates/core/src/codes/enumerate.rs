//! Exhaustive codeword enumeration.
//!
//! Codewords are produced in lexicographic message order: message index `i`
//! is written in base `q` with the first message symbol most significant,
//! and symbol value `v` is the field element with index `v`. Consecutive
//! codewords differ by one precomputed row delta (odometer stepping), and the
//! index space can be cut into disjoint ranges for parallel workers.

use crate::error::{Error, Result};
use crate::exec::{fold_tasks, Exec};
use crate::gf::Elem;

use super::LinearCode;

/// Default cap on the number of codewords an operation may enumerate.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

pub(crate) fn check_budget(code: &LinearCode, budget: u64) -> Result<u64> {
    let size = code.size();
    if size > budget as u128 {
        let required = match (code.spec().order() as u128).checked_pow(code.dim() as u32) {
            Some(s) => s.to_string(),
            None => format!("{}^{}", code.spec().order(), code.dim()),
        };
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(size as u64)
}

/// Shared stepping tables for a code.
#[derive(Clone)]
pub struct CodewordRange<'a> {
    code: &'a LinearCode,
    /// `deltas[j][v] = (next(v) - v) · row_j` with `next(v) = (v + 1) mod q`.
    deltas: Vec<Vec<Vec<Elem>>>,
    total: u64,
}

impl<'a> CodewordRange<'a> {
    pub fn new(code: &'a LinearCode, budget: u64) -> Result<CodewordRange<'a>> {
        let total = check_budget(code, budget)?;
        let f = code.spec();
        let q = f.order();
        let deltas = code
            .generator_matrix()
            .iter()
            .map(|row| {
                (0..q)
                    .map(|v| {
                        let d = f.sub((v + 1) % q, v);
                        row.iter().map(|&g| f.mul(d, g)).collect()
                    })
                    .collect()
            })
            .collect();
        Ok(CodewordRange {
            code,
            deltas,
            total,
        })
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    fn message(&self, index: u64) -> Vec<Elem> {
        let q = self.code.spec().order();
        let k = self.code.dim();
        let mut m = vec![0; k];
        let mut x = index;
        for j in (0..k).rev() {
            m[j] = x % q;
            x /= q;
        }
        m
    }

    /// Calls `visit` on the codewords with message indices `start..end`.
    pub fn visit(&self, start: u64, end: u64, mut visit: impl FnMut(&[Elem])) {
        let end = end.min(self.total);
        if start >= end {
            return;
        }
        let f = self.code.spec();
        let q = f.order();
        let mut msg = self.message(start);
        let mut word = self.code.encode(&msg).expect("message length matches");
        for _ in start..end {
            visit(&word);
            for j in (0..msg.len()).rev() {
                let v = msg[j];
                for (w, &d) in word.iter_mut().zip(&self.deltas[j][v as usize]) {
                    *w = f.add(*w, d);
                }
                msg[j] = (v + 1) % q;
                if msg[j] != 0 {
                    break;
                }
            }
        }
    }

    /// Folds over all codewords, splitting the index range into chunks.
    pub fn fold<A, I, S, M>(&self, exec: Exec, identity: I, step: S, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        S: Fn(&mut A, &[Elem]) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let chunk = 4096u64;
        let n_chunks = self.total.div_ceil(chunk) as usize;
        fold_tasks(
            exec,
            n_chunks,
            identity,
            |acc, c| {
                let start = c as u64 * chunk;
                self.visit(start, start + chunk, |w| step(acc, w));
            },
            merge,
        )
    }
}

/// Iterator over all codewords of a code, in lexicographic message order.
pub struct Codewords<'a> {
    range: CodewordRange<'a>,
    msg: Vec<Elem>,
    word: Vec<Elem>,
    next: u64,
    end: u64,
}

impl<'a> Codewords<'a> {
    /// Restricts to message indices `start..end`.
    pub fn partition(range: CodewordRange<'a>, start: u64, end: u64) -> Codewords<'a> {
        let end = end.min(range.total);
        let msg = range.message(start.min(end));
        let word = range.code.encode(&msg).expect("message length matches");
        Codewords {
            range,
            msg,
            word,
            next: start.min(end),
            end,
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.next >= self.end {
            return None;
        }
        let out = self.word.clone();
        self.next += 1;
        let f = self.range.code.spec();
        let q = f.order();
        for j in (0..self.msg.len()).rev() {
            let v = self.msg[j];
            for (w, &d) in self.word.iter_mut().zip(&self.range.deltas[j][v as usize]) {
                *w = f.add(*w, d);
            }
            self.msg[j] = (v + 1) % q;
            if self.msg[j] != 0 {
                break;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// All `q^k` codewords, erroring if that exceeds `budget`.
pub fn enumerate(code: &LinearCode, budget: u64) -> Result<Codewords<'_>> {
    let range = CodewordRange::new(code, budget)?;
    let total = range.total;
    Ok(Codewords::partition(range, 0, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::construct_field;
    use std::collections::BTreeSet;

    fn sample_code() -> LinearCode {
        let f9 = construct_field(3, 2).unwrap();
        LinearCode::from_generators(&f9, 5, vec![vec![1, 2, 3, 4, 5], vec![0, 7, 1, 1, 8], vec![1, 1, 1, 1, 1]])
            .unwrap()
    }

    #[test]
    fn lexicographic_order_matches_encoding() {
        let c = sample_code();
        let words: Vec<Vec<Elem>> = enumerate(&c, DEFAULT_BUDGET).unwrap().collect();
        assert_eq!(words.len(), 729);
        for (i, w) in words.iter().enumerate() {
            let m = vec![(i / 81) as u64, (i / 9 % 9) as u64, (i % 9) as u64];
            assert_eq!(w, &c.encode(&m).unwrap());
        }
        let distinct: BTreeSet<_> = words.iter().collect();
        assert_eq!(distinct.len(), 729);
    }

    #[test]
    fn partitions_cover_exactly_once() {
        let c = sample_code();
        let all: Vec<Vec<Elem>> = enumerate(&c, DEFAULT_BUDGET).unwrap().collect();
        let range = CodewordRange::new(&c, DEFAULT_BUDGET).unwrap();
        let mut joined = Vec::new();
        for (s, e) in [(0, 100), (100, 101), (101, 500), (500, 729)] {
            joined.extend(Codewords::partition(range.clone(), s, e));
        }
        assert_eq!(joined, all);
        let mut visited = Vec::new();
        range.visit(37, 400, |w| visited.push(w.to_vec()));
        assert_eq!(visited, all[37..400]);
    }

    #[test]
    fn budget_and_degenerate_codes() {
        let c = sample_code();
        assert!(matches!(
            enumerate(&c, 728),
            Err(Error::BudgetExceeded { .. })
        ));
        let f2 = construct_field(2, 1).unwrap();
        let z = LinearCode::zero_code(&f2, 4);
        let words: Vec<_> = enumerate(&z, 1).unwrap().collect();
        assert_eq!(words, vec![vec![0; 4]]);
    }

    #[test]
    fn fold_counts_every_codeword() {
        let c = sample_code();
        let range = CodewordRange::new(&c, DEFAULT_BUDGET).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let n = range.fold(exec, || 0u64, |a, _| *a += 1, |a, b| a + b);
            assert_eq!(n, 729);
        }
    }
}
