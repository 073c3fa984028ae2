//! Integer number theory: primality, quadratic characters, multiplicative
//! orders and cyclotomic cosets, plus the search for `(r, p)` pairs whose
//! extended quadratic residue codes over `F_{r^2}` hold 3-designs.

use serde::Serialize;

use crate::error::{Error, Result};

/// Witnesses that make Miller-Rabin deterministic for every `n < 2^64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test valid on the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MR_WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Domain error unless `p` is an odd prime.
pub fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

/// Euler's criterion: `a^((p-1)/2) ≡ 1 (mod p)`.
pub fn is_quadratic_residue(a: i64, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    let a_red = reduce(a, p);
    if a_red == 0 {
        return Err(Error::ZeroResidue { a, p });
    }
    Ok(pow_mod(a_red, (p - 1) / 2, p) == 1)
}

/// The nonzero squares modulo `p`, ascending.
pub fn quadratic_residues(p: u64) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    Ok((1..p).filter(|&a| pow_mod(a, (p - 1) / 2, p) == 1).collect())
}

/// The quadratic non-residues modulo `p`, ascending.
pub fn quadratic_nonresidues(p: u64) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    Ok((1..p).filter(|&a| pow_mod(a, (p - 1) / 2, p) != 1).collect())
}

/// Smallest `m >= 1` with `q^m ≡ 1 (mod p)`.
pub fn multiplicative_order(q: u64, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let q_red = q % p;
    if q_red == 0 {
        return Err(Error::NotCoprime { a: q, modulus: p });
    }
    // The order divides p - 1; test divisors in increasing order.
    let n = p - 1;
    let mut divisors = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divisors.push(i);
            if i != n / i {
                divisors.push(n / i);
            }
        }
        i += 1;
    }
    divisors.sort_unstable();
    Ok(divisors
        .into_iter()
        .find(|&m| pow_mod(q_red, m, p) == 1)
        .expect("p - 1 is always a multiple of the order"))
}

/// Partition of `Z/pZ` into orbits of multiplication by `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    pub modulus: u64,
    pub multiplier: u64,
    /// Each coset sorted ascending; cosets ordered by smallest element.
    pub cosets: Vec<Vec<u64>>,
}

impl CosetPartition {
    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: u64) -> usize {
        let x = x % self.modulus;
        self.cosets
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .expect("cosets partition the residues")
    }
}

pub fn cyclotomic_cosets(q: u64, p: u64) -> Result<CosetPartition> {
    require_odd_prime(p)?;
    let q_red = q % p;
    if q_red == 0 {
        return Err(Error::NotCoprime { a: q, modulus: p });
    }
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for rep in 0..p {
        if seen[rep as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = rep;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = mul_mod(x, q_red, p);
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition {
        modulus: p,
        multiplier: q_red,
        cosets,
    })
}

/// `p ≡ 1 (mod 4)` and `r` a non-residue modulo `p`: the hypotheses under
/// which every non-empty shell of the extended QR code over `F_{r^2}` of
/// length `p + 1` is a 3-design.
pub fn theorem_conditions(r: u64, p: u64) -> Result<bool> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    require_odd_prime(p)?;
    if r == p {
        return Err(Error::SamePrime(r));
    }
    Ok(p % 4 == 1 && !is_quadratic_residue(r as i64, p)?)
}

/// All odd primes `p < p_max`, `p != r`, satisfying [`theorem_conditions`].
pub fn search_params(r: u64, p_max: u64) -> Result<Vec<u64>> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let mut out = Vec::new();
    for p in (3..p_max).step_by(2) {
        if p != r && is_prime(p) && theorem_conditions(r, p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            out.push(small);
            while n.is_multiple_of(small) {
                n /= small;
            }
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            if !out.contains(&m) {
                out.push(m);
            }
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Finds a nontrivial factor of an odd composite `n` with no factor below 41.
fn pollard_rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn brute_squares(p: u64) -> Vec<u64> {
        let mut s: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    fn odd_primes_below(n: u64) -> impl Iterator<Item = u64> {
        (3..n).step_by(2).filter(|&p| trial_division(p))
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!trial_division(561));
        assert!(!is_prime(561));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn residue_examples() {
        assert!(is_quadratic_residue(-1, 13).unwrap());
        assert!(is_quadratic_residue(4, 13).unwrap());
        assert_eq!(brute_squares(13), vec![1, 3, 4, 9, 10, 12]);
        assert!(!is_quadratic_residue(2, 13).unwrap());
        assert!(matches!(
            is_quadratic_residue(26, 13),
            Err(Error::ZeroResidue { .. })
        ));
        assert!(is_quadratic_residue(1, 15).is_err());
    }

    #[test]
    fn euler_criterion_matches_brute_force() {
        for p in odd_primes_below(500) {
            let squares = brute_squares(p);
            assert_eq!(quadratic_residues(p).unwrap(), squares);
            for a in 1..p {
                assert_eq!(
                    is_quadratic_residue(a as i64, p).unwrap(),
                    squares.binary_search(&a).is_ok()
                );
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(4, 13).unwrap(), 6);
        assert_eq!(multiplicative_order(1, 7).unwrap(), 1);
        assert!(matches!(
            multiplicative_order(14, 7),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn coset_examples() {
        let c = cyclotomic_cosets(2, 7).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        let c = cyclotomic_cosets(4, 13).unwrap();
        assert!(c.cosets.contains(&vec![1, 3, 4, 9, 10, 12]));
        let c = cyclotomic_cosets(8, 7).unwrap();
        assert_eq!(c.cosets.len(), 7);
        assert!(cyclotomic_cosets(7, 7).is_err());
    }

    #[test]
    fn coset_partition_invariants() {
        for p in odd_primes_below(120) {
            for q in [2u64, 3, 4, 5, 9, 25] {
                if q % p == 0 {
                    continue;
                }
                let part = cyclotomic_cosets(q, p).unwrap();
                let order = multiplicative_order(q, p).unwrap();
                let mut all: Vec<u64> = part.cosets.iter().flatten().copied().collect();
                all.sort_unstable();
                assert_eq!(all, (0..p).collect::<Vec<_>>());
                assert_eq!(part.cosets[0], vec![0]);
                let reps: Vec<u64> = part.cosets.iter().map(|c| c[0]).collect();
                assert!(reps.windows(2).all(|w| w[0] < w[1]));
                for c in &part.cosets[1..] {
                    assert_eq!(order % c.len() as u64, 0);
                    for &x in c {
                        assert!(c.binary_search(&(x * q % p)).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_condition_examples() {
        assert!(theorem_conditions(2, 13).unwrap());
        assert!(!theorem_conditions(2, 17).unwrap());
        assert!(theorem_conditions(5, 13).unwrap());
        assert!(matches!(theorem_conditions(13, 13), Err(Error::SamePrime(13))));
    }

    #[test]
    fn search_examples() {
        assert_eq!(search_params(5, 100).unwrap(), vec![13, 17, 37, 53, 73, 97]);
        assert_eq!(
            search_params(7, 100).unwrap(),
            vec![5, 13, 17, 41, 61, 73, 89, 97]
        );
        assert_eq!(search_params(47, 50).unwrap(), vec![5, 13, 29, 41]);
    }

    #[test]
    fn congruence_characterisations() {
        for p in odd_primes_below(1000) {
            let two = p % 4 == 1 && !brute_squares(p).contains(&(2 % p));
            assert_eq!(p % 8 == 5, two, "p = {p}");
            if p != 3 {
                let three = p % 4 == 1 && !brute_squares(p).contains(&(3 % p));
                assert_eq!(p % 12 == 5, three, "p = {p}");
            }
        }
    }

    #[test]
    fn factorisation() {
        assert_eq!(prime_factors(4095), vec![3, 5, 7, 13]);
        assert_eq!(prime_factors((1 << 20) - 1), vec![3, 5, 11, 31, 41]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        let n = 1_000_000_007u64 * 998_244_353;
        assert_eq!(prime_factors(n), vec![998_244_353, 1_000_000_007]);
    }
}
