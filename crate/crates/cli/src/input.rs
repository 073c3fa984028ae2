//! Parsers for command-line values and distribution files.

use qrd_core::codes::WeightDistribution;

/// Accepts `268435456`, `2^28` or `1<<28`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|e| format!("invalid budget component {x:?}: {e}"))
    };
    if let Some((base, exp)) = s.split_once('^') {
        let (base, exp) = (parse(base)?, parse(exp)?);
        let exp = u32::try_from(exp).map_err(|_| "exponent too large".to_string())?;
        base.checked_pow(exp)
            .ok_or_else(|| format!("budget {s} overflows 64 bits"))
    } else if let Some((base, shift)) = s.split_once("<<") {
        let (base, shift) = (parse(base)?, parse(shift)?);
        if shift >= 64 || base.leading_zeros() < shift as u32 {
            return Err(format!("budget {s} overflows 64 bits"));
        }
        Ok(base << shift)
    } else {
        parse(s)
    }
}

/// Comma-separated weights and inclusive ranges `a..b`, each optionally
/// filtered with `:even` or `:odd`, e.g. `12..38:even` or `10,12..16`.
pub fn parse_weights(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (range, filter) = match item.split_once(':') {
            Some((r, f)) => (r, Some(f)),
            None => (item, None),
        };
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("invalid weight {x:?}: {e}"))
        };
        let (lo, hi) = match range.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let w = num(range)?;
                (w, w)
            }
        };
        if lo > hi {
            return Err(format!("empty weight range {item:?}"));
        }
        let keep: fn(usize) -> bool = match filter.map(str::trim) {
            None | Some("all") => |_| true,
            Some("even") => |w| w % 2 == 0,
            Some("odd") => |w| w % 2 == 1,
            Some(other) => return Err(format!("unknown weight filter {other:?}")),
        };
        out.extend((lo..=hi).filter(|&w| keep(w)));
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(format!("no weights in {s:?}"));
    }
    Ok(out)
}

/// Lines `weight count`; blank lines and `#` comments are ignored. Weights
/// not listed have count zero.
pub fn parse_distribution(text: &str, n: usize) -> Result<WeightDistribution, String> {
    let mut counts = vec![0u64; n + 1];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [w, c] = fields[..] else {
            return Err(format!("line {}: expected \"weight count\"", lineno + 1));
        };
        let w: usize = w
            .parse()
            .map_err(|e| format!("line {}: weight: {e}", lineno + 1))?;
        let c: u64 = c
            .parse()
            .map_err(|e| format!("line {}: count: {e}", lineno + 1))?;
        if w > n {
            return Err(format!("line {}: weight {w} exceeds length {n}", lineno + 1));
        }
        counts[w] += c;
    }
    Ok(WeightDistribution { counts })
}

/// Splits `q` into `(r, k)` with `q = r^k`, `r` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32), String> {
    if q < 2 {
        return Err(format!("{q} is not a prime power"));
    }
    let factors = qrd_core::numtheory::prime_factors(q);
    let [r] = factors[..] else {
        return Err(format!("{q} is not a prime power"));
    };
    let mut k = 0;
    let mut x = q;
    while x > 1 {
        x /= r;
        k += 1;
    }
    Ok((r, k))
}
