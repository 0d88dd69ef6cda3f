//! Rational helpers: Bernoulli numbers, factorials, binomials, string I/O.

use crate::{Int, Rational};
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// `n!` as a big integer.
pub fn big_factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn big_binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Bernoulli number `B_n` with the `B_1 = -1/2` convention, memoized.
///
/// Uses the defining recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0` for m >= 1.
pub fn bernoulli(n: u64) -> Rational {
    static CACHE: Lazy<Mutex<Vec<Rational>>> =
        Lazy::new(|| Mutex::new(vec![Rational::one()]));
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n as usize {
        let m = cache.len() as u64;
        if m > 1 && m % 2 == 1 {
            cache.push(Rational::zero());
            continue;
        }
        let mut sum = Rational::zero();
        for j in 0..m {
            sum += Rational::from(big_binomial(m + 1, j)) * &cache[j as usize];
        }
        let value = -sum / Rational::from(Int::from(m + 1));
        cache.push(value);
    }
    cache[n as usize].clone()
}

/// Renders a rational as `p` or `p/q` (q > 0, lowest terms).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`; rejects zero denominators and empty input.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num.parse().map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d: Int = den.parse().map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    let mut r = Rational::new(n, d);
    if r.denom().is_negative() {
        r = Rational::new(-r.numer().clone(), -r.denom().clone());
    }
    Ok(r)
}
