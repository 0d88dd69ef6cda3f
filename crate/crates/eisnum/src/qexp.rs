//! Exact q-expansions of the level-one forms used by the integrator.

use num_traits::{One, Zero};
use scalars::{bernoulli, Int, Rational};

/// Truncated q-expansion with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    /// Modular weight of the form.
    pub weight: u32,
    /// Coefficients `a_0 ... a_nq` of `sum a_n q^n`.
    pub coeffs: Vec<Rational>,
}

impl QExpansion {
    /// Truncation order (largest retained power of q).
    pub fn nq(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Sum of the p-th powers of the divisors of n (n >= 1).
fn divisor_power_sum(n: u64, p: u32) -> Int {
    let mut total = Int::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += Int::from(d).pow(p);
            let e = n / d;
            if e != d {
                total += Int::from(e).pow(p);
            }
        }
        d += 1;
    }
    total
}

/// Eisenstein series of the given even weight: `-B_w/(2w) + sum sigma_{w-1}(n) q^n`.
pub fn eisenstein(weight: u32, nq: usize) -> QExpansion {
    assert!(weight >= 2 && weight % 2 == 0, "weight must be even and >= 2");
    let mut coeffs = Vec::with_capacity(nq + 1);
    let a0 = -bernoulli(u64::from(weight)) / Rational::from_integer(Int::from(2 * weight));
    coeffs.push(a0);
    for n in 1..=nq as u64 {
        coeffs.push(Rational::from_integer(divisor_power_sum(n, weight - 1)));
    }
    QExpansion { weight, coeffs }
}

/// Coefficients of `prod_{n>=1} (1 - q^n)^24` up to order `nq`, by the
/// pentagonal-number expansion of the eta product followed by squarings.
fn eta24(nq: usize) -> Vec<Int> {
    let mut eta = vec![Int::zero(); nq + 1];
    eta[0] = Int::one();
    let mut k = 1usize;
    while k * (3 * k - 1) / 2 <= nq {
        let sign = if k % 2 == 1 { -Int::one() } else { Int::one() };
        let i1 = k * (3 * k - 1) / 2;
        let i2 = k * (3 * k + 1) / 2;
        eta[i1] += &sign;
        if i2 <= nq {
            eta[i2] += &sign;
        }
        k += 1;
    }
    let mul = |a: &[Int], b: &[Int]| -> Vec<Int> {
        let mut out = vec![Int::zero(); nq + 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if i + j > nq {
                    break;
                }
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
        out
    };
    let e2 = mul(&eta, &eta);
    let e4 = mul(&e2, &e2);
    let e8 = mul(&e4, &e4);
    let e16 = mul(&e8, &e8);
    mul(&e16, &e8)
}

/// The weight-12 cusp form `q prod (1-q^n)^24`; coefficient of `q^n` is `tau(n)`.
pub fn delta(nq: usize) -> QExpansion {
    let e24 = eta24(nq.saturating_sub(1));
    let mut coeffs = Vec::with_capacity(nq + 1);
    coeffs.push(Rational::zero());
    for n in 1..=nq {
        coeffs.push(Rational::from_integer(e24[n - 1].clone()));
    }
    QExpansion { weight: 12, coeffs }
}

/// The integer coefficients `tau(1) ... tau(n_max)` of the weight-12 cusp form.
pub fn tau_values(n_max: usize) -> Vec<Int> {
    eta24(n_max.saturating_sub(1))
        .into_iter()
        .take(n_max)
        .collect()
}
