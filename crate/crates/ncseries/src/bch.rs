//! Campbell–Hausdorff composition and the truncated commutator identity
//! used for moving exponentials past one another to first order.

use crate::series::NCSeries;
use crate::{FiltrationKind, NCError};
use scalars::{bernoulli, big_factorial, Rational};
use num_traits::{One, Zero};

/// Commutator `u v - v u`.
pub fn commutator(u: &NCSeries, v: &NCSeries) -> Result<NCSeries, NCError> {
    u.concat_mul(v)?.sub(&v.concat_mul(u)?)
}

/// Adjoint action of `u` on `v`: `ad(u)(v) = uv - vu`, here for arbitrary
/// series `u` (not only Lie elements).
pub fn ad(u: &NCSeries, v: &NCSeries) -> Result<NCSeries, NCError> {
    commutator(u, v)
}

/// Iterated adjoint `ad(u)^k(v)`.
pub fn ad_pow(u: &NCSeries, k: usize, v: &NCSeries) -> Result<NCSeries, NCError> {
    let mut acc = v.clone();
    for _ in 0..k {
        acc = ad(u, &acc)?;
    }
    Ok(acc)
}

/// `log(exp X exp Y)` for series with zero constant term.
pub fn bch(x: &NCSeries, y: &NCSeries) -> Result<NCSeries, NCError> {
    x.exp()?.concat_mul(&y.exp()?)?.log()
}

/// Verifies the first-order commutation rule
/// `exp(X) exp(Y) = exp(X+Y) + ad(exp X)(Σ_{n≥1} (B_n⁺/n!) ad(X)^{n-1}(Y))`
/// modulo the part of degree ≥ `r+1` in the filtration `f` (the "quadratic
/// in Y" part for `f`-degree counting Y-letters and `r = 1`).
pub fn truncated_bch_check(
    x: &NCSeries,
    y: &NCSeries,
    f: FiltrationKind,
    r: usize,
) -> Result<bool, NCError> {
    let lhs = x.exp()?.concat_mul(&y.exp()?)?;
    let mut series = NCSeries::zero(x.alphabet(), x.degree().min(y.degree()));
    for n in 1..=series.degree().max(1) {
        // B_n⁺ = (-1)^n B_n, so B_1⁺ = +1/2.
        let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
        let coeff = sign * bernoulli(n as u64) / Rational::from(big_factorial(n as u64));
        if coeff.is_zero() {
            continue;
        }
        series = series.add(&ad_pow(x, n - 1, y)?.scale_rat(&coeff))?;
    }
    let rhs = x.add(y)?.exp()?.add(&ad(&x.exp()?, &series)?)?;
    Ok(lhs.sub(&rhs)?.fil(f, r)?.is_zero())
}
