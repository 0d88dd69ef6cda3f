//! Symbols for Eisenstein-type generators and the map onto derivations.
//!
//! A generator of even weight `2n + 2` carries a polynomial bidegree `(k,
//! 2n - k)`; the map `mu` sends it to `2 (2n-k)! / ((2n)!)^2` times the
//! `k`-fold lowering bracket of the dual derivation of that weight, sends the
//! central weight-2 symbol to twice the shift-2 derivation, and kills the
//! cuspidal marker. On words of generators `mu` acts by composition, with the
//! leftmost factor applied last.

use crate::deriv::{ad_derivation_pow, epsilon, epsilon_dual, Derivation};
use crate::GeomError;
use ncseries::{NCSeries, Quotient};
use scalars::{big_factorial, Rational};

/// Symbolic generator: an even-weight symbol with bidegree, the central
/// weight-2 symbol, or the marker standing in for all cuspidal generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EisGenerator {
    /// Weight `2n + 2`, monomial `X^k Y^{2n-k}` (0 <= k <= 2n).
    Eis { n: u64, k: u64 },
    /// Central weight-2 symbol.
    E2,
    /// Stand-in for cuspidal generators; every `mu`-image vanishes.
    Cusp,
}

impl EisGenerator {
    /// Weight-`2n+2` generator with bidegree `(k, 2n - k)`.
    pub fn eis(n: u64, k: u64) -> Result<Self, GeomError> {
        if k > 2 * n {
            return Err(GeomError::BadBidegree { n, k });
        }
        Ok(EisGenerator::Eis { n, k })
    }

    /// Modular weight of the symbol (0 for the cuspidal marker).
    pub fn weight(&self) -> u64 {
        match self {
            EisGenerator::Eis { n, .. } => 2 * n + 2,
            EisGenerator::E2 => 2,
            EisGenerator::Cusp => 0,
        }
    }
}

/// Image of a generator as a derivation.
pub fn mu(g: &EisGenerator) -> Result<Derivation, GeomError> {
    match g {
        EisGenerator::Eis { n, k } => {
            if *k > 2 * n {
                return Err(GeomError::BadBidegree { n: *n, k: *k });
            }
            let lowering = epsilon_dual(-1)?;
            let dual = epsilon_dual(*n as i64)?;
            let chain = ad_derivation_pow(&lowering, *k as usize, &dual)?;
            let two_n_fact = big_factorial(2 * n);
            let factor = Rational::from_integer(2.into())
                * Rational::from_integer(big_factorial(2 * n - k))
                / (Rational::from_integer(two_n_fact.clone()) * Rational::from_integer(two_n_fact));
            Ok(chain.scale_rat(&factor))
        }
        EisGenerator::E2 => Ok(epsilon(0)?.scale_rat(&Rational::from_integer(2.into()))),
        EisGenerator::Cusp => Ok(Derivation::zero()),
    }
}

/// Applies the composition `mu(g_1) o ... o mu(g_s)` to a series.
pub fn apply_mu_word(
    word: &[EisGenerator],
    series: &NCSeries,
    quot: Quotient,
) -> Result<NCSeries, GeomError> {
    let mut cur = series.reduce_mod(quot)?;
    for g in word.iter().rev() {
        cur = mu(g)?.apply_series(&cur, quot)?;
    }
    Ok(cur)
}
