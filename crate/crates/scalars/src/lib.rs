//! Exact coefficient arithmetic for the whole workspace.
//!
//! The central type is [`Scalar`]: an element of the commutative ring
//! `Q[L, L^{-1}] (x) Q[zeta-words]`, where `L` is the Lefschetz symbol of
//! weight 1 (numerically `2*pi*i`) and the polynomial generators are formal
//! symbols `zeta(w)`, one for each admissible word `w` over the letters
//! `e0`, `e1`. A word is admissible when it begins with `e1` and ends with
//! `e0`; its weight is its length. Scalars are stored as sparse maps from
//! monomials `(L-exponent, multiset of words)` to rationals with no zero
//! coefficients retained.
//!
//! Conventions pinned here and relied on everywhere else:
//!
//! * `zeta(k_1, ..., k_r) = sum_{0 < n_1 < ... < n_r} prod n_i^{-k_i}` with
//!   `k_r >= 2`; the word `e1 e0^{k_1 - 1} ... e1 e0^{k_r - 1}` is read left
//!   to right, so the string `"10010000"` denotes `zeta(3, 5)`.
//! * Shuffle regularization sends `e0` and `e1` to zero, giving the unique
//!   algebra map from all words to the admissible span ([`regularize`]).
//! * Euler reduction rewrites each even single zeta as a rational multiple
//!   of a power of `L`: `zeta(2n) = -B_{2n} L^{2n} / (2 (2n)!)`.
//!
//! Three equality modes are provided: `Formal` (compare Euler-reduced normal
//! forms), `ShuffleExpanded` (rewrite products of zeta symbols into single
//! words first; rejected once a value has been Euler-reduced, because the
//! reduction forgets the word-level data the expansion needs), and `Numeric`
//! (evaluate via `2*pi*i` and a zeta oracle, compare within a tolerance).

mod linalg;
mod mat2;
mod rational;
mod regularize;
mod scalar;
mod word;

pub use linalg::{nullspace, rref, solve, span_contains, span_dimension};
pub use mat2::{mat_s, mat_s_m, mat_t, mat_t_m, mat_u_m, Mat2};
pub use rational::{bernoulli, big_binomial, big_factorial, format_rational, parse_rational};
pub use regularize::regularize;
pub use scalar::{EqMode, Monomial, MzvOracle, Scalar, ScalarError};
pub use word::{shuffle_words, ZetaWord};

pub type Rational = num_rational::BigRational;
pub type Int = num_bigint::BigInt;

/// Convenience: rational from an integer pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}
