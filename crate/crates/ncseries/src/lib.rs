//! Truncated noncommutative formal power series over the scalar ring.
//!
//! Series live on one of two fixed two-letter alphabets, `{x0, x1}` or
//! `{a, b}`, and carry an explicit truncation degree: every operation is
//! exact on words up to that degree. The crate provides the concatenation
//! ring (with `exp`/`log`/`inverse`), algebra homomorphisms by letter
//! substitution, the length and letter-count filtrations together with a
//! quotient-arithmetic fast path, the modular-group action by weighted
//! linear letter images, grouplike verification against the shuffle
//! coproduct, coefficient spaces with exact rational span arithmetic, and
//! the truncated Campbell-Hausdorff apparatus.
//!
//! Conventions: words are sequences of letter indices (0 and 1); the
//! filtrations `W` (length) and `D` (count of `x1`) apply on `{x0, x1}`,
//! while `A` (count of `a`) and `B` (count of `b`) apply on `{a, b}`.
//! "mod F^{r+1}" quotient arithmetic is available for all letter-count
//! filtrations because their degrees add under concatenation.

mod bch;
mod filtration;
mod hopf;
mod json;
mod series;
mod sl2;

pub use bch::{ad, ad_pow, bch, commutator, truncated_bch_check};
pub use filtration::FiltrationKind;
pub use hopf::{scalar_span_dimension, span_contains_scalars, SpanBuilder};
pub use series::{Alphabet, NCSeries, Quotient};

/// Errors from series operations.
#[derive(Debug, thiserror::Error)]
pub enum NCError {
    #[error("series alphabets do not match")]
    AlphabetMismatch,
    #[error("constant-term precondition violated: {0}")]
    ConstantTerm(&'static str),
    #[error("filtration {0:?} is not defined for alphabet {1:?}")]
    BadFiltration(FiltrationKind, Alphabet),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("invalid series encoding: {0}")]
    BadEncoding(String),
    #[error(transparent)]
    Scalar(#[from] scalars::ScalarError),
}
