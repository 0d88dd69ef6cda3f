//! Free Lie algebra on two letters, geometric derivations, and exact
//! relation nullspaces.
//!
//! The crate provides the free Lie algebra `Lie(a, b)` in Lyndon normal form,
//! derivations given extensionally by letter images (with Leibniz application
//! to Lie elements and to truncated series), the distinguished family of
//! derivations annihilating `[a, b]` together with its letter-swap conjugate
//! family and their lowering-bracket weight strings, the map from symbolic
//! Eisenstein-type generators onto scaled derivations, and an exact rational
//! nullspace search for relations among depth-two derivation brackets.
//!
//! Conventions: letters are indexed 0 (`a`) and 1 (`b`); brackets are
//! `[x, y] = xy - yx` in the associative envelope; `ad(x)^m(y)` nests `x` on
//! the left. Degrees count letters, and a derivation's degree shift is the
//! common image degree minus one.

mod deriv;
mod eis;
mod lie;
mod lyndon;
mod relations;

pub use deriv::{
    ad_derivation_pow, epsilon, epsilon_dual, sl2_weight_basis, theta_is_annihilated, Derivation,
};
pub use eis::{apply_mu_word, mu, EisGenerator};
pub use lie::{ad_pow, LieElement};
pub use lyndon::{expand, is_lyndon, lyndon_words, standard_factorization};
pub use relations::{pollack_relations, relation_to_json};

/// Errors from Lie-algebra and relation computations.
#[derive(Debug, thiserror::Error)]
pub enum GeomError {
    #[error("word {0} is not Lyndon")]
    NotLyndon(String),
    #[error("polynomial is not a Lie element: {0}")]
    NotLieElement(String),
    #[error("derivation images are not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("generator index {0} is out of range (must be >= -1)")]
    BadIndex(i64),
    #[error("bidegree k = {k} exceeds 2n = {}", 2 * n)]
    BadBidegree { n: u64, k: u64 },
    #[error("weight {0} is not an even integer >= 2")]
    BadWeight(u64),
    #[error("insufficient degree: need {needed}, given {given}")]
    InsufficientDegree { needed: usize, given: usize },
    #[error("series operates on the wrong alphabet")]
    WrongAlphabet,
    #[error("relation failed re-verification")]
    RelationCheckFailed,
    #[error(transparent)]
    Series(#[from] ncseries::NCError),
}
