//! Associator series, the puncture-to-letter morphism, and the depth-one
//! verification pipeline.
//!
//! # Conventions
//!
//! * The canonical generating series `Phi_01` lives on the alphabet
//!   `{x0, x1}`.  Its coefficient on a word `w` is the regularized value of
//!   the *reversed* word, so the degree-two part reads
//!   `zeta(2) (x0 x1 - x1 x0)`.  All other puncture pairs are obtained by
//!   letter substitution (`x_infinity = -x0 - x1`) and/or series inversion.
//! * The puncture-to-letter morphism sends `x0` to
//!   `sum_k B_k/k! ad(b)^k (a)` (Bernoulli numbers with `B_1 = -1/2`) and
//!   `x1` to `-[a, b]`; it converts `{x0, x1}`-series into `{a, b}`-series.
//! * `alpha_m` and `beta_m` are the images of the puncture series under this
//!   morphism; `gamma_m` stays on the `{x0, x1}` side.
//! * `KnownPsiPart` models the operator `Z = 1 - sum zeta(2n+1) eps_dual(2n+2)
//!   - 2 eta eps(2)` with the `eta` coefficient left symbolic until solved.
//! * `depth1_verify` equates the depth-one slice of `inverse(alpha_m)` with
//!   the `Z`-image of the `S`-transformed depth-one slice of `beta_m`, solves
//!   for `eta`, and demands an identically zero residual after reduction of
//!   even single zeta values to powers of `L`.
//!
//! All heavy computations accept letter-count quotients so depth-one work
//! never materializes higher-depth words.

mod checks;
mod depth1;
mod hain;
mod phi;
mod series;
mod zseries;

pub use checks::{
    depth_coverage_check, hexagon_variant_check, weight_bound_check, HexagonReport,
};
pub use depth1::{depth1_verify, Depth1Report};
pub use hain::{hain_letter_images, hain_phi, hain_phi_mod};
pub use phi::{phi_ij, x_infinity, AssociatorData, Puncture};
pub use series::{alpha_m, alpha_m_mod, beta_m, beta_m_mod, gamma_m, gamma_m_mod};
pub use zseries::KnownPsiPart;

use geomlie::GeomError;
use ncseries::NCError;
use scalars::ScalarError;

/// Errors produced while building associator data or running verifications.
#[derive(Debug, thiserror::Error)]
pub enum AssocError {
    /// An associator was requested for a pair of equal punctures.
    #[error("associator requires two distinct punctures")]
    EqualPunctures,
    /// A series was supplied on the wrong alphabet.
    #[error("expected a series on the {expected} alphabet")]
    WrongAlphabet {
        /// Name of the alphabet the operation needs.
        expected: &'static str,
    },
    /// A constructed series failed an associator structure requirement.
    #[error("malformed associator series: {0}")]
    BadAssociator(&'static str),
    /// The depth-one comparison left a nonzero residual after reduction.
    #[error("depth-one residual is nonzero:\n{0}")]
    NonzeroResidual(String),
    /// The word used to solve for the unknown coefficient carries no pivot.
    #[error("pivot word has no usable coefficient")]
    PivotMissing,
    /// Two independent computations of the same quantity disagree.
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    /// A filtration depth outside the implemented range was requested.
    #[error("unsupported filtration depth {0}")]
    DepthRange(usize),
    /// Error bubbled up from series arithmetic.
    #[error(transparent)]
    Series(#[from] NCError),
    /// Error bubbled up from derivation arithmetic.
    #[error(transparent)]
    Geom(#[from] GeomError),
    /// Error bubbled up from scalar arithmetic.
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
