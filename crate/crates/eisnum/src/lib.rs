//! Numeric backend: exact q-expansions of the level-one modular forms,
//! regularized iterated integrals along the imaginary axis between the
//! tangential basepoints at 0 and `i inf`, and a high-precision oracle for
//! multiple zeta values.
//!
//! Conventions: `q = e^{2 pi i tau}`; integrand lists are path-ordered from
//! the 0-cusp, so the first entry is integrated nearest 0 and the last
//! nearest `i inf`; regularization drops the polynomial part at the upper
//! tangential basepoint and the pulled-back polynomial part at the lower
//! one. Zeta compositions are read inner-to-outer: `(k_1, ..., k_r)` sums
//! `n_1^{-k_1} ... n_r^{-k_r}` over `0 < n_1 < ... < n_r`, so convergence
//! requires `k_r >= 2`. All evaluators take an explicit precision in bits
//! and a q-truncation order where relevant.

mod forms;
mod identities;
mod integrate;
mod mixed;
mod mzv;
mod qexp;

pub use forms::{FormKind, FormSpec};
pub use identities::{
    exp_integral_e1, lambda_report, mellin_l_value, zeta35_residual, zeta3_residual,
    zeta5_residual, LambdaReport,
};
pub use integrate::{imaginary_axis_phase, real_parametrized, Integrator};
pub use mixed::MixedExpansion;
pub use mzv::MzvNumeric;
pub use qexp::{delta, eisenstein, tau_values, QExpansion};

/// Errors from the numeric backend.
#[derive(Debug, thiserror::Error)]
pub enum EisError {
    #[error("weight {0} is not an even integer >= 2")]
    BadWeight(u32),
    #[error("tau exponent {b} out of range for weight {weight} (need b <= weight - 2)")]
    TauExponentRange { b: u32, weight: u32 },
    #[error("the weight-2 series transforms anomalously and cannot be pulled back")]
    QuasimodularPullback,
    #[error("composition {0} is empty, has a zero part, or ends in 1")]
    BadComposition(String),
    #[error("cache error: {0}")]
    Cache(String),
}
