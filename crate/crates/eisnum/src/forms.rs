//! Integrand descriptors: a level-one form times a power of tau.

use crate::qexp::{delta, eisenstein, QExpansion};
use crate::EisError;

/// Which level-one modular form supplies the q-expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Eisenstein series of the given even weight (>= 2).
    Eisenstein(u32),
    /// The weight-12 cusp form.
    Delta,
}

impl FormKind {
    /// Modular weight of the form.
    pub fn weight(self) -> u32 {
        match self {
            FormKind::Eisenstein(w) => w,
            FormKind::Delta => 12,
        }
    }
}

/// One integrand factor `f(tau) tau^b dtau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormSpec {
    pub kind: FormKind,
    /// Exponent of tau, constrained to `0 <= b <= weight - 2`.
    pub b: u32,
}

impl FormSpec {
    /// Builds a descriptor after checking the exponent range.
    pub fn new(kind: FormKind, b: u32) -> Result<FormSpec, EisError> {
        if let FormKind::Eisenstein(w) = kind {
            if w < 2 || w % 2 != 0 {
                return Err(EisError::BadWeight(w));
            }
        }
        if b + 2 > kind.weight() {
            return Err(EisError::TauExponentRange {
                b,
                weight: kind.weight(),
            });
        }
        Ok(FormSpec { kind, b })
    }

    /// Shorthand for an Eisenstein integrand.
    pub fn eis(weight: u32, b: u32) -> Result<FormSpec, EisError> {
        FormSpec::new(FormKind::Eisenstein(weight), b)
    }

    /// Shorthand for a cusp-form integrand.
    pub fn cusp(b: u32) -> Result<FormSpec, EisError> {
        FormSpec::new(FormKind::Delta, b)
    }

    /// Exact q-expansion of the underlying form to order `nq`.
    pub fn q_expansion(&self, nq: usize) -> QExpansion {
        match self.kind {
            FormKind::Eisenstein(w) => eisenstein(w, nq),
            FormKind::Delta => delta(nq),
        }
    }

    /// Image of the integrand under `tau -> -1/tau`, using the weight-w
    /// modularity `f(-1/tau) = tau^w f(tau)`: the sign is `(-1)^b` and the
    /// new exponent is `w - 2 - b`. The weight-2 Eisenstein series is
    /// rejected because its transformation law has an extra affine term.
    pub fn pullback_s(&self) -> Result<(i32, FormSpec), EisError> {
        if self.kind == FormKind::Eisenstein(2) {
            return Err(EisError::QuasimodularPullback);
        }
        let sign = if self.b % 2 == 0 { 1 } else { -1 };
        let flipped = FormSpec {
            kind: self.kind,
            b: self.kind.weight() - 2 - self.b,
        };
        Ok((sign, flipped))
    }
}
