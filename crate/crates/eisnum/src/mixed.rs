//! Finite sums of `c * q^n * tau^j` terms closed under the regularized
//! primitive, the core data structure of the iterated integrator.
//!
//! Here `q = e^{2 pi i tau}`. The regularized primitive implements
//! `R-int_tau^{i inf}`: polynomial terms (n = 0) integrate to
//! `-tau^{j+1}/(j+1)` (value 0 at the regularized upper end), while
//! q-suppressed terms (n >= 1) integrate by parts to an exact closed form
//! that decays at `i inf`.

use std::collections::BTreeMap;

use hpnum::{Complex, Real};
use num_traits::Zero;

use crate::qexp::QExpansion;

/// Sparse mixed q/tau expansion: term `(n, j) -> c` stands for `c q^n tau^j`.
#[derive(Clone, Debug)]
pub struct MixedExpansion {
    terms: BTreeMap<(u32, u32), Complex>,
    bits: u32,
    nq: u32,
}

impl MixedExpansion {
    /// The constant 1.
    pub fn one(bits: u32, nq: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), Complex::one(bits));
        MixedExpansion { terms, bits, nq }
    }

    /// Expansion `f(tau) tau^j` from a q-expansion, truncated at the working order.
    pub fn from_q_expansion(f: &QExpansion, j: u32, bits: u32, nq: u32) -> Self {
        let mut terms = BTreeMap::new();
        for (n, c) in f.coeffs.iter().enumerate().take(nq as usize + 1) {
            if !c.is_zero() {
                terms.insert(
                    (n as u32, j),
                    Complex::from_real(Real::from_rational(c, bits)),
                );
            }
        }
        MixedExpansion { terms, bits, nq }
    }

    /// Working precision in bits.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Termwise sum.
    pub fn add(&self, other: &MixedExpansion) -> MixedExpansion {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        assert_eq!(self.nq, other.nq, "truncation mismatch");
        let mut terms = self.terms.clone();
        for (key, v) in &other.terms {
            match terms.get_mut(key) {
                Some(acc) => *acc = &*acc + v,
                None => {
                    terms.insert(*key, v.clone());
                }
            }
        }
        MixedExpansion {
            terms,
            bits: self.bits,
            nq: self.nq,
        }
    }

    /// Product, truncating powers of q beyond the working order.
    pub fn mul(&self, other: &MixedExpansion) -> MixedExpansion {
        assert_eq!(self.bits, other.bits, "precision mismatch");
        assert_eq!(self.nq, other.nq, "truncation mismatch");
        let mut terms: BTreeMap<(u32, u32), Complex> = BTreeMap::new();
        for (&(n1, j1), c1) in &self.terms {
            for (&(n2, j2), c2) in &other.terms {
                if n1 + n2 > self.nq {
                    continue;
                }
                let key = (n1 + n2, j1 + j2);
                let prod = c1 * c2;
                match terms.get_mut(&key) {
                    Some(acc) => *acc = &*acc + &prod,
                    None => {
                        terms.insert(key, prod);
                    }
                }
            }
        }
        MixedExpansion {
            terms,
            bits: self.bits,
            nq: self.nq,
        }
    }

    /// Regularized primitive `R-int_tau^{i inf}` of the expansion.
    pub fn reg_primitive(&self) -> MixedExpansion {
        let bits = self.bits;
        let mut terms: BTreeMap<(u32, u32), Complex> = BTreeMap::new();
        let mut add = |key: (u32, u32), v: Complex| match terms.get_mut(&key) {
            Some(acc) => *acc = &*acc + &v,
            None => {
                terms.insert(key, v);
            }
        };
        for (&(n, j), c) in &self.terms {
            if n == 0 {
                let denom = Real::from_i64(i64::from(j) + 1, bits);
                add((0, j + 1), -&c.scale_real(&denom.recip()));
            } else {
                // Repeated integration by parts against e^{A tau}, A = 2 pi i n:
                // each pass divides by A and lowers the tau exponent by one.
                let a = Complex::two_pi_i(bits).scale_real(&Real::from_i64(i64::from(n), bits));
                let a_inv = a.recip();
                let mut p = a_inv.clone();
                for r in 0..=j {
                    add((n, j - r), -&(c * &p));
                    let factor = Real::from_i64(-i64::from(j - r), bits);
                    p = (&p * &a_inv).scale_real(&factor);
                }
            }
        }
        MixedExpansion {
            terms,
            bits,
            nq: self.nq,
        }
    }

    /// Value at `tau = i t` (so `q = e^{-2 pi t}`), summed term by term.
    pub fn eval_at_it(&self, t: &Real) -> Complex {
        let bits = self.bits;
        let q = (-&(&Real::pi(bits).shift2(1) * t)).exp();
        let mut total = Complex::zero(bits);
        for (&(n, j), c) in &self.terms {
            let mag = &q.powi(i64::from(n)) * &t.powi(i64::from(j));
            let rotated = match j % 4 {
                0 => Complex::from_real(mag),
                1 => Complex::new(Real::zero(bits), mag),
                2 => Complex::from_real(-&mag),
                _ => Complex::new(Real::zero(bits), -&mag),
            };
            total = &total + &(c * &rotated);
        }
        total
    }
}
