//! Truncated noncommutative power series over the scalar ring.

use crate::{FiltrationKind, NCError};
use scalars::{Rational, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// The two supported two-letter alphabets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    /// `{x0, x1}`: the genus-zero letters.
    X01,
    /// `{a, b}`: the genus-one letters.
    AB,
}

impl Alphabet {
    pub fn letter_name(self, idx: u8) -> &'static str {
        match (self, idx) {
            (Alphabet::X01, 0) => "x0",
            (Alphabet::X01, 1) => "x1",
            (Alphabet::AB, 0) => "a",
            (Alphabet::AB, 1) => "b",
            _ => panic!("letter index out of range"),
        }
    }
}

/// Optional multiplicative quotient: drop words whose filtration degree
/// exceeds the bound. Only additive-under-concatenation filtrations are
/// allowed, which keeps quotient arithmetic exact on the retained words.
pub type Quotient = Option<(FiltrationKind, usize)>;

/// A noncommutative polynomial in two letters, exact up to a stated total
/// degree. Words are sequences of letter indices (0 or 1); no zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct NCSeries {
    alphabet: Alphabet,
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, Scalar>,
}

impl NCSeries {
    pub fn zero(alphabet: Alphabet, degree: usize) -> Self {
        NCSeries { alphabet, degree, coeffs: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet, degree: usize) -> Self {
        let mut s = NCSeries::zero(alphabet, degree);
        s.coeffs.insert(Vec::new(), Scalar::one());
        s
    }

    /// The single letter with the given index (0 or 1).
    pub fn letter(alphabet: Alphabet, idx: u8, degree: usize) -> Self {
        assert!(idx <= 1, "letter index out of range");
        let mut s = NCSeries::zero(alphabet, degree);
        if degree >= 1 {
            s.coeffs.insert(vec![idx], Scalar::one());
        }
        s
    }

    /// A single word with the given coefficient.
    pub fn monomial(alphabet: Alphabet, word: &[u8], coeff: Scalar, degree: usize) -> Self {
        assert!(word.iter().all(|&l| l <= 1), "letter index out of range");
        let mut s = NCSeries::zero(alphabet, degree);
        if word.len() <= degree && !coeff.is_zero() {
            s.coeffs.insert(word.to_vec(), coeff);
        }
        s
    }

    pub fn from_coeffs(
        alphabet: Alphabet,
        degree: usize,
        coeffs: impl IntoIterator<Item = (Vec<u8>, Scalar)>,
    ) -> Self {
        let mut s = NCSeries::zero(alphabet, degree);
        for (w, c) in coeffs {
            s.add_to(w, c);
        }
        s
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, word: &[u8]) -> Scalar {
        self.coeffs.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&[])
    }

    fn add_to(&mut self, word: Vec<u8>, c: Scalar) {
        debug_assert!(word.iter().all(|&l| l <= 1));
        if c.is_zero() || word.len() > self.degree {
            return;
        }
        match self.coeffs.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Restates the series at a (usually lower) truncation degree.
    pub fn truncate(&self, degree: usize) -> Self {
        let mut s = NCSeries::zero(self.alphabet, degree);
        for (w, c) in &self.coeffs {
            if w.len() <= degree {
                s.coeffs.insert(w.clone(), c.clone());
            }
        }
        s
    }

    pub fn add(&self, other: &NCSeries) -> Result<NCSeries, NCError> {
        if self.alphabet != other.alphabet {
            return Err(NCError::AlphabetMismatch);
        }
        let mut out = self.truncate(self.degree.min(other.degree));
        for (w, c) in &other.coeffs {
            out.add_to(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCSeries) -> Result<NCSeries, NCError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCSeries {
        let mut out = NCSeries::zero(self.alphabet, self.degree);
        for (w, c) in &self.coeffs {
            out.coeffs.insert(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NCSeries {
        let mut out = NCSeries::zero(self.alphabet, self.degree);
        for (w, k) in &self.coeffs {
            let prod = k.mul(c);
            if !prod.is_zero() {
                out.coeffs.insert(w.clone(), prod);
            }
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> NCSeries {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    /// Concatenation (Cauchy) product, truncated at the smaller degree.
    pub fn concat_mul(&self, other: &NCSeries) -> Result<NCSeries, NCError> {
        self.mul_mod(other, None)
    }

    /// Concatenation product in a filtration quotient: words above the
    /// bound are dropped, which is exact because the allowed filtrations
    /// add under concatenation.
    pub fn mul_mod(&self, other: &NCSeries, quot: Quotient) -> Result<NCSeries, NCError> {
        if self.alphabet != other.alphabet {
            return Err(NCError::AlphabetMismatch);
        }
        self.check_quotient(quot)?;
        let degree = self.degree.min(other.degree);
        let mut out = NCSeries::zero(self.alphabet, degree);
        for (u, cu) in &self.coeffs {
            if u.len() > degree {
                continue;
            }
            for (v, cv) in &other.coeffs {
                if u.len() + v.len() > degree {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                if !keeps(&w, quot) {
                    continue;
                }
                out.add_to(w, cu.mul(cv));
            }
        }
        Ok(out)
    }

    fn check_quotient(&self, quot: Quotient) -> Result<(), NCError> {
        if let Some((f, _)) = quot {
            if !f.is_additive() || !f.valid_for(self.alphabet) {
                return Err(NCError::BadFiltration(f, self.alphabet));
            }
        }
        Ok(())
    }

    /// Drops words outside the quotient (projection onto the quotient).
    pub fn reduce_mod(&self, quot: Quotient) -> Result<NCSeries, NCError> {
        self.check_quotient(quot)?;
        let mut out = NCSeries::zero(self.alphabet, self.degree);
        for (w, c) in &self.coeffs {
            if keeps(w, quot) {
                out.coeffs.insert(w.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<NCSeries, NCError> {
        self.exp_mod(None)
    }

    pub fn exp_mod(&self, quot: Quotient) -> Result<NCSeries, NCError> {
        if !self.constant_term().is_zero() {
            return Err(NCError::ConstantTerm("exp needs zero constant term"));
        }
        // Horner: exp(s) = 1 + s(1 + (s/2)(1 + (s/3)(...)))
        let n = self.degree;
        let one = NCSeries::one(self.alphabet, n);
        let mut acc = one.clone();
        for k in (1..=n.max(1)).rev() {
            let step = self.scale_rat(&scalars::ratio(1, k as i64));
            acc = one.add(&step.mul_mod(&acc, quot)?)?;
        }
        acc.reduce_mod(quot)
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Result<NCSeries, NCError> {
        self.log_mod(None)
    }

    pub fn log_mod(&self, quot: Quotient) -> Result<NCSeries, NCError> {
        if self.constant_term() != Scalar::one() {
            return Err(NCError::ConstantTerm("log needs constant term one"));
        }
        let n = self.degree;
        let u = self.sub(&NCSeries::one(self.alphabet, n))?;
        // log(1+u) = u (c1 + u (c2 + u (...))) with ck = (-1)^{k+1}/k.
        let mut acc = NCSeries::zero(self.alphabet, n);
        for k in (1..=n.max(1)).rev() {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let ck = NCSeries::one(self.alphabet, n).scale_rat(&scalars::ratio(sign, k as i64));
            acc = ck.add(&u.mul_mod(&acc, quot)?)?;
        }
        u.mul_mod(&acc, quot)
    }

    /// Multiplicative inverse of a series with constant term one.
    pub fn inverse(&self) -> Result<NCSeries, NCError> {
        self.inverse_mod(None)
    }

    pub fn inverse_mod(&self, quot: Quotient) -> Result<NCSeries, NCError> {
        if self.constant_term() != Scalar::one() {
            return Err(NCError::ConstantTerm("inverse needs constant term one"));
        }
        let n = self.degree;
        let u = self.sub(&NCSeries::one(self.alphabet, n))?;
        // (1+u)^{-1} = 1 - u(1 - u(...)).
        let one = NCSeries::one(self.alphabet, n);
        let mut acc = one.clone();
        for _ in 0..n {
            acc = one.sub(&u.mul_mod(&acc, quot)?)?;
        }
        acc.reduce_mod(quot)
    }

    /// The unique concatenation-algebra homomorphism extending the letter
    /// images, truncated at the smaller of the source and image degrees.
    /// Images must have zero constant term (so their lowest degree is at
    /// least 1, which makes truncation exact).
    pub fn substitute(&self, images: &[NCSeries; 2]) -> Result<NCSeries, NCError> {
        self.substitute_mod(images, None)
    }

    /// Substitution with quotient arithmetic in the target ring. The
    /// quotient by an additive filtration is a ring congruence, so the
    /// retained part of the result is exact whenever the source is.
    pub fn substitute_mod(
        &self,
        images: &[NCSeries; 2],
        quot: Quotient,
    ) -> Result<NCSeries, NCError> {
        if images[0].alphabet != images[1].alphabet {
            return Err(NCError::AlphabetMismatch);
        }
        let target = images[0].alphabet;
        let degree = self
            .degree
            .min(images[0].degree)
            .min(images[1].degree);
        for img in images {
            if !img.constant_term().is_zero() {
                return Err(NCError::ConstantTerm("letter image has a constant term"));
            }
            if let Some((f, _)) = quot {
                if !f.is_additive() || !f.valid_for(target) {
                    return Err(NCError::BadFiltration(f, target));
                }
            }
        }
        // Walk words in sorted order, sharing prefix products.
        let one = NCSeries::one(target, degree);
        let mut acc = NCSeries::zero(target, degree);
        let mut letters: Vec<u8> = Vec::new();
        let mut stack: Vec<NCSeries> = Vec::new();
        for (w, c) in &self.coeffs {
            let common = letters
                .iter()
                .zip(w.iter())
                .take_while(|(a, b)| a == b)
                .count();
            letters.truncate(common);
            stack.truncate(common);
            for &l in &w[common..] {
                let prev = stack.last().unwrap_or(&one);
                let next = prev.mul_mod(&images[l as usize], quot)?;
                letters.push(l);
                stack.push(next);
            }
            let prod = stack.last().unwrap_or(&one);
            acc = acc.add(&prod.scale(c))?;
        }
        Ok(acc)
    }
}

fn keeps(word: &[u8], quot: Quotient) -> bool {
    match quot {
        None => true,
        Some((f, r)) => f.word_degree(word) <= r,
    }
}

impl fmt::Display for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: String = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&l| self.alphabet.letter_name(l)).collect()
            };
            write!(f, "({c})*{word}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
