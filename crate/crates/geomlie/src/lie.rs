//! Free Lie algebra on the letters `a`, `b` in Lyndon normal form.
//!
//! A `LieElement` is a finite scalar combination of Lyndon basis words; the
//! associated Lie monomial is the standard bracketing of the word. Products
//! are computed by expanding into the free associative algebra (a faithful
//! representation) and decomposing back, using the triangularity of Lyndon
//! expansions: the lexicographically least word of a nonzero Lie polynomial
//! is Lyndon and carries the basis coefficient.

use crate::lyndon::{expand, is_lyndon};
use crate::GeomError;
use ncseries::{Alphabet, NCSeries};
use scalars::{Rational, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Scalar-coefficient polynomial in the free associative algebra on `a`, `b`.
pub(crate) type Poly = BTreeMap<Vec<u8>, Scalar>;

pub(crate) fn poly_add_scaled(dst: &mut Poly, src: &Poly, factor: &Scalar) {
    if factor.is_zero() {
        return;
    }
    for (w, c) in src {
        poly_add_term(dst, w.clone(), c.mul(factor));
    }
}

pub(crate) fn poly_add_term(dst: &mut Poly, word: Vec<u8>, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match dst.entry(word) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get().add(&c);
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn poly_sub(mut x: Poly, y: &Poly) -> Poly {
    for (w, c) in y {
        poly_add_term(&mut x, w.clone(), c.neg());
    }
    x
}

pub(crate) fn poly_commutator(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (wx, cx) in x {
        for (wy, cy) in y {
            let c = cx.mul(cy);
            let mut xy = wx.clone();
            xy.extend_from_slice(wy);
            let mut yx = wy.clone();
            yx.extend_from_slice(wx);
            poly_add_term(&mut out, xy, c.clone());
            poly_add_term(&mut out, yx, c.neg());
        }
    }
    out
}

/// Element of the free Lie algebra on `a`, `b` in Lyndon normal form.
#[derive(Clone, PartialEq)]
pub struct LieElement {
    terms: BTreeMap<Vec<u8>, Scalar>,
}

impl LieElement {
    /// The zero element.
    pub fn zero() -> Self {
        LieElement {
            terms: BTreeMap::new(),
        }
    }

    /// The letter `a`.
    pub fn letter_a() -> Self {
        Self::basis(&[0]).expect("a is Lyndon")
    }

    /// The letter `b`.
    pub fn letter_b() -> Self {
        Self::basis(&[1]).expect("b is Lyndon")
    }

    /// The standard bracketing of a single Lyndon word.
    pub fn basis(word: &[u8]) -> Result<Self, GeomError> {
        if !is_lyndon(word) {
            return Err(GeomError::NotLyndon(format!("{word:?}")));
        }
        let mut terms = BTreeMap::new();
        terms.insert(word.to_vec(), Scalar::one());
        Ok(LieElement { terms })
    }

    /// Iterates over (Lyndon word, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length in the support (0 for the zero element).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// True when every support word has the given length.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|w| w.len() == degree)
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            poly_add_term(&mut terms, w.clone(), c.clone());
        }
        LieElement { terms }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&Scalar::from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        LieElement {
            terms: self
                .terms
                .iter()
                .map(|(w, s)| (w.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> LieElement {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    /// Expands into the free associative algebra.
    pub(crate) fn to_poly(&self) -> Poly {
        let mut out = Poly::new();
        for (w, c) in &self.terms {
            for (u, r) in expand(w).iter() {
                poly_add_term(&mut out, u.clone(), c.scale(r));
            }
        }
        out
    }

    /// Expands into a truncated series on the `{a, b}` alphabet.
    pub fn to_series(&self, degree: usize) -> NCSeries {
        let poly = self.to_poly();
        NCSeries::from_coeffs(
            Alphabet::AB,
            degree,
            poly.into_iter().filter(|(w, _)| w.len() <= degree),
        )
    }

    /// Decomposes an associative polynomial that represents a Lie element.
    pub(crate) fn from_poly(poly: &Poly) -> Result<Self, GeomError> {
        let mut rest: Poly = poly
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        let mut terms = BTreeMap::new();
        while let Some((w, c)) = rest.pop_first() {
            if !is_lyndon(&w) {
                return Err(GeomError::NotLieElement(format!(
                    "lex-least support word {w:?} is not Lyndon"
                )));
            }
            for (u, r) in expand(&w).iter() {
                if u == &w {
                    continue;
                }
                poly_add_term(&mut rest, u.clone(), c.scale(r).neg());
            }
            terms.insert(w, c);
        }
        Ok(LieElement { terms })
    }

    /// Reads a Lie element off a series; fails when the series is not Lie.
    pub fn from_series(series: &NCSeries) -> Result<Self, GeomError> {
        let poly: Poly = series
            .coeffs()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Self::from_poly(&poly)
    }

    /// Lie bracket in Lyndon normal form.
    pub fn bracket(&self, other: &LieElement) -> LieElement {
        let com = poly_commutator(&self.to_poly(), &other.to_poly());
        LieElement::from_poly(&com).expect("commutator of Lie elements is Lie")
    }

    /// Applies the Lie-algebra endomorphism sending the letters to the images.
    pub fn apply_hom(&self, image_a: &LieElement, image_b: &LieElement) -> LieElement {
        let mut cache: BTreeMap<Vec<u8>, LieElement> = BTreeMap::new();
        let mut out = LieElement::zero();
        for (w, c) in &self.terms {
            let img = hom_of_word(w, image_a, image_b, &mut cache);
            out = out.add(&img.scale(c));
        }
        out
    }
}

fn hom_of_word(
    word: &[u8],
    image_a: &LieElement,
    image_b: &LieElement,
    cache: &mut BTreeMap<Vec<u8>, LieElement>,
) -> LieElement {
    if let Some(hit) = cache.get(word) {
        return hit.clone();
    }
    let result = if word.len() == 1 {
        if word[0] == 0 {
            image_a.clone()
        } else {
            image_b.clone()
        }
    } else {
        let (u, v) = crate::lyndon::standard_factorization(word);
        let left = hom_of_word(&u, image_a, image_b, cache);
        let right = hom_of_word(&v, image_a, image_b, cache);
        left.bracket(&right)
    };
    cache.insert(word.to_vec(), result.clone());
    result
}

/// Iterated bracket `[x, [x, ... [x, y]]]` with `m` copies of `x`.
pub fn ad_pow(x: &LieElement, m: usize, y: &LieElement) -> LieElement {
    let mut cur = y.clone();
    for _ in 0..m {
        cur = x.bracket(&cur);
    }
    cur
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let name: String = w.iter().map(|&l| if l == 0 { 'a' } else { 'b' }).collect();
            if first {
                write!(f, "({c})[{name}]")?;
                first = false;
            } else {
                write!(f, " + ({c})[{name}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::lyndon_words;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_element(rng: &mut ChaCha8Rng, pool: &[Vec<u8>]) -> LieElement {
        let mut out = LieElement::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let w = &pool[rng.gen_range(0..pool.len())];
            let c = Scalar::from_i64(rng.gen_range(-4..=4));
            out = out.add(&LieElement::basis(w).unwrap().scale(&c));
        }
        out
    }

    #[test]
    fn bracket_of_letter_with_itself_vanishes() {
        let a = LieElement::letter_a();
        assert!(a.bracket(&a).is_zero());
    }

    #[test]
    fn bracket_of_the_letters_is_the_basis_word_ab() {
        let a = LieElement::letter_a();
        let b = LieElement::letter_b();
        assert_eq!(a.bracket(&b), LieElement::basis(&[0, 1]).unwrap());
        assert_eq!(b.bracket(&a), LieElement::basis(&[0, 1]).unwrap().neg());
    }

    #[test]
    fn jacobi_identity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(97);
        let pool = lyndon_words(5);
        for _ in 0..200 {
            let x = random_element(&mut rng, &pool);
            let y = random_element(&mut rng, &pool);
            let z = random_element(&mut rng, &pool);
            let jac = x
                .bracket(&y.bracket(&z))
                .add(&y.bracket(&z.bracket(&x)))
                .add(&z.bracket(&x.bracket(&y)));
            assert!(jac.is_zero(), "Jacobi residual must vanish");
        }
    }

    #[test]
    fn decomposition_round_trips_through_the_associative_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(98);
        let pool = lyndon_words(6);
        for _ in 0..50 {
            let x = random_element(&mut rng, &pool);
            let back = LieElement::from_poly(&x.to_poly()).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn a_bare_word_is_not_a_lie_element() {
        let mut poly = Poly::new();
        poly.insert(vec![0, 1], Scalar::one());
        assert!(LieElement::from_poly(&poly).is_err());
    }

    #[test]
    fn letter_swap_endomorphism_fixes_the_bracket_of_the_letters() {
        // a -> b, b -> -a sends [a,b] to [b,-a] = [a,b].
        let theta = LieElement::basis(&[0, 1]).unwrap();
        let img_a = LieElement::letter_b();
        let img_b = LieElement::letter_a().neg();
        assert_eq!(theta.apply_hom(&img_a, &img_b), theta);
    }

    #[test]
    fn ad_power_expands_binomially() {
        // [a,[a,b]] = aab - 2 aba + baa as a series.
        let x = ad_pow(&LieElement::letter_a(), 2, &LieElement::letter_b());
        let s = x.to_series(3);
        assert_eq!(s.coeff(&[0, 0, 1]), Scalar::from_i64(1));
        assert_eq!(s.coeff(&[0, 1, 0]), Scalar::from_i64(-2));
        assert_eq!(s.coeff(&[1, 0, 0]), Scalar::from_i64(1));
        assert_eq!(s.num_terms(), 3);
    }
}
