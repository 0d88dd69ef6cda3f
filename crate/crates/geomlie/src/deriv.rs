//! Derivations of the free Lie algebra, given extensionally by letter images.
//!
//! A derivation is determined by its images on `a` and `b` and extends by the
//! Leibniz rule, both over brackets and over concatenation in the associative
//! envelope. The distinguished family constructed here annihilates `[a, b]`
//! and is indexed by even degree shifts; the conjugate family is obtained by
//! the letter swap `a -> b, b -> -a`.

use crate::lie::{ad_pow, poly_add_term, poly_sub, LieElement, Poly};
use crate::GeomError;
use ncseries::{Alphabet, NCSeries, Quotient};
use scalars::{ratio, Rational, Scalar};

/// Derivation of Lie(a, b), extensionally represented by letter images.
#[derive(Clone, PartialEq, Debug)]
pub struct Derivation {
    pub image_a: LieElement,
    pub image_b: LieElement,
    pub degree_shift: usize,
}

/// Letter images expanded in the associative algebra, for fast composition.
pub(crate) struct PolyImages {
    pub a: Poly,
    pub b: Poly,
}

impl Derivation {
    /// Builds a derivation from homogeneous letter images.
    pub fn new(image_a: LieElement, image_b: LieElement) -> Result<Self, GeomError> {
        let shift_a = (!image_a.is_zero()).then(|| image_a.max_degree() - 1);
        let shift_b = (!image_b.is_zero()).then(|| image_b.max_degree() - 1);
        let degree_shift = match (shift_a, shift_b) {
            (None, None) => 0,
            (Some(s), None) => s,
            (None, Some(s)) => s,
            (Some(s), Some(t)) if s == t => s,
            _ => {
                return Err(GeomError::NotHomogeneous(
                    "letter images have different degree shifts".into(),
                ))
            }
        };
        let hom_ok = image_a.is_homogeneous_of(degree_shift + 1)
            && image_b.is_homogeneous_of(degree_shift + 1);
        if !hom_ok {
            return Err(GeomError::NotHomogeneous(
                "letter images are not homogeneous".into(),
            ));
        }
        Ok(Derivation {
            image_a,
            image_b,
            degree_shift,
        })
    }

    /// The zero derivation.
    pub fn zero() -> Self {
        Derivation {
            image_a: LieElement::zero(),
            image_b: LieElement::zero(),
            degree_shift: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.image_a.is_zero() && self.image_b.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Derivation {
        Derivation {
            image_a: self.image_a.scale(c),
            image_b: self.image_b.scale(c),
            degree_shift: self.degree_shift,
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Derivation {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    pub(crate) fn poly_images(&self) -> PolyImages {
        PolyImages {
            a: self.image_a.to_poly(),
            b: self.image_b.to_poly(),
        }
    }

    /// Applies the derivation to a Lie element.
    pub fn apply_lie(&self, x: &LieElement) -> LieElement {
        let img = self.poly_images();
        let out = apply_to_poly(&img, &x.to_poly());
        LieElement::from_poly(&out).expect("derivation image of a Lie element is Lie")
    }

    /// Applies the derivation to a series by the Leibniz rule, keeping the
    /// series' truncation degree (and optional filtration quotient).
    pub fn apply_series(&self, s: &NCSeries, quot: Quotient) -> Result<NCSeries, GeomError> {
        if s.alphabet() != Alphabet::AB {
            return Err(GeomError::WrongAlphabet);
        }
        let img = self.poly_images();
        let degree = s.degree();
        let mut out = Poly::new();
        for (w, c) in s.coeffs() {
            leibniz_word(&img, w, c, degree, &mut out);
        }
        let series = NCSeries::from_coeffs(Alphabet::AB, degree, out);
        Ok(series.reduce_mod(quot)?)
    }

    /// Derivation bracket `[self, other]`, computed on letter images.
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation, GeomError> {
        ad_derivation_pow(self, 1, other)
    }
}

/// Applies a derivation (given by poly images) to an associative polynomial.
pub(crate) fn apply_to_poly(img: &PolyImages, p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (w, c) in p {
        leibniz_word(img, w, c, usize::MAX, &mut out);
    }
    out
}

fn leibniz_word(img: &PolyImages, w: &[u8], c: &Scalar, max_degree: usize, out: &mut Poly) {
    for (i, &letter) in w.iter().enumerate() {
        let image = if letter == 0 { &img.a } else { &img.b };
        for (u, r) in image {
            let new_len = w.len() - 1 + u.len();
            if new_len > max_degree {
                continue;
            }
            let mut word = Vec::with_capacity(new_len);
            word.extend_from_slice(&w[..i]);
            word.extend_from_slice(u);
            word.extend_from_slice(&w[i + 1..]);
            poly_add_term(out, word, c.mul(r));
        }
    }
}

/// Iterated derivation bracket `[x, [x, ... [x, y]]]` with `m` copies of `x`.
pub fn ad_derivation_pow(x: &Derivation, m: usize, y: &Derivation) -> Result<Derivation, GeomError> {
    let xi = x.poly_images();
    let mut cur = y.poly_images();
    for _ in 0..m {
        cur = PolyImages {
            a: poly_sub(apply_to_poly(&xi, &cur.a), &apply_to_poly(&cur, &xi.a)),
            b: poly_sub(apply_to_poly(&xi, &cur.b), &apply_to_poly(&cur, &xi.b)),
        };
    }
    Derivation::new(
        LieElement::from_poly(&cur.a)?,
        LieElement::from_poly(&cur.b)?,
    )
}

/// The derivation of nonnegative even degree shift `2n + 2` (n >= -1) that
/// annihilates `[a, b]`: `a` maps to `ad(a)^{2n+2}(b)` and `b` maps to
/// `(1/2) sum_{i+j=2n+1} (-1)^i [ad(a)^i(b), ad(a)^j(b)]`.
pub fn epsilon_dual(n: i64) -> Result<Derivation, GeomError> {
    if n < -1 {
        return Err(GeomError::BadIndex(n));
    }
    let m = (2 * n + 2) as usize;
    let a = LieElement::letter_a();
    let b = LieElement::letter_b();
    let image_a = ad_pow(&a, m, &b);
    let mut image_b = LieElement::zero();
    if n >= 0 {
        let top = (2 * n + 1) as usize;
        let ad_images: Vec<LieElement> = (0..=top).map(|i| ad_pow(&a, i, &b)).collect();
        for i in 0..=top {
            let j = top - i;
            let term = ad_images[i].bracket(&ad_images[j]);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            image_b = image_b.add(&term.scale_rat(&ratio(sign, 2)));
        }
    }
    Derivation::new(image_a, image_b)
}

/// The conjugate of `epsilon_dual(n)` by the letter swap `a -> b, b -> -a`.
pub fn epsilon(n: i64) -> Result<Derivation, GeomError> {
    let dual = epsilon_dual(n)?;
    let swap_a = LieElement::letter_b();
    let swap_b = LieElement::letter_a().neg();
    // image on a: swap(dual(swap^{-1}(a))) = swap(dual(-b)); likewise for b.
    let image_a = dual.image_b.apply_hom(&swap_a, &swap_b).neg();
    let image_b = dual.image_a.apply_hom(&swap_a, &swap_b);
    Derivation::new(image_a, image_b)
}

/// The sl2 weight string `ad(epsilon_dual(-1))^k (epsilon_dual(n))`, k = 0..=2n.
pub fn sl2_weight_basis(n: u64) -> Result<Vec<Derivation>, GeomError> {
    let lowering = epsilon_dual(-1)?;
    let mut out = Vec::with_capacity(2 * n as usize + 1);
    let mut cur = epsilon_dual(n as i64)?;
    for k in 0..=(2 * n as usize) {
        if k > 0 {
            cur = lowering.bracket(&cur)?;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// Checks annihilation of `[a, b]` for the full dual family up to the bound.
pub fn theta_is_annihilated(max_n: i64) -> Result<bool, GeomError> {
    let theta = LieElement::letter_a().bracket(&LieElement::letter_b());
    for n in -1..=max_n {
        let d = epsilon_dual(n)?;
        if !d.apply_lie(&theta).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
