//! The three-strand braid group acting on the rank-two free group.
//!
//! Words in the two braid generators are signed letter lists (`+1`/`-1` for
//! the first generator, `+2`/`-2` for the second). A braid word acts through
//! the automorphism table: the first generator fixes `alpha` and sends
//! `beta` to `beta alpha`; the second sends `alpha` to `alpha beta^{-1}` and
//! fixes `beta`. Words act with the leftmost letter outermost, so `act` is a
//! homomorphism. The projection onto 2x2 integer matrices sends the first
//! generator to `[[1,1],[0,1]]` and the second to `[[1,0],[-1,1]]`, and the
//! rational cocycle is the homomorphism to multiples of `L` taking the value
//! `-L/24` on both generators.

use crate::free::{theta, FreeWord, ALPHA, BETA};
use scalars::{ratio, Mat2, Scalar};

/// Automorphism of the free group, given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidAuto {
    pub image_alpha: FreeWord,
    pub image_beta: FreeWord,
}

impl BraidAuto {
    pub fn identity() -> Self {
        BraidAuto {
            image_alpha: FreeWord::generator(ALPHA, 1),
            image_beta: FreeWord::generator(BETA, 1),
        }
    }

    /// Applies the automorphism letterwise to a word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            let image = match l {
                1 => self.image_alpha.clone(),
                -1 => self.image_alpha.inverse(),
                2 => self.image_beta.clone(),
                _ => self.image_beta.inverse(),
            };
            out = out.mul(&image);
        }
        out
    }

    /// Composition `self o other` (apply `other` first).
    pub fn compose(&self, other: &BraidAuto) -> BraidAuto {
        BraidAuto {
            image_alpha: self.apply(&other.image_alpha),
            image_beta: self.apply(&other.image_beta),
        }
    }
}

fn generator_auto(letter: i8) -> BraidAuto {
    let alpha = FreeWord::generator(ALPHA, 1);
    let beta = FreeWord::generator(BETA, 1);
    match letter {
        // alpha -> alpha, beta -> beta alpha
        1 => BraidAuto {
            image_alpha: alpha,
            image_beta: FreeWord::from_letters(&[2, 1]),
        },
        // inverse: alpha -> alpha, beta -> beta alpha^{-1}
        -1 => BraidAuto {
            image_alpha: alpha,
            image_beta: FreeWord::from_letters(&[2, -1]),
        },
        // alpha -> alpha beta^{-1}, beta -> beta
        2 => BraidAuto {
            image_alpha: FreeWord::from_letters(&[1, -2]),
            image_beta: beta,
        },
        // inverse: alpha -> alpha beta, beta -> beta
        _ => BraidAuto {
            image_alpha: FreeWord::from_letters(&[1, 2]),
            image_beta: beta,
        },
    }
}

/// Action of a braid word, leftmost letter outermost.
pub fn act(word: &[i8]) -> BraidAuto {
    let mut out = BraidAuto::identity();
    for &l in word {
        assert!(matches!(l, 1 | -1 | 2 | -2), "letter out of range: {l}");
        out = out.compose(&generator_auto(l));
    }
    out
}

/// Whether the automorphism fixes the commutator of the generators.
pub fn theta_fixed(auto: &BraidAuto) -> bool {
    auto.apply(&theta()) == theta()
}

/// The braid word whose action realizes the modular inversion:
/// the inverse of (first, second, first).
pub fn s_tilde() -> Vec<i8> {
    vec![-1, -2, -1]
}

/// Concatenates `count` copies of a braid word.
pub fn repeat(word: &[i8], count: usize) -> Vec<i8> {
    word.iter().copied().cycle().take(word.len() * count).collect()
}

/// Inverse braid word.
pub fn invert(word: &[i8]) -> Vec<i8> {
    word.iter().rev().map(|&l| -l).collect()
}

/// Projection to 2x2 integer matrices (unit determinant).
pub fn f_matrix(word: &[i8]) -> Mat2 {
    let t = Mat2::from_i64(1, 1, 0, 1);
    let t_inv = Mat2::from_i64(1, -1, 0, 1);
    // image of the second generator: [[1,0],[-1,1]] and its inverse
    let u = Mat2::from_i64(1, 0, -1, 1);
    let u_inv = Mat2::from_i64(1, 0, 1, 1);
    let mut out = Mat2::identity();
    for &l in word {
        let m = match l {
            1 => &t,
            -1 => &t_inv,
            2 => &u,
            _ => &u_inv,
        };
        out = out.mul(m);
    }
    out
}

/// The homomorphism to rational multiples of `L` with value `-L/24` on both
/// generators; its value on the inversion word is `L/8`.
pub fn r_cocycle(word: &[i8]) -> Scalar {
    let exponent_sum: i64 = word.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum();
    Scalar::lefschetz(1).scale(&ratio(-exponent_sum, 24))
}
