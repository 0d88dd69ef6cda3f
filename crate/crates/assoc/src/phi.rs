//! Associator series between pairs of punctures on the thrice-punctured line.

use ncseries::{Alphabet, NCSeries, Quotient};
use scalars::{regularize, Scalar};

use crate::AssocError;

/// A puncture of the projective line minus `{0, 1, infinity}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Puncture {
    /// The puncture at 0.
    Zero,
    /// The puncture at 1.
    One,
    /// The puncture at infinity.
    Infinity,
}

/// An associator series tagged with its ordered pair of punctures.
#[derive(Debug, Clone)]
pub struct AssociatorData {
    pair: (Puncture, Puncture),
    series: NCSeries,
}

impl AssociatorData {
    /// Wraps a series after checking the associator structure requirements:
    /// constant term 1 and no degree-one part.
    pub fn new(pair: (Puncture, Puncture), series: NCSeries) -> Result<Self, AssocError> {
        if series.alphabet() != Alphabet::X01 {
            return Err(AssocError::WrongAlphabet { expected: "x0/x1" });
        }
        if !series.constant_term().sub(&Scalar::one()).is_zero() {
            return Err(AssocError::BadAssociator("constant term must be 1"));
        }
        for idx in 0..2u8 {
            if !series.coeff(&[idx]).is_zero() {
                return Err(AssocError::BadAssociator("degree-one part must vanish"));
            }
        }
        Ok(Self { pair, series })
    }

    /// The ordered pair of punctures this series connects.
    pub fn pair(&self) -> (Puncture, Puncture) {
        self.pair
    }

    /// Borrows the underlying series.
    pub fn series(&self) -> &NCSeries {
        &self.series
    }

    /// Consumes the wrapper and returns the underlying series.
    pub fn into_series(self) -> NCSeries {
        self.series
    }
}

/// The series `-x0 - x1` representing the letter attached to infinity.
pub fn x_infinity(degree: usize) -> NCSeries {
    let x0 = NCSeries::letter(Alphabet::X01, 0, degree);
    let x1 = NCSeries::letter(Alphabet::X01, 1, degree);
    x0.add(&x1).expect("letters share the alphabet").neg()
}

/// The canonical associator from 0 to 1, optionally pruned by a quotient.
pub(crate) fn phi_01_mod(degree: usize, quot: Quotient) -> NCSeries {
    let mut coeffs: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for len in 2..=degree {
        for mask in 0u64..(1u64 << len) {
            let word: Vec<u8> = (0..len).map(|i| ((mask >> i) & 1) as u8).collect();
            if let Some((kind, bound)) = quot {
                if kind.word_degree(&word) > bound {
                    continue;
                }
            }
            let reversed: Vec<u8> = word.iter().rev().copied().collect();
            let value = regularize(&reversed);
            if !value.is_zero() {
                coeffs.push((word, value));
            }
        }
    }
    NCSeries::from_coeffs(Alphabet::X01, degree, coeffs)
}

/// The associator series between two distinct punctures, truncated at
/// `degree`.
///
/// The series from 0 to 1 is canonical; the pair `(infinity, 1)` substitutes
/// the infinity letter for `x0`, the pair `(0, infinity)` substitutes it for
/// `x1`, and reversing a pair inverts the series.
pub fn phi_ij(i: Puncture, j: Puncture, degree: usize) -> Result<AssociatorData, AssocError> {
    Ok(AssociatorData {
        pair: (i, j),
        series: phi_ij_mod(i, j, degree, None)?,
    })
}

/// Quotient-pruned variant of [`phi_ij`] returning the bare series.
pub(crate) fn phi_ij_mod(
    i: Puncture,
    j: Puncture,
    degree: usize,
    quot: Quotient,
) -> Result<NCSeries, AssocError> {
    use Puncture::*;
    if i == j {
        return Err(AssocError::EqualPunctures);
    }
    let series = match (i, j) {
        (Zero, One) => phi_01_mod(degree, quot),
        (Infinity, One) => {
            let images = [x_infinity(degree), NCSeries::letter(Alphabet::X01, 1, degree)];
            phi_01_mod(degree, None).substitute_mod(&images, quot)?
        }
        (Zero, Infinity) => {
            let images = [NCSeries::letter(Alphabet::X01, 0, degree), x_infinity(degree)];
            phi_01_mod(degree, None).substitute_mod(&images, quot)?
        }
        (One, Zero) => phi_ij_mod(Zero, One, degree, quot)?.inverse_mod(quot)?,
        (One, Infinity) => phi_ij_mod(Infinity, One, degree, quot)?.inverse_mod(quot)?,
        (Infinity, Zero) => phi_ij_mod(Zero, Infinity, degree, quot)?.inverse_mod(quot)?,
        _ => unreachable!(),
    };
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalars::EqMode;

    #[test]
    fn degree_two_coefficients_are_plus_minus_zeta_two() {
        let phi = phi_ij(Puncture::Zero, Puncture::One, 4).unwrap();
        let zeta2 = Scalar::zeta_comp(&[2]);
        assert!(
            phi.series().coeff(&[0, 1]).eq_mode(&zeta2, EqMode::Formal, None),
            "coefficient of x0 x1 should be zeta(2)"
        );
        assert!(
            phi.series().coeff(&[1, 0]).eq_mode(&zeta2.neg(), EqMode::Formal, None),
            "coefficient of x1 x0 should be -zeta(2)"
        );
    }

    #[test]
    fn constant_term_one_and_no_degree_one_part() {
        let phi = phi_ij(Puncture::Infinity, Puncture::One, 5).unwrap();
        assert!(phi.series().constant_term().sub(&Scalar::one()).is_zero());
        assert!(phi.series().coeff(&[0]).is_zero());
        assert!(phi.series().coeff(&[1]).is_zero());
        AssociatorData::new(phi.pair(), phi.series().clone())
            .expect("substituted series keeps the associator shape");
    }

    #[test]
    fn reversed_pair_gives_the_inverse_series() {
        let degree = 6;
        let phi01 = phi_ij(Puncture::Zero, Puncture::One, degree).unwrap();
        let phi10 = phi_ij(Puncture::One, Puncture::Zero, degree).unwrap();
        let product = phi10.series().concat_mul(phi01.series()).unwrap();
        let diff = product.sub(&NCSeries::one(Alphabet::X01, degree)).unwrap();
        assert!(
            diff.is_zero(),
            "phi_10 * phi_01 should be exactly 1, got {} extra terms",
            diff.num_terms()
        );
    }

    #[test]
    fn equal_punctures_are_rejected() {
        assert!(matches!(
            phi_ij(Puncture::One, Puncture::One, 3),
            Err(AssocError::EqualPunctures)
        ));
    }

    #[test]
    fn infinity_letter_sums_to_zero_with_the_others() {
        let total = x_infinity(3)
            .add(&NCSeries::letter(Alphabet::X01, 0, 3))
            .unwrap()
            .add(&NCSeries::letter(Alphabet::X01, 1, 3))
            .unwrap();
        assert!(total.is_zero());
    }
}
