//! Modular-group action on series over `{a,b}` by linear letter
//! substitution.

use crate::series::{Alphabet, NCSeries, Quotient};
use crate::NCError;
use scalars::{Mat2, Scalar};

impl NCSeries {
    /// Acts by `gamma` (a 2×2 matrix over the scalar ring with determinant
    /// one): the letters transform by the inverse matrix applied on the
    /// right of the row `(a, b)`. Composition follows the matrix product
    /// in application order: acting by `g` and then by `h` equals acting
    /// by `g h`.
    pub fn sl2_act(&self, gamma: &Mat2) -> Result<NCSeries, NCError> {
        self.sl2_act_mod(gamma, None)
    }

    pub fn sl2_act_mod(&self, gamma: &Mat2, quot: Quotient) -> Result<NCSeries, NCError> {
        if self.alphabet() != Alphabet::AB {
            return Err(NCError::AlphabetMismatch);
        }
        if gamma.det() != Scalar::one() {
            return Err(NCError::NotUnimodular);
        }
        let inv = gamma.inverse();
        let n = self.degree();
        let a = NCSeries::letter(Alphabet::AB, 0, n);
        let b = NCSeries::letter(Alphabet::AB, 1, n);
        // (a, b) -> (a, b) * gamma^{-1}.
        let image_a = a.scale(&inv.e[0][0]).add(&b.scale(&inv.e[1][0]))?;
        let image_b = a.scale(&inv.e[0][1]).add(&b.scale(&inv.e[1][1]))?;
        self.substitute_mod(&[image_a, image_b], quot)
    }
}
