//! Word-degree filtrations on the two alphabets and the filtered pieces.

use crate::series::{Alphabet, NCSeries};
use crate::NCError;

/// The supported filtrations. `W` and `D` live on `{x0,x1}`; `A`, `B` and
/// `EllipticD1` live on `{a,b}`. `EllipticD1` has no word degree: it is a
/// membership-only notion (kernel of abelianization), see
/// [`NCSeries::in_elliptic_d1`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiltrationKind {
    /// Total degree (word length) on `{x0,x1}`.
    W,
    /// `x1`-count on `{x0,x1}`.
    D,
    /// `a`-count on `{a,b}`.
    A,
    /// `b`-count on `{a,b}`.
    B,
    /// Membership-only: series with zero abelianization.
    EllipticD1,
}

impl FiltrationKind {
    pub fn valid_for(self, alphabet: Alphabet) -> bool {
        match self {
            FiltrationKind::W | FiltrationKind::D => alphabet == Alphabet::X01,
            FiltrationKind::A | FiltrationKind::B | FiltrationKind::EllipticD1 => {
                alphabet == Alphabet::AB
            }
        }
    }

    /// Whether the word degree adds under concatenation (true for all
    /// graded kinds; `EllipticD1` has no word degree at all).
    pub fn is_additive(self) -> bool {
        !matches!(self, FiltrationKind::EllipticD1)
    }

    /// Degree of a word: length for `W`, letter counts otherwise.
    pub fn word_degree(self, word: &[u8]) -> usize {
        match self {
            FiltrationKind::W => word.len(),
            FiltrationKind::D | FiltrationKind::B => {
                word.iter().filter(|&&l| l == 1).count()
            }
            FiltrationKind::A => word.iter().filter(|&&l| l == 0).count(),
            FiltrationKind::EllipticD1 => panic!("membership-only filtration"),
        }
    }
}

impl NCSeries {
    /// The words of `F`-degree at most `r` (the `r`-th filtered piece).
    pub fn fil(&self, f: FiltrationKind, r: usize) -> Result<NCSeries, NCError> {
        if !f.valid_for(self.alphabet()) || !f.is_additive() {
            return Err(NCError::BadFiltration(f, self.alphabet()));
        }
        self.reduce_mod(Some((f, r)))
    }

    /// Commutative image: exponent pairs (letter-0 count, letter-1 count)
    /// with summed coefficients.
    pub fn abelianize(&self) -> std::collections::BTreeMap<(usize, usize), scalars::Scalar> {
        let mut out: std::collections::BTreeMap<(usize, usize), scalars::Scalar> =
            std::collections::BTreeMap::new();
        for (w, c) in self.coeffs() {
            let ones = w.iter().filter(|&&l| l == 1).count();
            let key = (w.len() - ones, ones);
            let entry = out.entry(key).or_insert_with(scalars::Scalar::zero);
            *entry = entry.add(c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// First elliptic depth piece: membership means the abelianization
    /// vanishes (only makes sense for zero-constant-term comparisons; the
    /// constant term participates like any other coefficient).
    pub fn in_elliptic_d1(&self) -> bool {
        self.abelianize().is_empty()
    }
}
