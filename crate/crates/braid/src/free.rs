//! Reduced words in the free group on two generators.
//!
//! Letters are signed indices: `+1`/`-1` for the first generator and its
//! inverse, `+2`/`-2` for the second. Words are kept reduced (no adjacent
//! letter/inverse pairs), which makes equality literal.

use std::fmt;

/// Reduced word in the free group on two generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i8>,
}

/// First generator.
pub const ALPHA: i8 = 1;
/// Second generator.
pub const BETA: i8 = 2;

impl FreeWord {
    /// The empty word.
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// Builds a word from signed letters, reducing adjacent inverse pairs.
    pub fn from_letters(letters: &[i8]) -> Self {
        let mut reduced: Vec<i8> = Vec::with_capacity(letters.len());
        for &l in letters {
            assert!(matches!(l, 1 | -1 | 2 | -2), "letter out of range: {l}");
            if reduced.last() == Some(&-l) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        FreeWord { letters: reduced }
    }

    /// Single generator raised to a power.
    pub fn generator(letter: i8, power: i64) -> Self {
        assert!(matches!(letter, 1 | 2), "generator must be 1 or 2");
        let l = if power >= 0 { letter } else { -letter };
        FreeWord {
            letters: vec![l; power.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation followed by reduction.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Conjugate `g self g^{-1}`.
    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.mul(self).mul(&g.inverse())
    }

    /// Net exponents of the two generators.
    pub fn abelianized(&self) -> (i64, i64) {
        let mut counts = (0i64, 0i64);
        for &l in &self.letters {
            match l {
                1 => counts.0 += 1,
                -1 => counts.0 -= 1,
                2 => counts.1 += 1,
                _ => counts.1 -= 1,
            }
        }
        counts
    }

    /// Total signed exponent over both generators.
    pub fn exponent_sum(&self) -> i64 {
        let (x, y) = self.abelianized();
        x + y
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.letters {
            match l {
                1 => write!(f, "A")?,
                -1 => write!(f, "A'")?,
                2 => write!(f, "B")?,
                _ => write!(f, "B'")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The commutator `[alpha, beta]` of the two generators.
pub fn theta() -> FreeWord {
    FreeWord::from_letters(&[1, 2, -1, -2])
}
