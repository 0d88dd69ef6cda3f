//! Words over the two-letter alphabet `e0`, `e1` and the shuffle product.

use crate::Int;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// A word over `{e0, e1}`, stored as bytes 0 and 1.
///
/// Weight is the length; a word is admissible when it begins with `e1` and
/// ends with `e0`. Admissible words are in bijection with integer
/// compositions: `e1 e0^{k_1-1} e1 e0^{k_2-1} ... e1 e0^{k_r-1}` maps to
/// `(k_1, ..., k_r)`. Admissibility forces `k_r >= 2` and allows `k_i = 1`
/// elsewhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaWord(Vec<u8>);

impl ZetaWord {
    /// Builds from raw letters; every entry must be 0 or 1.
    pub fn from_letters(letters: &[u8]) -> Self {
        assert!(
            letters.iter().all(|&c| c <= 1),
            "letters must be 0 (e0) or 1 (e1)"
        );
        ZetaWord(letters.to_vec())
    }

    /// Parses a string of `0`/`1` characters, e.g. `"100"` for zeta(3).
    pub fn parse_binary(s: &str) -> Result<Self, String> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => letters.push(0),
                '1' => letters.push(1),
                _ => return Err(format!("invalid letter {c:?} in word {s:?}")),
            }
        }
        Ok(ZetaWord(letters))
    }

    /// Builds the admissible word of a composition (all parts >= 1, last >= 2).
    pub fn from_composition(comp: &[u64]) -> Self {
        assert!(!comp.is_empty(), "empty composition");
        assert!(comp.iter().all(|&k| k >= 1), "composition parts must be >= 1");
        assert!(*comp.last().unwrap() >= 2, "last part must be >= 2");
        let mut letters = Vec::new();
        for &k in comp {
            letters.push(1);
            letters.extend(std::iter::repeat(0).take((k - 1) as usize));
        }
        ZetaWord(letters)
    }

    /// The composition of an admissible word; `None` if not admissible.
    pub fn to_composition(&self) -> Option<Vec<u64>> {
        if !self.is_admissible() {
            return None;
        }
        let mut comp = Vec::new();
        for &c in &self.0 {
            if c == 1 {
                comp.push(1);
            } else {
                *comp.last_mut().unwrap() += 1;
            }
        }
        Some(comp)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Number of `e1` letters; for admissible words this is the depth.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&c| c == 1).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        !self.0.is_empty() && self.0[0] == 1 && *self.0.last().unwrap() == 0
    }

    /// Binary string form, e.g. `"10010000"`.
    pub fn to_binary_string(&self) -> String {
        self.0.iter().map(|&c| if c == 0 { '0' } else { '1' }).collect()
    }
}

impl fmt::Debug for ZetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZetaWord({})", self.to_binary_string())
    }
}

impl fmt::Display for ZetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_composition() {
            Some(comp) => {
                let parts: Vec<String> = comp.iter().map(|k| k.to_string()).collect();
                write!(f, "z({})", parts.join(","))
            }
            None => write!(f, "z[{}]", self.to_binary_string()),
        }
    }
}

/// Shuffle product of two letter sequences, with multiplicities.
///
/// Defined by the usual recursion: `au sh bv = a (u sh bv) + b (au sh v)`.
/// Works for any byte alphabet, so it is shared by zeta words and the
/// noncommutative series words. Time is proportional to the output size,
/// about `C(|u|+|v|, |u|)` distinct words.
pub fn shuffle_words(u: &[u8], v: &[u8]) -> BTreeMap<Vec<u8>, Int> {
    fn merge(into: &mut BTreeMap<Vec<u8>, Int>, word: Vec<u8>, mult: Int) {
        *into.entry(word).or_default() += mult;
    }
    if u.is_empty() {
        let mut out = BTreeMap::new();
        merge(&mut out, v.to_vec(), Int::one());
        return out;
    }
    if v.is_empty() {
        let mut out = BTreeMap::new();
        merge(&mut out, u.to_vec(), Int::one());
        return out;
    }
    let mut out = BTreeMap::new();
    for (head, u2, v2) in [(u[0], &u[1..], v), (v[0], u, &v[1..])] {
        for (w, m) in shuffle_words(u2, v2) {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(head);
            word.extend_from_slice(&w);
            merge(&mut out, word, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent shuffle oracle: enumerate every interleaving by choosing
    /// which output positions come from `u` (bitmask enumeration), which is a
    /// different algorithm from the recursive definition used by the library.
    fn shuffle_oracle(u: &[u8], v: &[u8]) -> BTreeMap<Vec<u8>, Int> {
        let n = u.len() + v.len();
        let mut out: BTreeMap<Vec<u8>, Int> = BTreeMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != u.len() {
                continue;
            }
            let (mut iu, mut iv) = (0, 0);
            let mut word = Vec::with_capacity(n);
            for pos in 0..n {
                if mask & (1 << pos) != 0 {
                    word.push(u[iu]);
                    iu += 1;
                } else {
                    word.push(v[iv]);
                    iv += 1;
                }
            }
            *out.entry(word).or_default() += Int::one();
        }
        out
    }

    #[test]
    fn shuffle_matches_bitmask_oracle_exhaustively_small() {
        for lu in 0..=4usize {
            for lv in 0..=4usize {
                for cu in 0..(1u32 << lu) {
                    for cv in 0..(1u32 << lv) {
                        let u: Vec<u8> = (0..lu).map(|i| ((cu >> i) & 1) as u8).collect();
                        let v: Vec<u8> = (0..lv).map(|i| ((cv >> i) & 1) as u8).collect();
                        assert_eq!(shuffle_words(&u, &v), shuffle_oracle(&u, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn shuffle_frozen_example() {
        // e1 sh e1e0 = 2 e1e1e0 + e1e0e1 (cross-checked by the bitmask
        // oracle above before freezing).
        let got = shuffle_words(&[1], &[1, 0]);
        let mut want = BTreeMap::new();
        want.insert(vec![1, 1, 0], Int::from(2));
        want.insert(vec![1, 0, 1], Int::from(1));
        assert_eq!(got, want);
    }

    #[test]
    fn shuffle_commutative_and_associative_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let mk = |rng: &mut ChaCha8Rng| -> Vec<u8> {
                let len = rng.gen_range(0..=6);
                (0..len).map(|_| rng.gen_range(0..2u8)).collect()
            };
            let (a, b, c) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
            if a.len() + b.len() + c.len() > 12 {
                continue; // keep the triple product sizes moderate
            }
            assert_eq!(shuffle_words(&a, &b), shuffle_words(&b, &a));
            // (a sh b) sh c = a sh (b sh c), comparing multiset expansions.
            let mut lhs: BTreeMap<Vec<u8>, Int> = BTreeMap::new();
            for (w, m) in shuffle_words(&a, &b) {
                for (w2, m2) in shuffle_words(&w, &c) {
                    *lhs.entry(w2).or_default() += &m * m2;
                }
            }
            let mut rhs: BTreeMap<Vec<u8>, Int> = BTreeMap::new();
            for (w, m) in shuffle_words(&b, &c) {
                for (w2, m2) in shuffle_words(&a, &w) {
                    *rhs.entry(w2).or_default() += &m * m2;
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn composition_round_trip() {
        let w = ZetaWord::parse_binary("10010000").unwrap();
        assert!(w.is_admissible());
        assert_eq!(w.to_composition().unwrap(), vec![3, 5]);
        assert_eq!(w.weight(), 8);
        assert_eq!(w.depth(), 2);
        assert_eq!(ZetaWord::from_composition(&[3, 5]), w);
        assert_eq!(format!("{w}"), "z(3,5)");

        let bad = ZetaWord::parse_binary("0101").unwrap();
        assert!(!bad.is_admissible());
        assert_eq!(bad.to_composition(), None);
        assert_eq!(format!("{bad}"), "z[0101]");

        // zeta(1, 2) is admissible: leading parts may be 1.
        let w12 = ZetaWord::from_composition(&[1, 2]);
        assert_eq!(w12.to_binary_string(), "110");
        assert!(w12.is_admissible());
    }
}
