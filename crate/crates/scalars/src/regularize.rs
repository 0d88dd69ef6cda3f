//! Shuffle regularization of binary words.
//!
//! Extends the zeta symbol from admissible words to all words as the unique
//! shuffle-algebra homomorphism sending both single letters to zero. The
//! result is always a rational combination of single admissible zeta symbols.

use crate::scalar::Scalar;
use crate::word::{shuffle_words, ZetaWord};
use crate::{Int, Rational};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

static CACHE: Lazy<Mutex<HashMap<Vec<u8>, Scalar>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Regularized zeta symbol of an arbitrary word over `{0, 1}`.
///
/// Pinned values: the empty word gives `1`, pure powers of a single letter
/// give `0`, admissible words give their zeta symbol. Non-admissible words
/// are rewritten by stripping a letter off the offending end: a word `w`
/// with `k + 1` leading zeros appears with coefficient `k + 1` inside
/// `0 sh (w minus one leading zero)`, whose regularization vanishes, so `w`
/// is a combination of the remaining shuffle terms; mirrored with a trailing
/// one. Every replacement strictly lowers the number of (0-before-1) pairs,
/// so the recursion terminates.
pub fn regularize(word: &[u8]) -> Scalar {
    assert!(word.iter().all(|&b| b <= 1), "letters must be 0 or 1");
    if let Some(cached) = CACHE.lock().unwrap().get(word) {
        return cached.clone();
    }
    let result = compute(word);
    CACHE
        .lock()
        .unwrap()
        .entry(word.to_vec())
        .or_insert(result)
        .clone()
}

fn compute(word: &[u8]) -> Scalar {
    if word.is_empty() {
        return Scalar::one();
    }
    if word.iter().all(|&b| b == 0) || word.iter().all(|&b| b == 1) {
        return Scalar::zero();
    }
    if word[0] == 0 {
        // w = 0^{k+1} u with u starting in 1; use 0 = reg(0 sh 0^k u).
        return strip(word, &word[1..], 0);
    }
    if *word.last().unwrap() == 1 {
        // w = u 1^{k+1} with u ending in 0; use 0 = reg(1 sh u 1^k).
        return strip(word, &word[..word.len() - 1], 1);
    }
    Scalar::zeta(ZetaWord::from_letters(word))
}

/// Solves for `reg(w)` out of `0 = reg(letter sh shorter)`, where `shorter`
/// is `w` with one copy of `letter` removed from the offending end.
fn strip(w: &[u8], shorter: &[u8], letter: u8) -> Scalar {
    let expansion = shuffle_words(&[letter], shorter);
    let self_mult = expansion.get(w).expect("stripped word must reappear").clone();
    let mut acc = Scalar::zero();
    for (t, c) in &expansion {
        if t.as_slice() == w {
            continue;
        }
        acc = acc.add(&regularize(t).scale(&Rational::from(c.clone())));
    }
    acc.scale(&(-Rational::from(Int::from(1)) / Rational::from(self_mult)))
}
