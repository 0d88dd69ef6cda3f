//! Lyndon words over the two-letter alphabet and their standard bracketings.
//!
//! Letters are the indices 0 (`a`) and 1 (`b`), ordered 0 < 1. A word is
//! Lyndon when it is strictly smaller than every proper rotation of itself.
//! The standard bracketing of a Lyndon word `w = uv` (with `v` the
//! lexicographically least proper suffix) is `[P_u, P_v]`; its expansion in
//! the free associative algebra is `w` plus lexicographically greater words
//! of the same letter content, which is the triangularity that makes basis
//! decomposition possible.

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use scalars::Rational;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

/// Tests whether a word is strictly smaller than all its proper rotations.
pub fn is_lyndon(word: &[u8]) -> bool {
    if word.is_empty() {
        return false;
    }
    let n = word.len();
    for shift in 1..n {
        let rotation = word[shift..].iter().chain(word[..shift].iter());
        if word.iter().ge(rotation) {
            return false;
        }
    }
    true
}

/// Lists every Lyndon word of length 1..=max_degree in lexicographic order (Duval).
pub fn lyndon_words(max_degree: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if max_degree == 0 {
        return out;
    }
    let mut w = vec![0u8];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_degree {
            let next = w[w.len() - m];
            w.push(next);
        }
        while let Some(&last) = w.last() {
            if last == 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Splits a Lyndon word of length >= 2 at its lexicographically least proper suffix.
pub fn standard_factorization(word: &[u8]) -> (Vec<u8>, Vec<u8>) {
    assert!(word.len() >= 2, "factorization needs length >= 2");
    let mut best = 1;
    for start in 2..word.len() {
        if word[start..] < word[best..] {
            best = start;
        }
    }
    (word[..best].to_vec(), word[best..].to_vec())
}

type Expansion = Arc<BTreeMap<Vec<u8>, Rational>>;

static EXPANSIONS: Lazy<Mutex<HashMap<Vec<u8>, Expansion>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Expands the standard bracketing of a Lyndon word in the associative algebra.
pub fn expand(word: &[u8]) -> Expansion {
    debug_assert!(is_lyndon(word), "expansion is defined on Lyndon words");
    if let Some(hit) = EXPANSIONS.lock().unwrap().get(word) {
        return hit.clone();
    }
    let result: BTreeMap<Vec<u8>, Rational> = if word.len() == 1 {
        let mut m = BTreeMap::new();
        m.insert(word.to_vec(), Rational::one());
        m
    } else {
        let (u, v) = standard_factorization(word);
        let left = expand(&u);
        let right = expand(&v);
        let mut m: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
        for (wu, cu) in left.iter() {
            for (wv, cv) in right.iter() {
                let c = cu * cv;
                let mut uv = wu.clone();
                uv.extend_from_slice(wv);
                let mut vu = wv.clone();
                vu.extend_from_slice(wu);
                add_term(&mut m, uv, c.clone());
                add_term(&mut m, vu, -c);
            }
        }
        m
    };
    let arc = Arc::new(result);
    EXPANSIONS
        .lock()
        .unwrap()
        .insert(word.to_vec(), arc.clone());
    arc
}

fn add_term(map: &mut BTreeMap<Vec<u8>, Rational>, word: Vec<u8>, c: Rational) {
    use std::collections::btree_map::Entry;
    match map.entry(word) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}
