//! The coefficient ring `Q[L, L^{-1}] (x) Q[admissible zeta words]`.

use crate::rational::{bernoulli, big_factorial, format_rational, parse_rational};
use crate::word::{shuffle_words, ZetaWord};
use crate::{Int, Rational};
use hpnum::{Complex, Real};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A monomial: a power of the Lefschetz symbol times a multiset of
/// admissible zeta words (kept sorted).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub l_exp: i64,
    pub zetas: Vec<ZetaWord>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { l_exp: 0, zetas: Vec::new() }
    }

    /// Total weight: L-exponent plus the weights of all zeta factors.
    pub fn weight(&self) -> i64 {
        self.l_exp + self.zetas.iter().map(|w| w.weight() as i64).sum::<i64>()
    }

    /// Combined weight of the zeta factors only.
    pub fn zeta_weight(&self) -> i64 {
        self.zetas.iter().map(|w| w.weight() as i64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut zetas = self.zetas.clone();
        zetas.extend(other.zetas.iter().cloned());
        zetas.sort();
        Monomial { l_exp: self.l_exp + other.l_exp, zetas }
    }
}

/// Errors from scalar operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarError {
    /// Shuffle expansion requested on a value that has been Euler-reduced;
    /// the reduction already traded even zeta words for L-powers, so the
    /// word-level rewrite is no longer meaningful.
    #[error("shuffle expansion requested after Euler reduction")]
    ModeMismatch,
    #[error("invalid scalar encoding: {0}")]
    BadEncoding(String),
}

/// Equality modes for scalars.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EqMode {
    /// Compare Euler-reduced normal forms exactly.
    Formal,
    /// Rewrite zeta-monomial products into single-word combinations first,
    /// then compare Euler-reduced forms. Errors after Euler reduction.
    ShuffleExpanded,
    /// Evaluate numerically (`L = 2*pi*i`, zeta words via an oracle) and
    /// compare within a tolerance.
    Numeric,
}

/// Numeric evaluator for admissible zeta words.
pub trait MzvOracle {
    /// Value of the zeta symbol for an admissible word, at the given scale.
    fn zeta(&self, word: &ZetaWord, bits: u32) -> Real;
}

/// Sparse element of `Q[L^{+-1}] (x) Q[zeta words]`.
///
/// `euler_reduced` records whether [`Scalar::euler_reduce`] has been applied
/// to this value or any ingredient of it; it is metadata for mode checking
/// and does not participate in equality or serialization.
#[derive(Clone)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
    euler_reduced: bool,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new(), euler_reduced: false }
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Monomial::unit(), r);
        }
        Scalar { terms, euler_reduced: false }
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::from_rational(Rational::from(Int::from(v)))
    }

    /// `L^k`.
    pub fn lefschetz(k: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial { l_exp: k, zetas: Vec::new() }, Rational::one());
        Scalar { terms, euler_reduced: false }
    }

    /// The symbol `zeta(w)`; `w` must be admissible.
    pub fn zeta(word: ZetaWord) -> Self {
        assert!(word.is_admissible(), "zeta symbol needs an admissible word");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial { l_exp: 0, zetas: vec![word] }, Rational::one());
        Scalar { terms, euler_reduced: false }
    }

    /// `zeta` of a composition, e.g. `zeta_comp(&[3, 5])`.
    pub fn zeta_comp(comp: &[u64]) -> Self {
        Scalar::zeta(ZetaWord::from_composition(comp))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut s = Scalar::zero();
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_euler_reduced(&self) -> bool {
        self.euler_reduced
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational coefficient of the unit monomial.
    pub fn constant_part(&self) -> Rational {
        self.terms.get(&Monomial::unit()).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(r)` when the scalar is `r * 1`; `None` otherwise.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.euler_reduced = self.euler_reduced || other.euler_reduced;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.euler_reduced = self.euler_reduced || other.euler_reduced;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Scalar {
        let mut out = Scalar::zero();
        out.euler_reduced = self.euler_reduced;
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        out.euler_reduced = self.euler_reduced || other.euler_reduced;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        if r.is_zero() {
            let mut z = Scalar::zero();
            z.euler_reduced = self.euler_reduced;
            return z;
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= r;
        }
        out
    }

    /// Multiplies by `L^k` (shifts every monomial's exponent).
    pub fn mul_lefschetz(&self, k: i64) -> Scalar {
        let mut out = Scalar::zero();
        out.euler_reduced = self.euler_reduced;
        for (m, c) in &self.terms {
            out.terms.insert(
                Monomial { l_exp: m.l_exp + k, zetas: m.zetas.clone() },
                c.clone(),
            );
        }
        out
    }

    /// Total weight when homogeneous (`None` for 0 or mixed weights).
    pub fn weight(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        if it.all(|m| m.weight() == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Rewrites every even single zeta factor as a rational multiple of an
    /// `L`-power: `zeta(2n) = -B_{2n} L^{2n} / (2 (2n)!)`. Marks the result
    /// as Euler-reduced.
    pub fn euler_reduce(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut l_exp = m.l_exp;
            let mut zetas = Vec::new();
            for w in &m.zetas {
                match even_zeta_reduction(w) {
                    Some((r, k)) => {
                        coeff *= r;
                        l_exp += k;
                    }
                    None => zetas.push(w.clone()),
                }
            }
            zetas.sort();
            out.add_term(Monomial { l_exp, zetas }, coeff);
        }
        out.euler_reduced = true;
        out
    }

    /// Rewrites products of zeta symbols into single-word combinations using
    /// the shuffle product (products of admissible words stay admissible).
    /// Errors if the value has been Euler-reduced.
    pub fn shuffle_expand(&self) -> Result<Scalar, ScalarError> {
        if self.euler_reduced {
            return Err(ScalarError::ModeMismatch);
        }
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            // Fold the factors into a single-word combination.
            let mut expansion: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
            expansion.insert(Vec::new(), Rational::one());
            for w in &m.zetas {
                let mut next: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
                for (acc_word, acc_coeff) in &expansion {
                    for (sw, mult) in shuffle_words(acc_word, w.letters()) {
                        let contrib = acc_coeff * Rational::from(mult);
                        let e = next.entry(sw).or_insert_with(Rational::zero);
                        *e += contrib;
                    }
                }
                next.retain(|_, v| !v.is_zero());
                expansion = next;
            }
            for (word, mult) in expansion {
                let zetas = if word.is_empty() {
                    Vec::new()
                } else {
                    let zw = ZetaWord::from_letters(&word);
                    debug_assert!(zw.is_admissible());
                    vec![zw]
                };
                out.add_term(Monomial { l_exp: m.l_exp, zetas }, c * mult);
            }
        }
        Ok(out)
    }

    /// Equality in the given mode. `Numeric` needs an oracle and tolerance;
    /// the other modes ignore them.
    pub fn eq_mode(
        &self,
        other: &Scalar,
        mode: EqMode,
        numeric: Option<(&dyn MzvOracle, u32, f64)>,
    ) -> Result<bool, ScalarError> {
        match mode {
            EqMode::Formal => Ok(self.euler_reduce() == other.euler_reduce()),
            EqMode::ShuffleExpanded => {
                let a = self.shuffle_expand()?;
                let b = other.shuffle_expand()?;
                Ok(a.euler_reduce() == b.euler_reduce())
            }
            EqMode::Numeric => {
                let (oracle, bits, tol) =
                    numeric.expect("numeric equality needs an oracle, bits and tolerance");
                let diff = self.sub(other).numeric_eval(oracle, bits);
                Ok(diff.abs().to_f64() < tol)
            }
        }
    }

    /// Evaluates with `L = 2*pi*i` and zeta symbols from the oracle.
    pub fn numeric_eval(&self, oracle: &dyn MzvOracle, bits: u32) -> Complex {
        let two_pi_i = Complex::two_pi_i(bits);
        let mut acc = Complex::zero(bits);
        for (m, c) in &self.terms {
            let mut term = Complex::from_real(Real::from_rational(c, bits));
            if m.l_exp != 0 {
                term = &term * &two_pi_i.powi(m.l_exp);
            }
            for w in &m.zetas {
                term = term.scale_real(&oracle.zeta(w, bits));
            }
            acc = &acc + &term;
        }
        acc
    }

    /// JSON value in the documented schema.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ScalarDto::from(self)).expect("scalar serialization")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Scalar, ScalarError> {
        let dto: ScalarDto = serde_json::from_value(v.clone())
            .map_err(|e| ScalarError::BadEncoding(e.to_string()))?;
        dto.try_into()
    }
}

/// `zeta(2n) -> (rational, 2n)` for even single zetas; `None` otherwise.
fn even_zeta_reduction(w: &ZetaWord) -> Option<(Rational, i64)> {
    let comp = w.to_composition()?;
    if comp.len() != 1 || comp[0] % 2 != 0 {
        return None;
    }
    let two_n = comp[0];
    let coeff = -bernoulli(two_n)
        / (Rational::from(Int::from(2)) * Rational::from(big_factorial(two_n)));
    Some((coeff, two_n as i64))
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    #[serde(rename = "L")]
    l: i64,
    zetas: Vec<String>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ScalarDto {
    terms: Vec<TermDto>,
}

impl From<&Scalar> for ScalarDto {
    fn from(s: &Scalar) -> Self {
        ScalarDto {
            terms: s
                .terms
                .iter()
                .map(|(m, c)| TermDto {
                    l: m.l_exp,
                    zetas: m.zetas.iter().map(|w| w.to_binary_string()).collect(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<ScalarDto> for Scalar {
    type Error = ScalarError;

    fn try_from(dto: ScalarDto) -> Result<Self, Self::Error> {
        let mut s = Scalar::zero();
        for t in dto.terms {
            let mut zetas = Vec::new();
            for z in &t.zetas {
                let w = parse_zeta_string(z).map_err(ScalarError::BadEncoding)?;
                if !w.is_admissible() {
                    return Err(ScalarError::BadEncoding(format!(
                        "non-admissible zeta word {z:?}"
                    )));
                }
                zetas.push(w);
            }
            zetas.sort();
            let coeff = parse_rational(&t.coeff).map_err(ScalarError::BadEncoding)?;
            s.add_term(Monomial { l_exp: t.l, zetas }, coeff);
        }
        Ok(s)
    }
}

/// Accepts either a binary word string (`"100"`) or a comma-separated
/// composition (`"3,5"`).
fn parse_zeta_string(s: &str) -> Result<ZetaWord, String> {
    if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
        return ZetaWord::parse_binary(s);
    }
    let comp: Result<Vec<u64>, _> = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect();
    let comp = comp?;
    if comp.is_empty() || comp.iter().any(|&k| k == 0) || *comp.last().unwrap() < 2 {
        return Err(format!("invalid composition {s:?}"));
    }
    Ok(ZetaWord::from_composition(&comp))
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            if m.l_exp == 1 {
                factors.push("L".to_string());
            } else if m.l_exp != 0 {
                factors.push(format!("L^{}", m.l_exp));
            }
            for w in &m.zetas {
                factors.push(format!("{w}"));
            }
            let coeff_str = format_rational(c);
            let (sign, mag) = match coeff_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff_str),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn l(k: i64) -> Scalar {
        Scalar::lefschetz(k)
    }

    #[test]
    fn ring_laws_small() {
        let a = Scalar::zeta_comp(&[3]).add(&l(2).scale(&ratio(1, 3)));
        let b = Scalar::zeta_comp(&[2]).sub(&Scalar::one());
        let c = l(-1);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.sub(&a), Scalar::zero());
        assert_eq!(a.mul(&Scalar::one()), a);
        assert_eq!(a.mul(&Scalar::zero()), Scalar::zero());
        assert_eq!(l(3).mul(&l(-3)), Scalar::one());
    }

    #[test]
    fn euler_reduction_frozen_values() {
        // zeta(2) = -L^2/24 and zeta(4) = L^4/1440.
        let z2 = Scalar::zeta_comp(&[2]).euler_reduce();
        assert_eq!(z2, l(2).scale(&ratio(-1, 24)));
        let z4 = Scalar::zeta_comp(&[4]).euler_reduce();
        assert_eq!(z4, l(4).scale(&ratio(1, 1440)));
        // Odd zetas and higher depth are untouched.
        let z3 = Scalar::zeta_comp(&[3]).euler_reduce();
        assert_eq!(z3, Scalar::zeta_comp(&[3]));
        let z22 = Scalar::zeta_comp(&[2, 2]).euler_reduce();
        assert_eq!(z22, Scalar::zeta_comp(&[2, 2]));
        // Products reduce factorwise: zeta(2)^2 -> L^4/576.
        let sq = Scalar::zeta_comp(&[2]).mul(&Scalar::zeta_comp(&[2])).euler_reduce();
        assert_eq!(sq, l(4).scale(&ratio(1, 576)));
    }

    #[test]
    fn shuffle_expand_zeta2_squared() {
        // zeta(2)^2 = 2 zeta(2,2) + 4 zeta(1,3): the shuffle 10 sh 10 gives
        // 2*1010 + 4*1100 (frozen from the exhaustive oracle in word.rs).
        let sq = Scalar::zeta_comp(&[2]).mul(&Scalar::zeta_comp(&[2]));
        let expanded = sq.shuffle_expand().unwrap();
        let want = Scalar::zeta_comp(&[2, 2])
            .scale(&ratio(2, 1))
            .add(&Scalar::zeta_comp(&[1, 3]).scale(&ratio(4, 1)));
        assert_eq!(expanded, want);
        // The two modes disagree here by design: formal normal forms differ...
        let z22 = Scalar::zeta_comp(&[2, 2]).scale(&ratio(2, 1));
        assert!(!sq.eq_mode(&z22, EqMode::Formal, None).unwrap());
        // ...while shuffle-expanded equality identifies the product with its
        // expansion.
        assert!(sq.eq_mode(&want, EqMode::ShuffleExpanded, None).unwrap());
    }

    #[test]
    fn mode_mismatch_after_reduction() {
        let s = Scalar::zeta_comp(&[2]).euler_reduce();
        assert!(s.is_euler_reduced());
        assert_eq!(s.shuffle_expand(), Err(ScalarError::ModeMismatch));
        // The flag propagates through arithmetic.
        let t = s.add(&Scalar::one());
        assert!(t.is_euler_reduced());
        assert_eq!(t.shuffle_expand(), Err(ScalarError::ModeMismatch));
        // Formal equality still fine.
        assert!(s
            .eq_mode(&Scalar::lefschetz(2).scale(&ratio(-1, 24)), EqMode::Formal, None)
            .unwrap());
    }

    #[test]
    fn weight_accounting() {
        let s = l(2).mul(&Scalar::zeta_comp(&[3, 5]));
        assert_eq!(s.weight(), Some(10));
        let mixed = s.add(&Scalar::one());
        assert_eq!(mixed.weight(), None);
        assert_eq!(l(-3).weight(), Some(-3));
    }

    #[test]
    fn json_round_trip_and_composition_input() {
        let s = Scalar::zeta_comp(&[3, 5])
            .mul(&l(-2))
            .scale(&ratio(-5, 12))
            .add(&Scalar::zeta_comp(&[2]).mul(&Scalar::zeta_comp(&[3])));
        let v = s.to_json();
        let back = Scalar::from_json(&v).unwrap();
        assert_eq!(s, back);
        // Composition-encoded input accepted.
        let j: serde_json::Value = serde_json::from_str(
            r#"{"terms":[{"L":0,"zetas":["3,5"],"coeff":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(Scalar::from_json(&j).unwrap(), Scalar::zeta_comp(&[3, 5]));
        // Binary string input matches the schema example.
        let j2: serde_json::Value = serde_json::from_str(
            r#"{"terms":[{"L":1,"zetas":["100","10"],"coeff":"-3/2"}]}"#,
        )
        .unwrap();
        let want = Scalar::zeta_comp(&[3])
            .mul(&Scalar::zeta_comp(&[2]))
            .mul_lefschetz(1)
            .scale(&ratio(-3, 2));
        assert_eq!(Scalar::from_json(&j2).unwrap(), want);
        // Rejects non-admissible words.
        let bad: serde_json::Value = serde_json::from_str(
            r#"{"terms":[{"L":0,"zetas":["01"],"coeff":"1"}]}"#,
        )
        .unwrap();
        assert!(Scalar::from_json(&bad).is_err());
    }

    struct FakeOracle;
    impl MzvOracle for FakeOracle {
        fn zeta(&self, word: &ZetaWord, bits: u32) -> Real {
            // Good enough for plumbing tests: zeta(2) only.
            assert_eq!(word.to_composition().unwrap(), vec![2]);
            let pi = Real::pi(bits);
            &(&pi * &pi) / &Real::from_i64(6, bits)
        }
    }

    #[test]
    fn numeric_eval_consistent_with_euler() {
        // zeta(2) + L^2/24 evaluates to ~0.
        let s = Scalar::zeta_comp(&[2]).add(&l(2).scale(&ratio(1, 24)));
        let v = s.numeric_eval(&FakeOracle, 200);
        assert!(v.abs().to_f64() < 1e-50);
        assert!(s
            .eq_mode(&Scalar::zero(), EqMode::Numeric, Some((&FakeOracle, 200, 1e-40)))
            .unwrap());
    }

    /// Direct-summation zeta for even arguments: partial sum to N plus an
    /// Euler-Maclaurin tail. Independent of the Euler-formula substitution.
    struct DirectSumOracle;
    impl MzvOracle for DirectSumOracle {
        fn zeta(&self, word: &ZetaWord, bits: u32) -> Real {
            let comp = word.to_composition().unwrap();
            assert_eq!(comp.len(), 1, "test oracle handles depth 1 only");
            let s = comp[0] as i64;
            let n_cut: i64 = 2000;
            let mut acc = Real::zero(bits);
            for n in 1..=n_cut {
                acc = &acc + &Real::from_i64(n, bits).powi(s).recip();
            }
            // Tail: N^{1-s}/(s-1) - N^{-s}/2 + sum of Bernoulli corrections.
            let nf = Real::from_i64(n_cut, bits);
            acc = &acc + &(&nf.powi(1 - s) / &Real::from_i64(s - 1, bits));
            acc = &acc - &(&nf.powi(-s) / &Real::from_i64(2, bits));
            let mut rising = Rational::from(Int::from(s)); // s(s+1)...(s+2j-2)
            for j in 1..=3i64 {
                let b = bernoulli(2 * j as u64);
                let fact = big_factorial(2 * j as u64);
                let coeff = &b * &rising / Rational::from(fact);
                acc = &acc
                    + &(&Real::from_rational(&coeff, bits) * &nf.powi(-s - 2 * j + 1));
                rising *= Rational::from(Int::from(s + 2 * j - 1));
                rising *= Rational::from(Int::from(s + 2 * j));
            }
            acc
        }
    }

    #[test]
    fn numeric_eval_commutes_with_euler_reduce_randomly() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        use rand::{Rng, SeedableRng};
        let evens = [2u64, 4, 6, 8, 10];
        for _ in 0..100 {
            let mut s = Scalar::zero();
            for _ in 0..rng.gen_range(1..=3) {
                // A monomial of zeta-weight at most 10.
                let mut m = Scalar::from_rational(ratio(
                    rng.gen_range(-9..=9),
                    rng.gen_range(1..=9),
                ));
                let mut budget = 10u64;
                loop {
                    let choices: Vec<u64> =
                        evens.iter().copied().filter(|&e| e <= budget).collect();
                    if choices.is_empty() || rng.gen_bool(0.3) {
                        break;
                    }
                    let e = choices[rng.gen_range(0..choices.len())];
                    m = m.mul(&Scalar::zeta_comp(&[e]));
                    budget -= e;
                }
                s = s.add(&m.mul_lefschetz(rng.gen_range(-2..=2)));
            }
            let bits = 150;
            let direct = s.numeric_eval(&DirectSumOracle, bits);
            let reduced = s.euler_reduce().numeric_eval(&DirectSumOracle, bits);
            let diff = (&direct - &reduced).abs().to_f64();
            assert!(diff < 1e-20, "numeric mismatch {diff} for {s}");
        }
    }

    #[test]
    fn display_reads_naturally() {
        let s = Scalar::zeta_comp(&[3])
            .mul_lefschetz(2)
            .scale(&ratio(-5, 12))
            .add(&Scalar::one());
        let text = format!("{s}");
        assert_eq!(text, "1 - 5/12*L^2*z(3)");
    }
}
