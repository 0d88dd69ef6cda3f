//! Coalgebra-side operations: grouplike verification and coefficient
//! spaces of series, with an incremental exact span engine.

use crate::series::NCSeries;
use crate::{FiltrationKind, NCError};
use num_traits::Zero;
use scalars::{shuffle_words, EqMode, Monomial, MzvOracle, Rational, Scalar};
use std::collections::{BTreeMap, HashMap};

/// Full normalization of a scalar for linear-algebra comparisons: rewrite
/// zeta products into single words when still possible, then apply the
/// even-zeta reduction.
fn normal_form(s: &Scalar) -> Scalar {
    let expanded = s.shuffle_expand().unwrap_or_else(|_| s.clone());
    expanded.euler_reduce()
}

/// Incremental rational span of scalars: maintains a reduced sparse basis
/// over the monomial coordinates, so membership tests and span growth are
/// one elimination pass each.
pub struct SpanBuilder {
    index: HashMap<Monomial, usize>,
    rows: Vec<(usize, BTreeMap<usize, Rational>)>,
}

impl SpanBuilder {
    pub fn new() -> Self {
        SpanBuilder { index: HashMap::new(), rows: Vec::new() }
    }

    pub fn from_scalars(list: &[Scalar]) -> Self {
        let mut b = SpanBuilder::new();
        for s in list {
            b.insert(s);
        }
        b
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    fn coords(&mut self, s: &Scalar) -> BTreeMap<usize, Rational> {
        let normed = normal_form(s);
        let mut v = BTreeMap::new();
        for (m, c) in normed.terms() {
            let next = self.index.len();
            let idx = *self.index.entry(m.clone()).or_insert(next);
            v.insert(idx, c.clone());
        }
        v
    }

    fn eliminate(&self, v: &mut BTreeMap<usize, Rational>) {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                for (j, rc) in row {
                    let delta = &c * rc;
                    match v.entry(*j) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
    }

    /// Whether the scalar already lies in the span.
    pub fn contains(&mut self, s: &Scalar) -> bool {
        let mut v = self.coords(s);
        self.eliminate(&mut v);
        v.is_empty()
    }

    /// Adds the scalar; returns true when it enlarged the span.
    pub fn insert(&mut self, s: &Scalar) -> bool {
        let mut v = self.coords(s);
        self.eliminate(&mut v);
        let Some((&pivot, _)) = v.iter().next() else {
            return false;
        };
        let inv = {
            let lead = v.get(&pivot).unwrap().clone();
            Rational::new(lead.denom().clone(), lead.numer().clone())
        };
        let row: BTreeMap<usize, Rational> =
            v.into_iter().map(|(j, c)| (j, &c * &inv)).collect();
        // Keep full reduced form: clear the new pivot from existing rows.
        for (_, existing) in self.rows.iter_mut() {
            if let Some(c) = existing.get(&pivot).cloned() {
                for (j, rc) in &row {
                    let delta = &c * rc;
                    match existing.entry(*j) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
        self.rows.push((pivot, row));
        true
    }
}

impl Default for SpanBuilder {
    fn default() -> Self {
        SpanBuilder::new()
    }
}

/// Whether `target` lies in the rational span of `list`, deciding by exact
/// linear algebra on the normalized monomial basis.
pub fn span_contains_scalars(list: &[Scalar], target: &Scalar) -> bool {
    SpanBuilder::from_scalars(list).contains(target)
}

/// Dimension of the rational span of the given scalars.
pub fn scalar_span_dimension(list: &[Scalar]) -> usize {
    SpanBuilder::from_scalars(list).dimension()
}

fn all_words(len: usize) -> Vec<Vec<u8>> {
    (0..(1usize << len))
        .map(|mask| (0..len).map(|i| ((mask >> i) & 1) as u8).collect())
        .collect()
}

impl NCSeries {
    /// Checks the grouplike (shuffle-comultiplicativity) law: for every
    /// word pair with combined length within the truncation degree,
    /// `c(u) c(v) = Σ_w <u sh v, w> c(w)` in the requested equality mode.
    pub fn grouplike_check(
        &self,
        mode: EqMode,
        numeric: Option<(&dyn MzvOracle, u32, f64)>,
    ) -> Result<bool, NCError> {
        if self.constant_term() != Scalar::one() {
            return Err(NCError::ConstantTerm("grouplike series start at 1"));
        }
        let n = self.degree();
        for lu in 0..=n {
            for lv in 0..=(n - lu) {
                for u in all_words(lu) {
                    let cu = self.coeff(&u);
                    for v in all_words(lv) {
                        let cv = self.coeff(&v);
                        let lhs = cu.mul(&cv);
                        let mut rhs = Scalar::zero();
                        for (w, mult) in shuffle_words(&u, &v) {
                            let cw = self.coeff(&w);
                            if !cw.is_zero() {
                                rhs = rhs.add(&cw.scale(&Rational::from(mult)));
                            }
                        }
                        if !lhs.eq_mode(&rhs, mode, numeric)? {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// A deduplicated spanning set of the rational span of the
    /// coefficients: keeps each coefficient that enlarges the span.
    pub fn co(&self) -> Vec<Scalar> {
        let mut builder = SpanBuilder::new();
        let mut kept: Vec<Scalar> = Vec::new();
        for (_, c) in self.coeffs() {
            if builder.insert(c) {
                kept.push(c.clone());
            }
        }
        kept
    }

    /// Coefficient space of the `r`-th `F`-filtered piece.
    pub fn co_fil(&self, f: FiltrationKind, r: usize) -> Result<Vec<Scalar>, NCError> {
        Ok(self.fil(f, r)?.co())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Alphabet;
    use scalars::ratio;

    #[test]
    fn span_membership_normalizes() {
        // zeta(2) and -L^2/24 agree after normalization.
        let list = vec![Scalar::zeta_comp(&[2])];
        let target = Scalar::lefschetz(2).scale(&ratio(-1, 24));
        assert!(span_contains_scalars(&list, &target));
        // Products are expanded: zeta(2)^2 is in the span of
        // {zeta(2,2), zeta(1,3)}.
        let sq = Scalar::zeta_comp(&[2]).mul(&Scalar::zeta_comp(&[2]));
        let list2 = vec![Scalar::zeta_comp(&[2, 2]), Scalar::zeta_comp(&[1, 3])];
        assert!(span_contains_scalars(&list2, &sq));
        assert!(!span_contains_scalars(&list2, &Scalar::zeta_comp(&[3])));
        assert_eq!(scalar_span_dimension(&list2), 2);
    }

    #[test]
    fn span_builder_is_exact() {
        let mut b = SpanBuilder::new();
        assert!(!b.insert(&Scalar::zero()));
        assert!(b.insert(&Scalar::one()));
        assert!(!b.insert(&Scalar::from_rational(ratio(7, 3))));
        assert!(b.insert(&Scalar::zeta_comp(&[3]).add(&Scalar::one())));
        // zeta(3) alone is now in the span: (zeta(3)+1) - 1.
        assert!(b.contains(&Scalar::zeta_comp(&[3])));
        assert_eq!(b.dimension(), 2);
        // An unrelated generator is not.
        assert!(!b.contains(&Scalar::zeta_comp(&[5])));
        assert!(!b.contains(&Scalar::lefschetz(1)));
    }

    #[test]
    fn coefficient_space_dedups() {
        // co(1 + zeta(2) ab + 2 zeta(2) ba) = {1, zeta(2)}.
        let deg = 3;
        let one = NCSeries::one(Alphabet::AB, deg);
        let s = one
            .add(&NCSeries::monomial(
                Alphabet::AB,
                &[0, 1],
                Scalar::zeta_comp(&[2]),
                deg,
            ))
            .unwrap()
            .add(&NCSeries::monomial(
                Alphabet::AB,
                &[1, 0],
                Scalar::zeta_comp(&[2]).scale(&ratio(2, 1)),
                deg,
            ))
            .unwrap();
        let co = s.co();
        assert_eq!(co.len(), 2);
        assert!(span_contains_scalars(&co, &Scalar::one()));
        assert!(span_contains_scalars(&co, &Scalar::zeta_comp(&[2])));
    }

    #[test]
    fn grouplike_examples() {
        // exp of a letter is grouplike.
        let a = NCSeries::letter(Alphabet::AB, 0, 6);
        let e = a.exp().unwrap();
        assert!(e.grouplike_check(EqMode::Formal, None).unwrap());
        // exp of a primitive combination is grouplike.
        let b = NCSeries::letter(Alphabet::AB, 1, 5);
        let bracket = a
            .truncate(5)
            .concat_mul(&b)
            .unwrap()
            .sub(&b.concat_mul(&a.truncate(5)).unwrap())
            .unwrap();
        let lie = a.truncate(5).add(&bracket.scale_rat(&ratio(1, 3))).unwrap();
        assert!(lie.exp().unwrap().grouplike_check(EqMode::Formal, None).unwrap());
        // 1 + ab alone fails at (u,v) = (a,b).
        let bad = NCSeries::one(Alphabet::AB, 3)
            .add(&NCSeries::monomial(Alphabet::AB, &[0, 1], Scalar::one(), 3))
            .unwrap();
        assert!(!bad.grouplike_check(EqMode::Formal, None).unwrap());
        // Nonunital series are rejected.
        assert!(a.grouplike_check(EqMode::Formal, None).is_err());
    }
}
