//! Numeric multiple zeta values: nested partial sums up to a fixed
//! crossover, with the tails carried as symbolic expansions in inverse
//! powers of the summation variable.
//!
//! For a composition `(k_1, ..., k_r)` with `k_r >= 2`, the value is
//! `Z_1(0)` in the family `Z_j(n) = sum_{m>n} m^{-k_j} Z_{j+1}(m)` with
//! `Z_{r+1} = 1`. Each `Z_j` is evaluated exactly on `n <= M` by downward
//! recursion from `Z_j(M)`, which in turn comes from the tail expansion
//! built by composing the elementary tail
//! `T_s(n) = n^{1-s}/(s-1) - n^{-s}/2 + sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) n^{-s-2k+1}`
//! termwise through the levels. Admissibility keeps every `s >= 2`, so the
//! expansions stay in integer powers with no logarithmic terms, and the
//! first omitted exponent bounds the truncation error far below the
//! requested precision.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Mutex;

use hpnum::Real;
use scalars::{bernoulli, big_factorial, MzvOracle, Rational, ZetaWord};

use crate::EisError;

/// Crossover between exact partial summation and the tail expansion.
const CROSSOVER: u64 = 400;
/// Guard bits added to the working precision.
const GUARD_BITS: u32 = 64;

/// Caching numeric evaluator for admissible compositions of any depth.
#[derive(Default)]
pub struct MzvNumeric {
    cache: Mutex<HashMap<(Vec<u64>, u32), Real>>,
}

/// Largest retained inverse power for the tail expansions.
fn max_exponent(work: u32) -> u32 {
    30 + work / 4
}

/// Tail of `sum_{m>n} m^{-k} (inner tail)(m)` as an expansion in `1/n`.
fn compose_tail(
    k: u64,
    inner: &BTreeMap<u32, Real>,
    e_max: u32,
    work: u32,
) -> BTreeMap<u32, Real> {
    let mut out: BTreeMap<u32, Real> = BTreeMap::new();
    let mut add = |e: u32, v: Real| {
        match out.get_mut(&e) {
            Some(acc) => *acc = &*acc + &v,
            None => {
                out.insert(e, v);
            }
        };
    };
    for (&e, c) in inner {
        let s = k as u32 + e;
        assert!(s >= 2, "tail exponent must stay summable");
        if s - 1 > e_max {
            continue;
        }
        let s_i64 = i64::from(s);
        add(s - 1, c / &Real::from_i64(s_i64 - 1, work));
        if s <= e_max {
            add(s, -&c.shift2(-1));
        }
        // Correction terms B_{2m}/(2m)! * s(s+1)...(s+2m-2) * n^{-s-2m+1}.
        let mut rising = Rational::from_integer(s_i64.into());
        let mut m = 1u64;
        while s + (2 * m as u32) - 1 <= e_max {
            let coeff = bernoulli(2 * m) / Rational::from_integer(big_factorial(2 * m)) * &rising;
            add(
                s + 2 * m as u32 - 1,
                &Real::from_rational(&coeff, work) * c,
            );
            let a = Rational::from_integer((s_i64 + 2 * m as i64 - 1).into());
            let b = Rational::from_integer((s_i64 + 2 * m as i64).into());
            rising = rising * a * b;
            m += 1;
        }
    }
    out
}

/// Numeric value of a tail expansion at the crossover point.
fn eval_tail(tail: &BTreeMap<u32, Real>, n: u64, work: u32) -> Real {
    let inv = Real::from_i64(n as i64, work).recip();
    let mut total = Real::zero(work);
    for (&e, c) in tail {
        total = &total + &(c * &inv.powi(i64::from(e)));
    }
    total
}

impl MzvNumeric {
    pub fn new() -> Self {
        Self::default()
    }

    /// Value of the composition at the requested precision.
    ///
    /// The composition is read inner-to-outer: the first entry weights the
    /// smallest summation variable, and the last entry (which must be at
    /// least 2 for convergence) weights the largest.
    pub fn zeta_composition(&self, ks: &[u64], bits: u32) -> Result<Real, EisError> {
        if ks.is_empty() || ks.iter().any(|&k| k == 0) || *ks.last().unwrap() < 2 {
            return Err(EisError::BadComposition(format!("{ks:?}")));
        }
        let key = (ks.to_vec(), bits);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }

        let work = bits + GUARD_BITS;
        let e_max = max_exponent(work);
        let m_top = CROSSOVER as usize;

        let mut tail: BTreeMap<u32, Real> = BTreeMap::new();
        tail.insert(0, Real::one(work));
        let mut values = vec![Real::one(work); m_top + 1];
        for &k in ks.iter().rev() {
            tail = compose_tail(k, &tail, e_max, work);
            let mut next = vec![Real::zero(work); m_top + 1];
            next[m_top] = eval_tail(&tail, CROSSOVER, work);
            for n in (0..m_top).rev() {
                let weight = Real::from_i64(n as i64 + 1, work).powi(-(k as i64));
                next[n] = &next[n + 1] + &(&weight * &values[n + 1]);
            }
            values = next;
        }
        let result = values[0].round_to(bits);
        self.cache.lock().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// Serializes all cached values to a JSON array.
    pub fn save_cache(&self, path: &Path) -> Result<(), EisError> {
        let cache = self.cache.lock().unwrap();
        let mut entries: Vec<serde_json::Value> = Vec::new();
        let mut keys: Vec<_> = cache.keys().cloned().collect();
        keys.sort();
        for key in keys {
            let value = &cache[&key];
            let digits = (key.1 as usize) * 30103 / 100000 + 10;
            entries.push(serde_json::json!({
                "composition": key.0,
                "bits": key.1,
                "value": value.to_decimal(digits),
            }));
        }
        std::fs::write(path, serde_json::Value::Array(entries).to_string())
            .map_err(|e| EisError::Cache(e.to_string()))
    }

    /// Loads previously saved values into the in-memory cache.
    pub fn load_cache(&self, path: &Path) -> Result<usize, EisError> {
        let text = std::fs::read_to_string(path).map_err(|e| EisError::Cache(e.to_string()))?;
        let parsed: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| EisError::Cache(e.to_string()))?;
        let entries = parsed
            .as_array()
            .ok_or_else(|| EisError::Cache("expected a JSON array".into()))?;
        let mut cache = self.cache.lock().unwrap();
        let mut loaded = 0;
        for entry in entries {
            let comp: Vec<u64> = entry["composition"]
                .as_array()
                .ok_or_else(|| EisError::Cache("missing composition".into()))?
                .iter()
                .map(|v| v.as_u64().ok_or_else(|| EisError::Cache("bad part".into())))
                .collect::<Result<_, _>>()?;
            let bits = entry["bits"]
                .as_u64()
                .ok_or_else(|| EisError::Cache("missing bits".into()))? as u32;
            let text = entry["value"]
                .as_str()
                .ok_or_else(|| EisError::Cache("missing value".into()))?;
            let value = Real::from_decimal(text, bits).map_err(EisError::Cache)?;
            cache.insert((comp, bits), value);
            loaded += 1;
        }
        Ok(loaded)
    }
}

impl MzvOracle for MzvNumeric {
    fn zeta(&self, word: &ZetaWord, bits: u32) -> Real {
        let comp = word
            .to_composition()
            .expect("zeta oracle requires an admissible word");
        self.zeta_composition(&comp, bits)
            .expect("admissible composition")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    const BITS: u32 = 200;

    fn value(ks: &[u64]) -> Real {
        MzvNumeric::new().zeta_composition(ks, BITS).unwrap()
    }

    fn frozen(s: &str) -> Real {
        Real::from_decimal(s, BITS).unwrap()
    }

    fn assert_close(got: &Real, want: &Real, tol: f64, what: &str) {
        let err = (got - want).abs().to_f64();
        assert!(err < tol, "{what}: off by {err}");
    }

    #[test]
    fn depth_one_reference_digits() {
        assert_close(
            &value(&[2]),
            &frozen("1.6449340668482264364724151666460251892189499"),
            1e-44,
            "weight 2",
        );
        assert_close(
            &value(&[3]),
            &frozen("1.20205690315959428539973816151144999076498629"),
            1e-44,
            "weight 3",
        );
        assert_close(
            &value(&[5]),
            &frozen("1.03692775514336992633136548645703416805708092"),
            1e-44,
            "weight 5",
        );
        assert_close(
            &value(&[7]),
            &frozen("1.00834927738192282683979754984979675959986356"),
            1e-44,
            "weight 7",
        );
    }

    #[test]
    fn euler_evaluation_of_the_even_values() {
        let pi2 = Real::pi(BITS).powi(2);
        assert_close(
            &value(&[2]),
            &(&pi2 / &Real::from_i64(6, BITS)),
            1e-55,
            "pi^2/6",
        );
        let pi4 = Real::pi(BITS).powi(4);
        assert_close(
            &value(&[4]),
            &(&pi4 / &Real::from_i64(90, BITS)),
            1e-55,
            "pi^4/90",
        );
    }

    #[test]
    fn depth_two_reference_digits() {
        assert_close(
            &value(&[3, 5]),
            &frozen("0.0377076729848475440113047822936599148226013194"),
            1e-44,
            "double value (3,5)",
        );
        let pi4 = Real::pi(BITS).powi(4);
        assert_close(
            &value(&[1, 3]),
            &(&pi4 / &Real::from_i64(360, BITS)),
            1e-55,
            "pi^4/360",
        );
        assert_close(
            &value(&[2, 2]),
            &(&pi4 / &Real::from_i64(120, BITS)),
            1e-55,
            "pi^4/120",
        );
        assert_close(&value(&[1, 2]), &value(&[3]), 1e-55, "sum-formula weight 3");
    }

    #[test]
    fn higher_depth_sum_formula_cases() {
        assert_close(&value(&[1, 1, 2]), &value(&[4]), 1e-55, "weight 4 depth 3");
        assert_close(
            &value(&[1, 1, 1, 2]),
            &value(&[5]),
            1e-55,
            "weight 5 depth 4",
        );
    }

    #[test]
    fn shuffle_style_quadratic_relation() {
        // zeta(2)^2 = 2 zeta(2,2) + zeta(4) by splitting the double sum.
        let lhs = value(&[2]).powi(2);
        let rhs = &value(&[2, 2]).shift2(1) + &value(&[4]);
        assert_close(&lhs, &rhs, 1e-55, "stuffle square of weight 2");
    }

    #[test]
    fn rejects_divergent_or_empty_compositions() {
        let o = MzvNumeric::new();
        assert!(o.zeta_composition(&[], BITS).is_err());
        assert!(o.zeta_composition(&[2, 1], BITS).is_err(), "last part 1 diverges");
        assert!(o.zeta_composition(&[0, 2], BITS).is_err());
    }

    #[test]
    fn oracle_trait_reads_words_inner_to_outer() {
        let o = MzvNumeric::new();
        let w = ZetaWord::from_composition(&[3, 5]);
        let via_word = o.zeta(&w, BITS);
        let direct = o.zeta_composition(&[3, 5], BITS).unwrap();
        assert!((&via_word - &direct).abs().to_f64() < 1e-59);
    }

    #[test]
    fn json_cache_round_trips() {
        let o = MzvNumeric::new();
        let v = o.zeta_composition(&[3], BITS).unwrap();
        let _ = o.zeta_composition(&[3, 5], 120).unwrap();
        let path = std::env::temp_dir().join("mzv_cache_test.json");
        o.save_cache(&path).unwrap();
        let fresh = MzvNumeric::new();
        assert_eq!(fresh.load_cache(&path).unwrap(), 2);
        let reloaded = fresh.cache.lock().unwrap()[&(vec![3], BITS)].clone();
        assert!(
            (&reloaded - &v).abs().to_f64() < 1e-55,
            "cache should preserve the value to full precision"
        );
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn bernoulli_sanity_for_the_tail_weights() {
        assert_eq!(bernoulli(2), Rational::new(1.into(), 6.into()));
        assert_eq!(bernoulli(4), Rational::new((-1).into(), 30.into()));
        assert!(Rational::one().is_one());
    }
}
