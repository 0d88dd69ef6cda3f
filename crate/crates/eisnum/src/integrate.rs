//! Regularized iterated integrals of modular-form integrands along the
//! imaginary axis, between the tangential basepoints at 0 and `i inf`.
//!
//! Form lists are path-ordered from 0: the first entry is integrated
//! nearest the 0-cusp end of the path, the last nearest `i inf`. A segment
//! toward `i inf` is computed by folding the regularized primitive over the
//! reversed list (so the first form becomes the outermost integral); a
//! segment out of 0 is converted to one toward `i inf` with the modular
//! inversion `tau -> -1/tau`, which reverses the list, pulls back each
//! integrand, and contributes `(-1)^k` from path reversal. The full path is
//! assembled with the composition-of-paths product, split at `i` by default.

use hpnum::{Complex, Real};

use crate::forms::FormSpec;
use crate::mixed::MixedExpansion;
use crate::EisError;

/// Iterated-integral engine with a fixed precision and q-truncation order.
#[derive(Clone, Copy, Debug)]
pub struct Integrator {
    /// Working precision in bits.
    pub bits: u32,
    /// q-series truncation order.
    pub nq: u32,
}

impl Integrator {
    pub fn new(bits: u32, nq: u32) -> Self {
        Integrator { bits, nq }
    }

    /// The expansion `f(tau) tau^b` for one integrand factor.
    pub fn integrand(&self, form: &FormSpec) -> MixedExpansion {
        MixedExpansion::from_q_expansion(
            &form.q_expansion(self.nq as usize),
            form.b,
            self.bits,
            self.nq,
        )
    }

    /// Regularized `int` from `i t0` to `i inf` of the path-ordered list.
    pub fn seg_to_iinf(&self, forms: &[FormSpec], t0: &Real) -> Complex {
        let mut acc = MixedExpansion::one(self.bits, self.nq);
        for form in forms.iter().rev() {
            acc = self.integrand(form).mul(&acc).reg_primitive();
        }
        acc.eval_at_it(t0)
    }

    /// Regularized `int` from 0 to `i t_end`, via the modular inversion.
    pub fn seg_from_zero(&self, forms: &[FormSpec], t_end: &Real) -> Result<Complex, EisError> {
        let mut sign = 1i32;
        let mut pulled = Vec::with_capacity(forms.len());
        for form in forms.iter().rev() {
            let (s, f) = form.pullback_s()?;
            sign *= s;
            pulled.push(f);
        }
        if forms.len() % 2 == 1 {
            sign = -sign;
        }
        let value = self.seg_to_iinf(&pulled, &t_end.recip());
        Ok(value.scale_real(&Real::from_i64(i64::from(sign), self.bits)))
    }

    /// Regularized `int` from `i a` to `i b`, assembled from two
    /// `i inf`-based segments by path composition and reversal.
    pub fn seg_between(&self, forms: &[FormSpec], a: &Real, b: &Real) -> Complex {
        let k = forms.len();
        let mut total = Complex::zero(self.bits);
        for j in 0..=k {
            let prefix = self.seg_to_iinf(&forms[..j], a);
            let mut suffix_forms: Vec<FormSpec> = forms[j..].to_vec();
            suffix_forms.reverse();
            let mut suffix = self.seg_to_iinf(&suffix_forms, b);
            if (k - j) % 2 == 1 {
                suffix = -&suffix;
            }
            total = &total + &(&prefix * &suffix);
        }
        total
    }

    /// Full regularized integral between the tangential basepoints at 0 and
    /// `i inf`, split at the given point of the imaginary axis.
    pub fn full_integral_split_at(
        &self,
        forms: &[FormSpec],
        t_split: &Real,
    ) -> Result<Complex, EisError> {
        let mut total = Complex::zero(self.bits);
        for k in 0..=forms.len() {
            let head = self.seg_from_zero(&forms[..k], t_split)?;
            let tail = self.seg_to_iinf(&forms[k..], t_split);
            total = &total + &(&head * &tail);
        }
        Ok(total)
    }

    /// Full regularized integral, split at `i` (the fixed point of the inversion).
    pub fn full_integral(&self, forms: &[FormSpec]) -> Result<Complex, EisError> {
        self.full_integral_split_at(forms, &Real::one(self.bits))
    }

    /// Truncation-sensitivity estimate: the shift of the full integral when
    /// the q-series order is halved.
    pub fn tail_estimate(&self, forms: &[FormSpec]) -> Result<Real, EisError> {
        let coarse = Integrator::new(self.bits, (self.nq / 2).max(4));
        let fine = self.full_integral(forms)?;
        let rough = coarse.full_integral(forms)?;
        Ok((&fine - &rough).abs())
    }
}

/// Power of `i` accumulated by parametrizing every integration variable as
/// `tau = i t`: each factor `f(tau) tau^b dtau` contributes `i^{b+1}`, so a
/// list contributes `i^(sum b + length)`. Dividing a full-path value by this
/// phase expresses it as the corresponding real-variable integral along t.
pub fn imaginary_axis_phase(forms: &[FormSpec]) -> u32 {
    let total: u32 = forms.iter().map(|f| f.b + 1).sum();
    total % 4
}

/// Multiplies by `i^{-imaginary_axis_phase}`, turning an imaginary-axis path
/// value into its real-parametrized counterpart.
pub fn real_parametrized(value: &Complex, forms: &[FormSpec]) -> Complex {
    let bits = value.bits();
    match imaginary_axis_phase(forms) {
        0 => value.clone(),
        1 => value * &-&Complex::i(bits),
        2 => -value,
        _ => value * &Complex::i(bits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BITS: u32 = 200;
    const NQ: u32 = 80;

    fn eng() -> Integrator {
        Integrator::new(BITS, NQ)
    }

    fn g4() -> FormSpec {
        FormSpec::eis(4, 0).unwrap()
    }

    fn g6() -> FormSpec {
        FormSpec::eis(6, 0).unwrap()
    }

    #[test]
    fn empty_list_integrates_to_one() {
        let one = eng().seg_to_iinf(&[], &Real::one(BITS));
        assert!((&one - &Complex::one(BITS)).abs().to_f64() < 1e-55);
        let z = eng().full_integral(&[]).unwrap();
        assert!((&z - &Complex::one(BITS)).abs().to_f64() < 1e-55);
    }

    #[test]
    fn single_eisenstein_segment_matches_frozen_digits() {
        // R-int from i to i inf of the weight-4 integrand: purely imaginary,
        // with value -1/240 + sum sigma_3(n) e^{-2 pi n}/(2 pi n) on the
        // imaginary part.
        let v = eng().seg_to_iinf(&[g4()], &Real::one(BITS));
        assert!(v.re.abs().to_f64() < 1e-55, "segment should be imaginary");
        let want = Real::from_decimal(
            "-0.00386694659073721003077045812916083303352980123",
            BITS,
        )
        .unwrap();
        assert!(
            (&v.im - &want).abs().to_f64() < 1e-45,
            "imaginary part drifted: {}",
            v.im.to_decimal(50)
        );
    }

    #[test]
    fn between_segment_matches_frozen_digits() {
        let a = Real::one(BITS);
        let b = Real::from_i64(2, BITS);
        let v = eng().seg_between(&[g4()], &a, &b);
        assert!(v.re.abs().to_f64() < 1e-55);
        let want = Real::from_decimal(
            "0.00446583170611174250626954684903720328487351205",
            BITS,
        )
        .unwrap();
        assert!(
            (&v.im - &want).abs().to_f64() < 1e-45,
            "imaginary part drifted: {}",
            v.im.to_decimal(50)
        );
    }

    #[test]
    fn segments_compose_along_the_axis() {
        // int_{i}^{i inf} = sum over splittings at 2i.
        let one = Real::one(BITS);
        let two = Real::from_i64(2, BITS);
        for forms in [vec![g4()], vec![g4(), g6()]] {
            let direct = eng().seg_to_iinf(&forms, &one);
            let mut assembled = Complex::zero(BITS);
            for j in 0..=forms.len() {
                let head = eng().seg_between(&forms[..j], &one, &two);
                let tail = eng().seg_to_iinf(&forms[j..], &two);
                assembled = &assembled + &(&head * &tail);
            }
            let err = (&direct - &assembled).abs().to_f64();
            assert!(err < 1e-40, "composition defect {err} for {forms:?}");
        }
    }

    #[test]
    fn reversal_flips_sign_per_form() {
        let one = Real::one(BITS);
        let two = Real::from_i64(2, BITS);
        let forms = [g4(), g6()];
        let fwd = eng().seg_between(&forms, &one, &two);
        let back = eng().seg_between(&[g6(), g4()], &two, &one);
        // Even length: reversal leaves the sign alone.
        assert!((&fwd - &back).abs().to_f64() < 1e-40);
        let fwd1 = eng().seg_between(&[g4()], &one, &two);
        let back1 = eng().seg_between(&[g4()], &two, &one);
        assert!((&fwd1 + &back1).abs().to_f64() < 1e-40);
    }

    #[test]
    fn shuffle_product_on_a_common_segment() {
        let one = Real::one(BITS);
        let i1 = eng().seg_to_iinf(&[g4()], &one);
        let i2 = eng().seg_to_iinf(&[g6()], &one);
        let lhs = &i1 * &i2;
        let rhs = &eng().seg_to_iinf(&[g4(), g6()], &one) + &eng().seg_to_iinf(&[g6(), g4()], &one);
        assert!((&lhs - &rhs).abs().to_f64() < 1e-40, "shuffle defect");
    }

    #[test]
    fn full_integral_is_split_invariant() {
        let forms = [g4()];
        let at_i = eng().full_integral(&forms).unwrap();
        let at_2i = eng()
            .full_integral_split_at(&forms, &Real::from_i64(2, BITS))
            .unwrap();
        assert!((&at_i - &at_2i).abs().to_f64() < 1e-40);
    }

    #[test]
    fn repeated_form_satisfies_the_shuffle_square() {
        let one = Real::one(BITS);
        let single = eng().seg_to_iinf(&[g4()], &one);
        let double = eng().seg_to_iinf(&[g4(), g4()], &one);
        let lhs = &single * &single;
        let rhs = &double + &double;
        assert!((&lhs - &rhs).abs().to_f64() < 1e-40, "square shuffle defect");
    }

    #[test]
    fn phase_bookkeeping() {
        let forms = [FormSpec::eis(4, 1).unwrap(), FormSpec::eis(10, 4).unwrap()];
        assert_eq!(imaginary_axis_phase(&forms), 3, "(1+1) + (4+1) mod 4");
        let v = Complex::i(BITS);
        let r = real_parametrized(&v, &forms);
        // i / i^3 = i^{-2} ... multiplying i by i^{-3} = i gives i^2 = -1.
        assert!((&r - &-&Complex::one(BITS)).abs().to_f64() < 1e-50);
    }

    #[test]
    fn tail_estimate_is_tiny_at_the_working_order() {
        let est = eng().tail_estimate(&[g4()]).unwrap();
        assert!(est.to_f64() < 1e-40, "tail estimate {}", est.to_f64());
    }
}
