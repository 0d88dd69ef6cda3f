//! End-to-end numeric identities: single and double Eisenstein integrals
//! against zeta values, and the weight-12 cusp-form L-value against a
//! weighted pair of double Eisenstein integrals.

use hpnum::{Complex, Real};
use num_bigint::BigInt;
use num_traits::One;
use scalars::big_factorial;

use crate::forms::FormSpec;
use crate::integrate::{imaginary_axis_phase, real_parametrized, Integrator};
use crate::mixed::MixedExpansion;
use crate::mzv::MzvNumeric;
use crate::qexp::{delta, tau_values};
use crate::EisError;

/// Exponential integral `E1(x) = int_1^inf e^{-xt}/t dt` for `x > 0`, by the
/// bottom-up continued fraction `e^{-x}/(x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))`.
/// The truncation error decays like `e^{-4 sqrt(x K)}` in the depth `K`.
pub fn exp_integral_e1(x: &Real) -> Real {
    assert!(
        !x.is_negative() && !x.is_zero(),
        "positive arguments only"
    );
    let bits = x.bits();
    let target = (f64::from(bits) + 16.0) * std::f64::consts::LN_2 / 4.0;
    let depth = (target * target / x.to_f64()).ceil() as i64 + 20;
    let mut v = Real::zero(bits);
    for k in (1..=depth).rev() {
        let numer = Real::from_i64(k * k, bits);
        let shift = Real::from_i64(2 * k + 1, bits);
        v = &numer / &(&(x + &shift) - &v);
    }
    let denom = &(x + &Real::one(bits)) - &v;
    &(-x).exp() / &denom
}

/// `sum_n tau(n) 11!/(2 pi n)^12` over the first `terms` coefficients: the
/// termwise Mellin transform of the weight-12 cusp integral along the
/// positive imaginary axis.
pub fn mellin_l_value(bits: u32, terms: usize) -> Real {
    let taus = tau_values(terms);
    let one = BigInt::one();
    let two_pi = Real::pi(bits).shift2(1);
    let fact11 = Real::from_ratio(&big_factorial(11), &one, bits);
    let mut total = Real::zero(bits);
    for (idx, t) in taus.iter().enumerate() {
        let denom = (&two_pi * &Real::from_i64(idx as i64 + 1, bits)).powi(12);
        total = &total + &(&Real::from_ratio(t, &one, bits) * &(&fact11 / &denom));
    }
    total
}

/// Residual of the weight-3 single-integral identity
/// `zeta(3) = -(2 pi i)^3 I(w4, b=0)`.
pub fn zeta3_residual(bits: u32, nq: u32) -> Result<Real, EisError> {
    let eng = Integrator::new(bits, nq);
    let integral = eng.full_integral(&[FormSpec::eis(4, 0)?])?;
    let z = MzvNumeric::new().zeta_composition(&[3], bits)?;
    let rhs = -&(&Complex::two_pi_i(bits).powi(3) * &integral);
    Ok((&Complex::from_real(z) - &rhs).abs())
}

/// Residual of the weight-5 single-integral identity
/// `zeta(5) = -(1/12)(2 pi i)^5 I(w6, b=0)`.
pub fn zeta5_residual(bits: u32, nq: u32) -> Result<Real, EisError> {
    let eng = Integrator::new(bits, nq);
    let integral = eng.full_integral(&[FormSpec::eis(6, 0)?])?;
    let z = MzvNumeric::new().zeta_composition(&[5], bits)?;
    let scale = Real::from_i64(12, bits).recip();
    let rhs = -&(&Complex::two_pi_i(bits).powi(5) * &integral).scale_real(&scale);
    Ok((&Complex::from_real(z) - &rhs).abs())
}

/// Residual of the double-integral identity
/// `zeta(3,5) = -(5/12)(2 pi i)^8 I(w6 b=0, w4 b=0) + 503/(2^13 3^5 5^2 7) (2 pi i)^8`.
pub fn zeta35_residual(bits: u32, nq: u32) -> Result<Real, EisError> {
    let eng = Integrator::new(bits, nq);
    let forms = [FormSpec::eis(6, 0)?, FormSpec::eis(4, 0)?];
    let integral = eng.full_integral(&forms)?;
    let z = MzvNumeric::new().zeta_composition(&[3, 5], bits)?;
    let tp8 = Complex::two_pi_i(bits).powi(8);
    let five_twelfths = &Real::from_i64(5, bits) / &Real::from_i64(12, bits);
    let constant = &Real::from_i64(503, bits)
        / &Real::from_i64(8192 * 243 * 25 * 7, bits);
    let rhs = &-&(&tp8 * &integral).scale_real(&five_twelfths) + &tp8.scale_real(&constant);
    Ok((&Complex::from_real(z) - &rhs).abs())
}

/// Both evaluations of the completed weight-12 cusp L-value and the
/// double-Eisenstein combination that should reproduce it.
pub struct LambdaReport {
    /// Termwise Mellin evaluation of the cusp integral.
    pub mellin: Real,
    /// The same value assembled by splitting the path at `i` and folding
    /// the lower half back with the modular inversion.
    pub split: Real,
    /// `|Im|` of the engine-computed upper segment (reality regression).
    pub split_imag_defect: Real,
    /// Phase-normalized `600 pi I(w4 b1, w10 b4) + 480 pi I(w4 b2, w10 b3)`.
    pub rhs: Complex,
    /// `|split - rhs|`.
    pub residual: Real,
}

/// Computes the cusp-form L-value identity at the given precision.
pub fn lambda_report(bits: u32, nq: u32) -> Result<LambdaReport, EisError> {
    let mellin = mellin_l_value(bits, 600);

    // Upper piece from i to i inf: the engine handles tau^11 directly (the
    // exponent exceeds the pullback range, but no pullback is needed here).
    let d11 = MixedExpansion::from_q_expansion(&delta(nq as usize), 11, bits, nq);
    let upper = d11.reg_primitive().eval_at_it(&Real::one(bits));

    // Lower piece folded up by tau -> -1/tau: int_0^i f tau^11 dtau turns
    // into int_i^{i inf} f(s)/s ds = sum_n tau(n) E1(2 pi n).
    let one = BigInt::one();
    let two_pi = Real::pi(bits).shift2(1);
    let mut lower = Real::zero(bits);
    for (idx, t) in tau_values(nq as usize).iter().enumerate() {
        let x = &two_pi * &Real::from_i64(idx as i64 + 1, bits);
        lower = &lower + &(&Real::from_ratio(t, &one, bits) * &exp_integral_e1(&x));
    }
    let split = &upper.re + &lower;

    let eng = Integrator::new(bits, nq);
    let forms_a = [FormSpec::eis(4, 1)?, FormSpec::eis(10, 4)?];
    let forms_b = [FormSpec::eis(4, 2)?, FormSpec::eis(10, 3)?];
    debug_assert_eq!(
        imaginary_axis_phase(&forms_a),
        imaginary_axis_phase(&forms_b)
    );
    let pi = Real::pi(bits);
    let ia = eng.full_integral(&forms_a)?;
    let ib = eng.full_integral(&forms_b)?;
    let raw = &ia.scale_real(&(&pi * &Real::from_i64(600, bits)))
        + &ib.scale_real(&(&pi * &Real::from_i64(480, bits)));
    let rhs = real_parametrized(&raw, &forms_a);
    let residual = (&Complex::from_real(split.clone()) - &rhs).abs();
    Ok(LambdaReport {
        mellin,
        split,
        split_imag_defect: upper.im.abs(),
        rhs,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BITS: u32 = 200;

    fn frozen(s: &str) -> Real {
        Real::from_decimal(s, BITS).unwrap()
    }

    #[test]
    fn exponential_integral_reference_digits() {
        let two_pi = Real::pi(BITS).shift2(1);
        let got = exp_integral_e1(&two_pi);
        let want = frozen("0.000260420586396130586388464163143329503398205095");
        assert!(
            (&got - &want).abs().to_f64() < 1e-48,
            "E1(2 pi) drifted: {}",
            got.to_decimal(50)
        );
        let got = exp_integral_e1(&two_pi.shift2(1));
        let want = frozen("0.000000258299676967302674643738932803920440320953755");
        assert!(
            (&got - &want).abs().to_f64() < 1e-50,
            "E1(4 pi) drifted: {}",
            got.to_decimal(50)
        );
    }

    #[test]
    fn mellin_value_converges_to_the_frozen_digits() {
        let got = mellin_l_value(BITS, 900);
        let want = frozen("0.0104862731292411519696415202921951178936269259");
        assert!(
            (&got - &want).abs().to_f64() < 1e-20,
            "drift beyond the 900-term tail: {}",
            got.to_decimal(50)
        );
    }

    #[test]
    fn split_evaluation_matches_the_mellin_route() {
        let report = lambda_report(BITS, 80).unwrap();
        let err = (&report.split - &report.mellin).abs().to_f64();
        // The Mellin side is truncated at 600 terms (~1e-19 tail); the split
        // side is exact to working precision.
        assert!(err < 1e-15, "routes disagree by {err}");
        let want = frozen("0.0104862731292411519696415202921951178936269259");
        assert!(
            (&report.split - &want).abs().to_f64() < 1e-44,
            "split value drifted: {}",
            report.split.to_decimal(50)
        );
    }
}
