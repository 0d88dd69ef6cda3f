//! The flagship numeric identities at the default working parameters, with
//! an independent floating-point quadrature oracle for the single segment.

use eisnum::{
    lambda_report, zeta35_residual, zeta3_residual, zeta5_residual, FormSpec, Integrator,
};
use hpnum::Real;

const BITS: u32 = 200;
const NQ: u32 = 80;

#[test]
fn weight_three_single_integral() {
    let res = zeta3_residual(BITS, NQ).unwrap().to_f64();
    assert!(res < 1e-40, "residual {res}");
}

#[test]
fn weight_five_single_integral() {
    let res = zeta5_residual(BITS, NQ).unwrap().to_f64();
    assert!(res < 1e-40, "residual {res}");
}

#[test]
fn weight_eight_double_integral() {
    let res = zeta35_residual(BITS, NQ).unwrap().to_f64();
    assert!(res < 1e-40, "residual {res}");
}

#[test]
fn cusp_form_l_value_identity() {
    let report = lambda_report(BITS, NQ).unwrap();
    assert!(
        report.residual.to_f64() < 1e-40,
        "residual {}",
        report.residual.to_f64()
    );
    assert!(
        report.rhs.im.abs().to_f64() < 1e-50,
        "the phase-normalized combination should be real, got imaginary part {}",
        report.rhs.im.to_f64()
    );
    assert!(
        report.split_imag_defect.to_f64() < 1e-50,
        "upper segment should be real"
    );
}

#[test]
fn doubling_the_truncation_order_is_stable() {
    let coarse = lambda_report(BITS, 40).unwrap();
    let fine = lambda_report(BITS, 80).unwrap();
    let shift = (&coarse.rhs - &fine.rhs).abs().to_f64();
    assert!(shift < 1e-40, "truncation shift {shift}");
}

#[test]
fn shuffle_on_the_full_path() {
    let eng = Integrator::new(BITS, NQ);
    let g4 = FormSpec::eis(4, 0).unwrap();
    let g6 = FormSpec::eis(6, 0).unwrap();
    let i4 = eng.full_integral(&[g4]).unwrap();
    let i6 = eng.full_integral(&[g6]).unwrap();
    let lhs = &i4 * &i6;
    let rhs = &eng.full_integral(&[g4, g6]).unwrap() + &eng.full_integral(&[g6, g4]).unwrap();
    assert!(
        (&lhs - &rhs).abs().to_f64() < 1e-40,
        "shuffle defect on the composed path"
    );
}

#[test]
fn truncation_error_is_bounded_by_the_first_omitted_term() {
    let g4 = FormSpec::eis(4, 0).unwrap();
    let coarse = Integrator::new(BITS, 10).seg_to_iinf(&[g4], &Real::one(BITS));
    let fine = Integrator::new(BITS, 40).seg_to_iinf(&[g4], &Real::one(BITS));
    let diff = (&coarse - &fine).abs().to_f64();
    let bound = (-2.0 * std::f64::consts::PI * 10.0).exp();
    assert!(diff < bound, "difference {diff} exceeds bound {bound}");
}

/// Sum of cubes of divisors, for the quadrature oracle.
fn sigma3(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

/// The q-series part of the weight-4 Eisenstein series on the imaginary axis.
fn g4_tail(t: f64) -> f64 {
    (1..=60)
        .map(|n| sigma3(n) as f64 * (-2.0 * std::f64::consts::PI * n as f64 * t).exp())
        .sum()
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    if depth == 0 || (left + right - whole).abs() < 15.0 * eps {
        return left + right + (left + right - whole) / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
}

#[test]
fn single_segment_agrees_with_floating_point_quadrature() {
    // Independent oracle: adaptive Simpson integration of the q-series part
    // over [1, 9] (the remainder beyond 9 is below 1e-24), plus the
    // regularized constant-term contribution -1/240.
    let f: &dyn Fn(f64) -> f64 = &g4_tail;
    let (a, b) = (1.0, 9.0);
    let (fa, fb) = (f(a), f(b));
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let quad = adaptive(f, a, b, fa, fm, fb, whole, 1e-16, 40);
    let oracle = -1.0 / 240.0 + quad;

    let engine = Integrator::new(BITS, NQ).seg_to_iinf(&[FormSpec::eis(4, 0).unwrap()], &Real::one(BITS));
    assert!(engine.re.abs().to_f64() < 1e-50);
    let err = (engine.im.to_f64() - oracle).abs();
    assert!(err < 1e-12, "engine vs quadrature: {err}");
}
