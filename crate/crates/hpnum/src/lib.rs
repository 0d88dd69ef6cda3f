//! Fixed-point arbitrary-precision real and complex arithmetic.
//!
//! A [`Real`] stores a value as `mant / 2^bits` with a `BigInt` mantissa and a
//! fixed binary scale chosen at construction. All binary operations require
//! both operands to carry the same scale; results are rounded to the nearest
//! representable value (ties away from zero). There is no exponent field, so
//! precision is absolute, not relative: at scale `bits` every result is within
//! a few units of `2^-bits` of the exact value. The intended working range is
//! a few hundred bits, far below every tolerance used by the callers.
//!
//! Provided transcendentals are exactly the ones needed downstream: `pi` by
//! Machin's formula, `exp` by argument halving plus Taylor summation, and
//! `sqrt` by integer square root. Each computes with guard bits and rounds
//! back to the requested scale.

mod complex;

pub use complex::Complex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// Fixed-point real number `mant / 2^bits`.
#[derive(Clone, PartialEq, Eq)]
pub struct Real {
    mant: BigInt,
    bits: u32,
}

/// Rounds `n / d` to the nearest integer, ties away from zero. `d` must be > 0.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive(), "div_round requires positive divisor");
    let (q, r) = n.div_rem(d);
    if &r.abs() * 2 >= *d {
        if n.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Rounds `n / 2^shift` to the nearest integer, ties away from zero.
fn shift_round(n: &BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return n.clone();
    }
    div_round(n, &(BigInt::one() << shift))
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real { mant: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Real { mant: BigInt::one() << bits, bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        Real { mant: BigInt::from(v) << bits, bits }
    }

    /// Builds `num/den` at the given scale. `den` must be nonzero.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        assert!(!den.is_zero(), "from_ratio: zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        Real { mant: div_round(&(num << bits), &den), bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), bits)
    }

    /// Builds from an `f64`; panics on NaN or infinity.
    pub fn from_f64(v: f64, bits: u32) -> Self {
        let r = BigRational::from_float(v).expect("from_f64: non-finite input");
        Self::from_rational(&r, bits)
    }

    /// Parses a plain decimal string (`[+-]?digits[.digits]`), rounding to
    /// the given scale. Inverse of [`Real::to_decimal`] up to rounding.
    pub fn from_decimal(s: &str, bits: u32) -> Result<Real, String> {
        let (sign, body) = match s.as_bytes().first() {
            Some(b'-') => (-1, &s[1..]),
            Some(b'+') => (1, &s[1..]),
            _ => (1, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(format!("empty decimal literal {s:?}"));
        }
        let digits: String = [int_part, frac_part].concat();
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal literal {s:?}"));
        }
        let mant: BigInt = digits.parse().map_err(|e| format!("{e}"))?;
        let den = BigInt::from(10u8).pow(frac_part.len() as u32);
        Ok(Real::from_ratio(&(mant * sign), &den, bits))
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Re-rounds to a different scale.
    pub fn round_to(&self, bits: u32) -> Real {
        if bits == self.bits {
            self.clone()
        } else if bits > self.bits {
            Real { mant: &self.mant << (bits - self.bits), bits }
        } else {
            Real { mant: shift_round(&self.mant, self.bits - bits), bits }
        }
    }

    /// Multiplies by `2^k` (exact).
    pub fn shift2(&self, k: i32) -> Real {
        if k >= 0 {
            Real { mant: &self.mant << k as u32, bits: self.bits }
        } else {
            Real { mant: shift_round(&self.mant, (-k) as u32), bits: self.bits }
        }
    }

    pub fn abs(&self) -> Real {
        Real { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn recip(&self) -> Real {
        assert!(!self.is_zero(), "recip of zero");
        Real {
            mant: div_round(&(BigInt::one() << (2 * self.bits)), &self.mant),
            bits: self.bits,
        }
    }

    /// Integer power; negative exponents go through `recip` at the end.
    pub fn powi(&self, e: i64) -> Real {
        if e == 0 {
            return Real::one(self.bits);
        }
        let mut base = self.clone();
        let mut n = e.unsigned_abs();
        let mut acc = Real::one(self.bits);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        if e < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Square root; panics on negative input.
    pub fn sqrt(&self) -> Real {
        assert!(!self.mant.is_negative(), "sqrt of negative value");
        Real { mant: (&self.mant << self.bits).sqrt(), bits: self.bits }
    }

    pub fn to_f64(&self) -> f64 {
        // Split the scale out so huge mantissas still convert.
        let bl = self.mant.bits();
        if bl <= 900 {
            self.mant.to_f64().unwrap_or(0.0) / 2f64.powi(self.bits as i32)
        } else {
            let drop = (bl - 64) as u32;
            let top = &self.mant >> drop;
            top.to_f64().unwrap_or(0.0) * 2f64.powi(drop as i32 - self.bits as i32)
        }
    }

    /// Decimal string with the given number of fractional digits, rounded.
    pub fn to_decimal(&self, digits: usize) -> String {
        let pow10 = BigInt::from(10u32).pow(digits as u32);
        let scaled = shift_round(&(&self.mant * &pow10), self.bits);
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = if s.len() <= digits {
            format!("0.{}{}", "0".repeat(digits - s.len()), s)
        } else {
            let (int, frac) = s.split_at(s.len() - digits);
            if digits == 0 {
                int.to_string()
            } else {
                format!("{int}.{frac}")
            }
        };
        if neg {
            format!("-{s}")
        } else {
            s
        }
    }

    fn assert_same_scale(&self, other: &Real) {
        assert_eq!(
            self.bits, other.bits,
            "operands carry different scales ({} vs {})",
            self.bits, other.bits
        );
    }

    /// π at the given scale (memoized), via Machin's formula.
    pub fn pi(bits: u32) -> Real {
        static CACHE: Lazy<Mutex<HashMap<u32, BigInt>>> = Lazy::new(|| Mutex::new(HashMap::new()));
        if let Some(m) = CACHE.lock().unwrap().get(&bits) {
            return Real { mant: m.clone(), bits };
        }
        let guard = 32;
        let work = bits + guard;
        // atan(1/x) at scale 2^work, alternating series.
        let atan_inv = |x: u32| -> BigInt {
            let x2 = BigInt::from(x) * BigInt::from(x);
            let mut term = (BigInt::one() << work) / BigInt::from(x);
            let mut sum = term.clone();
            let mut k = 1u32;
            while !term.is_zero() {
                term /= &x2;
                if term.is_zero() {
                    break;
                }
                let contrib = &term / BigInt::from(2 * k + 1);
                if k % 2 == 1 {
                    sum -= contrib;
                } else {
                    sum += contrib;
                }
                k += 1;
            }
            sum
        };
        let pi_work = atan_inv(5) * 16 - atan_inv(239) * 4;
        let mant = shift_round(&pi_work, guard);
        CACHE.lock().unwrap().insert(bits, mant.clone());
        Real { mant, bits }
    }

    /// e^self, by halving the argument until it is small and squaring back.
    pub fn exp(&self) -> Real {
        let bits = self.bits;
        if self.is_zero() {
            return Real::one(bits);
        }
        // Halve until |x| < 1/4: mantissa bit length below bits-2.
        let bl = self.mant.bits() as i64;
        let halvings = (bl - (bits as i64 - 2)).max(0) as u32;
        let guard = 32 + 2 * halvings;
        let work = bits + guard;
        let y = Real {
            mant: shift_round(&(&self.mant << guard), halvings),
            bits: work,
        };
        // Taylor sum of e^y; |y| < 1/4 gives at least 2 bits per term.
        let mut term = Real::one(work);
        let mut sum = Real::one(work);
        let mut k: i64 = 1;
        loop {
            term = &term * &y;
            term = Real {
                mant: div_round(&term.mant, &BigInt::from(k)),
                bits: work,
            };
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        sum.round_to(bits)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({} @{}b)", self.to_decimal(24), self.bits)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // ~3.32 bits per decimal digit.
        let digits = (self.bits as usize * 3) / 10;
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        self.assert_same_scale(other);
        self.mant.partial_cmp(&other.mant)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.assert_same_scale(rhs);
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    };
}

real_binop!(Add, add, |a, b| Real { mant: &a.mant + &b.mant, bits: a.bits });
real_binop!(Sub, sub, |a, b| Real { mant: &a.mant - &b.mant, bits: a.bits });
real_binop!(Mul, mul, |a, b| Real {
    mant: shift_round(&(&a.mant * &b.mant), a.bits),
    bits: a.bits
});
real_binop!(Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero");
    let (num, den) = if b.mant.is_negative() {
        (-(&a.mant) << a.bits, -&b.mant)
    } else {
        (&a.mant << a.bits, b.mant.clone())
    };
    Real { mant: div_round(&num, &den), bits: a.bits }
});

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -&self.mant, bits: self.bits }
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -self.mant, bits: self.bits }
    }
}
