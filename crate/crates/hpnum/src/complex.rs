//! Complex numbers over fixed-point reals, same-scale discipline as [`Real`].

use crate::Real;
use std::fmt;

/// Complex number with fixed-point real and imaginary parts.
#[derive(Clone, PartialEq, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        assert_eq!(re.bits(), im.bits(), "mismatched scales");
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Complex { re: Real::zero(bits), im: Real::zero(bits) }
    }

    pub fn one(bits: u32) -> Self {
        Complex { re: Real::one(bits), im: Real::zero(bits) }
    }

    pub fn i(bits: u32) -> Self {
        Complex { re: Real::zero(bits), im: Real::one(bits) }
    }

    pub fn from_real(re: Real) -> Self {
        let bits = re.bits();
        Complex { re, im: Real::zero(bits) }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        Complex::from_real(Real::from_i64(v, bits))
    }

    /// 2πi at the given scale.
    pub fn two_pi_i(bits: u32) -> Self {
        Complex { re: Real::zero(bits), im: Real::pi(bits).shift2(1) }
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Complex {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "recip of zero");
        Complex { re: &self.re / &n, im: -&(&self.im / &n) }
    }

    pub fn powi(&self, e: i64) -> Complex {
        if e == 0 {
            return Complex::one(self.bits());
        }
        let mut base = self.clone();
        let mut n = e.unsigned_abs();
        let mut acc = Complex::one(self.bits());
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

    pub fn scale_real(&self, r: &Real) -> Complex {
        Complex { re: &self.re * r, im: &self.im * r }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl std::ops::Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl std::ops::Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl std::ops::Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl std::ops::Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        self * &rhs.recip()
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}
