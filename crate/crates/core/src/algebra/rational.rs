//! Exact Gaussian-rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complex number `re + im·i` with arbitrary-precision rational parts.
///
/// `BigRational` keeps both parts reduced, so `==` is exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        ComplexRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        ComplexRational::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        ComplexRational::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn real(re: BigRational) -> Self {
        ComplexRational::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        ComplexRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        ComplexRational::default()
    }

    pub fn one() -> Self {
        ComplexRational::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|x|²`, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(ComplexRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|x| x.pow((-e) as u32))
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    /// Exact `k`-th root when `self` is a real rational whose numerator and
    /// denominator are perfect `k`-th powers (negative values need odd `k`).
    pub fn exact_real_root(&self, k: u32) -> Option<Self> {
        if k == 0 || !self.is_real() || self.is_zero() {
            return None;
        }
        if k == 1 {
            return Some(self.clone());
        }
        let neg = self.re.is_negative();
        if neg && k.is_multiple_of(2) {
            return None;
        }
        let a = self.re.abs();
        let num = a.numer().nth_root(k);
        let den = a.denom().nth_root(k);
        if num.pow(k) != *a.numer() || den.pow(k) != *a.denom() {
            return None;
        }
        let r = BigRational::new(num, den);
        Some(ComplexRational::real(if neg { -r } else { r }))
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl From<i64> for ComplexRational {
    fn from(n: i64) -> Self {
        ComplexRational::from_int(n)
    }
}

impl From<BigInt> for ComplexRational {
    fn from(n: BigInt) -> Self {
        ComplexRational::real(BigRational::from_integer(n))
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ComplexRational {
    /// Prints in the literal syntax accepted by the map parser, e.g. `1/2+1/3i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_ratio(&self.re)),
            (true, false) => write!(f, "{}i", fmt_ratio(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", fmt_ratio(&self.re), sign, fmt_ratio(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: &ComplexRational) -> ComplexRational {
        ComplexRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    /// Panics on division by zero, like the primitive types.
    fn div(self, o: &ComplexRational) -> ComplexRational {
        self * &o.inv().expect("division by zero ComplexRational")
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ComplexRational> for ComplexRational {
            type Output = ComplexRational;
            fn $m(self, o: ComplexRational) -> ComplexRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ComplexRational> for ComplexRational {
            type Output = ComplexRational;
            fn $m(self, o: &ComplexRational) -> ComplexRational {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ComplexRational> for ComplexRational {
    fn add_assign(&mut self, o: &ComplexRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&ComplexRational> for ComplexRational {
    fn sub_assign(&mut self, o: &ComplexRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&ComplexRational> for ComplexRational {
    fn mul_assign(&mut self, o: &ComplexRational) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = ComplexRational::from_parts(1, 2, 1, 3);
        let b = ComplexRational::from_parts(-3, 4, 2, 1);
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
        assert_eq!(&ComplexRational::i() * &ComplexRational::i(), ComplexRational::from_int(-1));
    }

    #[test]
    fn display_matches_literal_syntax() {
        assert_eq!(ComplexRational::from_parts(1, 2, 1, 3).to_string(), "1/2+1/3i");
        assert_eq!(ComplexRational::from_parts(0, 1, -2, 1).to_string(), "-2i");
        assert_eq!(ComplexRational::from_ratio(6, 4).to_string(), "3/2");
    }

    #[test]
    fn real_roots() {
        assert_eq!(
            ComplexRational::from_ratio(8, 27).exact_real_root(3),
            Some(ComplexRational::from_ratio(2, 3))
        );
        assert_eq!(ComplexRational::from_int(-8).exact_real_root(3), Some(ComplexRational::from_int(-2)));
        assert_eq!(ComplexRational::from_int(2).exact_real_root(2), None);
        assert_eq!(ComplexRational::from_int(-4).exact_real_root(2), None);
    }
}
