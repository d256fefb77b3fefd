//! Univariate rational functions in lowest terms.

use std::fmt;

use super::poly1::Poly1;
use super::rational::ComplexRational;
use super::skewpoly::SkewPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly1,
    den: Poly1,
}

impl RatFn {
    /// `None` when `den` is identically zero.
    pub fn new(num: Poly1, den: Poly1) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFn::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g)?;
        let (mut d, _) = den.div_rem(&g)?;
        let l = d.lead()?.inv()?;
        n = n.scale(&l);
        d = d.scale(&l);
        Some(RatFn { num: n, den: d })
    }

    pub fn zero() -> Self {
        RatFn { num: Poly1::zero(), den: Poly1::one() }
    }

    pub fn from_poly(p: Poly1) -> Self {
        RatFn { num: p, den: Poly1::one() }
    }

    pub fn num(&self) -> &Poly1 {
        &self.num
    }

    pub fn den(&self) -> &Poly1 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.scale(&ComplexRational::from_int(-1)), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn scale(&self, c: &ComplexRational) -> RatFn {
        RatFn::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: u32) -> RatFn {
        RatFn { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `self(inner(z))`; `None` if the new denominator vanishes identically.
    pub fn compose(&self, inner: &Poly1) -> Option<RatFn> {
        RatFn::new(self.num.compose(inner), self.den.compose(inner))
    }

    pub fn shift(&self, c: &ComplexRational) -> RatFn {
        RatFn::new(self.num.shift(c), self.den.shift(c)).expect("shift keeps den nonzero")
    }

    pub fn eval(&self, x: &ComplexRational) -> Option<ComplexRational> {
        let d = self.den.eval(x);
        d.inv().map(|di| &self.num.eval(x) * &di)
    }

    /// Laurent form when the reduced denominator is a monomial `z^k`.
    pub fn to_laurent(&self) -> Option<SkewPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let (k, c) = self.den.terms().next().unwrap();
        let ci = c.inv()?;
        Some(SkewPoly::from_terms(
            self.num.terms().map(|(e, a)| (e as i64 - k as i64, 0, a * &ci)),
        ))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        // -2z^2 / 2z = -z
        let r = RatFn::new(Poly1::from_ints(&[0, 0, -2]), Poly1::from_ints(&[0, 2])).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &Poly1::from_ints(&[0, -1]));
    }

    #[test]
    fn laurent_detection() {
        let r = RatFn::new(Poly1::from_ints(&[1, 1]), Poly1::from_ints(&[0, 0, 3])).unwrap();
        let l = r.to_laurent().unwrap();
        assert_eq!(l.coeff(-2, 0), ComplexRational::from_ratio(1, 3));
        let s = RatFn::new(Poly1::one(), Poly1::from_ints(&[-1, 1])).unwrap();
        assert!(s.to_laurent().is_none());
    }
}
