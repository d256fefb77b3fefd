//! Sparse univariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::rational::ComplexRational;

/// Univariate polynomial stored as `exponent → coefficient` with no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly1 {
    coeffs: BTreeMap<u32, ComplexRational>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1::default()
    }

    pub fn one() -> Self {
        Poly1::constant(ComplexRational::one())
    }

    pub fn constant(c: ComplexRational) -> Self {
        Poly1::monomial(c, 0)
    }

    /// `z`
    pub fn x() -> Self {
        Poly1::monomial(ComplexRational::one(), 1)
    }

    pub fn monomial(c: ComplexRational, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Poly1 { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, ComplexRational)>>(terms: I) -> Self {
        let mut p = Poly1::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly1::from_terms(
            cs.iter()
                .enumerate()
                .map(|(e, &c)| (e as u32, ComplexRational::from_int(c))),
        )
    }

    pub fn add_term(&mut self, e: u32, c: &ComplexRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn lead(&self) -> Option<&ComplexRational> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, e: u32) -> ComplexRational {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &ComplexRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// True when the polynomial is exactly `z^e` (monic monomial).
    pub fn is_monic_monomial(&self) -> bool {
        self.is_monomial() && self.lead().is_some_and(|c| c.is_one())
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &ComplexRational) -> Poly1 {
        if c.is_zero() {
            return Poly1::zero();
        }
        Poly1 {
            coeffs: self.coeffs.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly1) -> Poly1 {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, c);
        }
        r
    }

    pub fn sub(&self, o: &Poly1) -> Poly1 {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, &-c);
        }
        r
    }

    pub fn mul(&self, o: &Poly1) -> Poly1 {
        let mut r = Poly1::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }

    pub fn pow(&self, mut e: u32) -> Poly1 {
        let mut base = self.clone();
        let mut acc = Poly1::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self(inner(z))`
    pub fn compose(&self, inner: &Poly1) -> Poly1 {
        // Horner over the dense exponent range keeps the number of
        // multiplications linear in the degree.
        let Some(deg) = self.degree() else {
            return Poly1::zero();
        };
        let mut acc = Poly1::constant(self.coeff(deg));
        for e in (0..deg).rev() {
            acc = acc.mul(inner);
            acc.add_term(0, &self.coeff(e));
        }
        acc
    }

    /// `self(z + c)`
    pub fn shift(&self, c: &ComplexRational) -> Poly1 {
        let mut inner = Poly1::x();
        inner.add_term(0, c);
        self.compose(&inner)
    }

    /// `self(c·z)`
    pub fn dilate(&self, c: &ComplexRational) -> Poly1 {
        Poly1 {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, a)| (e, a * &c.pow(e)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn eval(&self, x: &ComplexRational) -> ComplexRational {
        let Some(deg) = self.degree() else {
            return ComplexRational::zero();
        };
        let mut acc = self.coeff(deg);
        for e in (0..deg).rev() {
            acc = &acc * x;
            acc += &self.coeff(e);
        }
        acc
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.to_dense_c64().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Dense float coefficients, lowest degree first.
    pub fn to_dense_c64(&self) -> Vec<Complex64> {
        let n = self.degree().map_or(0, |d| d as usize + 1);
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for (e, c) in self.terms() {
            v[e as usize] = c.to_complex64();
        }
        v
    }

    pub fn derivative(&self) -> Poly1 {
        Poly1::from_terms(
            self.terms()
                .filter(|&(e, _)| e > 0)
                .map(|(e, c)| (e - 1, c * &ComplexRational::from_int(e as i64))),
        )
    }

    pub fn monic(&self) -> Poly1 {
        match self.lead() {
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
            None => Poly1::zero(),
        }
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Poly1) -> Option<(Poly1, Poly1)> {
        let dd = d.degree()?;
        let dl = d.lead()?.inv()?;
        let mut q = Poly1::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lead().unwrap() * &dl;
            let t = Poly1::monomial(c, rd - dd);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some((q, r))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Poly1) -> Poly1 {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        join_terms(self.terms().rev().map(|(e, c)| (c, monomial_str(&[(var, e as i64)]))))
    }
}

pub(crate) fn monomial_str(vars: &[(&str, i64)]) -> String {
    vars.iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins signed terms `c·mono` into text the map parser reads back to the
/// same value.
pub(crate) fn join_terms<'a>(terms: impl Iterator<Item = (&'a ComplexRational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let (neg, body) = fmt_term(c, &mono);
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn fmt_term(c: &ComplexRational, mono: &str) -> (bool, String) {
    let (neg, coeff) = if c.im.is_zero() {
        (c.re.is_negative(), ComplexRational::real(c.re.abs()))
    } else if c.re.is_zero() {
        (c.im.is_negative(), ComplexRational::new(c.re.clone(), c.im.abs()))
    } else {
        (false, c.clone())
    };
    let lit = if !c.im.is_zero() && !c.re.is_zero() { format!("({coeff})") } else { coeff.to_string() };
    let body = match (mono.is_empty(), coeff.is_one()) {
        (true, _) => lit,
        (false, true) => mono.to_string(),
        (false, false) => format!("{lit}*{mono}"),
    };
    (neg, body)
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("z"))
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_and_compose() {
        // (z - 1/2)^2 + (z - 1/2) = z^2 - 1/4
        let p = Poly1::from_ints(&[0, 1, 1]);
        let s = p.shift(&ComplexRational::from_ratio(-1, 2));
        assert_eq!(s, Poly1::from_terms([(2, 1.into()), (0, ComplexRational::from_ratio(-1, 4))]));
        let sq = Poly1::from_ints(&[0, 0, 1]);
        assert_eq!(sq.compose(&sq), Poly1::from_ints(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn gcd_over_gaussian_rationals() {
        // (z - i)(z + 2) and (z - i)(z - 3)
        let zi = Poly1::from_terms([(1, 1.into()), (0, -ComplexRational::i())]);
        let a = zi.mul(&Poly1::from_ints(&[2, 1]));
        let b = zi.mul(&Poly1::from_ints(&[-3, 1]));
        assert_eq!(a.gcd(&b), zi);
        assert!(Poly1::from_ints(&[1, 1]).gcd(&Poly1::from_ints(&[-1, 1])).is_constant());
    }

    #[test]
    fn eval_exact_and_float() {
        let p = Poly1::from_ints(&[-1, 0, 1]);
        assert_eq!(p.eval(&ComplexRational::from_int(3)), ComplexRational::from_int(8));
        let v = p.eval_c64(Complex64::new(0.0, 1.0));
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-15);
    }
}
