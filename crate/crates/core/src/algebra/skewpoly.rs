//! Sparse polynomials in `w` whose coefficients are Laurent polynomials in `z`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::poly1::{join_terms, monomial_str, Poly1};
use super::rational::ComplexRational;
use crate::error::{Error, Result};

/// Terms `c · z^n · w^m` keyed by `(n, m)`; `n` may be negative, `m ≥ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    terms: BTreeMap<(i64, u32), ComplexRational>,
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly::default()
    }

    pub fn one() -> Self {
        SkewPoly::monomial(ComplexRational::one(), 0, 0)
    }

    pub fn z() -> Self {
        SkewPoly::monomial(ComplexRational::one(), 1, 0)
    }

    pub fn w() -> Self {
        SkewPoly::monomial(ComplexRational::one(), 0, 1)
    }

    pub fn constant(c: ComplexRational) -> Self {
        SkewPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: ComplexRational, n: i64, m: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((n, m), c);
        }
        SkewPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, u32, ComplexRational)>>(it: I) -> Self {
        let mut q = SkewPoly::zero();
        for (n, m, c) in it {
            q.add_term(n, m, &c);
        }
        q
    }

    /// Integer-coefficient convenience constructor: `(coeff, n, m)` triples.
    pub fn from_int_terms(ts: &[(i64, i64, u32)]) -> Self {
        SkewPoly::from_terms(ts.iter().map(|&(c, n, m)| (n, m, ComplexRational::from_int(c))))
    }

    /// Embeds a polynomial in `z` as a `w`-constant.
    pub fn from_z_poly(p: &Poly1) -> Self {
        SkewPoly::from_terms(p.terms().map(|(e, c)| (e as i64, 0, c.clone())))
    }

    /// `c(z) · w^m` for a polynomial `c`.
    pub fn from_w_coeff(p: &Poly1, m: u32) -> Self {
        SkewPoly::from_terms(p.terms().map(|(e, c)| (e as i64, m, c.clone())))
    }

    pub fn add_term(&mut self, n: i64, m: u32, c: &ComplexRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((n, m)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(n, m));
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, u32, &ComplexRational)> {
        self.terms.iter().map(|(&(n, m), c)| (n, m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, n: i64, m: u32) -> ComplexRational {
        self.terms.get(&(n, m)).cloned().unwrap_or_default()
    }

    /// The set of exponent pairs with nonzero coefficient.
    pub fn support(&self) -> Vec<(i64, u32)> {
        self.terms.keys().copied().collect()
    }

    pub fn w_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, m)| m).max()
    }

    pub fn min_z_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|&(n, _)| n).min()
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_z_exponent().is_none_or(|n| n >= 0)
    }

    pub fn depends_on_w(&self) -> bool {
        self.terms.keys().any(|&(_, m)| m > 0)
    }

    pub fn depends_on_z(&self) -> bool {
        self.terms.keys().any(|&(n, _)| n != 0)
    }

    /// Coefficient of `w^m` as a Laurent polynomial in `z` (a `w`-free SkewPoly).
    pub fn w_coeff(&self, m: u32) -> SkewPoly {
        SkewPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, mm), _)| mm == m)
                .map(|(&(n, _), c)| ((n, 0), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `w^m` as a polynomial; `None` if it has negative powers of `z`.
    pub fn w_coeff_poly(&self, m: u32) -> Option<Poly1> {
        let mut p = Poly1::zero();
        for (n, mm, c) in self.terms() {
            if mm != m {
                continue;
            }
            if n < 0 {
                return None;
            }
            p.add_term(n as u32, c);
        }
        Some(p)
    }

    /// A `w`-free SkewPoly with nonnegative exponents as a `Poly1`.
    pub fn to_z_poly(&self) -> Option<Poly1> {
        if self.depends_on_w() {
            return None;
        }
        self.w_coeff_poly(0)
    }

    pub fn scale(&self, c: &ComplexRational) -> SkewPoly {
        if c.is_zero() {
            return SkewPoly::zero();
        }
        SkewPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    pub fn add(&self, o: &SkewPoly) -> SkewPoly {
        let mut r = self.clone();
        for (n, m, c) in o.terms() {
            r.add_term(n, m, c);
        }
        r
    }

    pub fn sub(&self, o: &SkewPoly) -> SkewPoly {
        let mut r = self.clone();
        for (n, m, c) in o.terms() {
            r.add_term(n, m, &-c);
        }
        r
    }

    pub fn mul(&self, o: &SkewPoly) -> SkewPoly {
        self.mul_budget(o, usize::MAX).expect("unbounded budget")
    }

    /// Product, failing when the result exceeds `budget` terms.
    pub fn mul_budget(&self, o: &SkewPoly, budget: usize) -> Result<SkewPoly> {
        let mut r = SkewPoly::zero();
        for (n1, m1, c1) in self.terms() {
            for (n2, m2, c2) in o.terms() {
                r.add_term(n1 + n2, m1 + m2, &(c1 * c2));
            }
            if r.num_terms() > budget {
                return Err(Error::IterateTooLarge { terms: r.num_terms(), budget });
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32) -> SkewPoly {
        self.pow_budget(e, usize::MAX).expect("unbounded budget")
    }

    pub fn pow_budget(&self, mut e: u32, budget: usize) -> Result<SkewPoly> {
        let mut base = self.clone();
        let mut acc = SkewPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_budget(&base, budget)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_budget(&base, budget)?;
            }
        }
        Ok(acc)
    }

    /// `self(zsub(z), wsub(z, w))`.
    ///
    /// Negative powers of `z` in `self` are only allowed when `zsub` is a
    /// monomial; otherwise the result would need a non-monomial denominator.
    pub fn compose(&self, zsub: &Poly1, wsub: &SkewPoly, budget: usize) -> Result<SkewPoly> {
        let zsub_mono = if zsub.is_monomial() {
            let (e, c) = zsub.terms().next().unwrap();
            Some((e as i64, c.clone()))
        } else {
            None
        };
        let zs = SkewPoly::from_z_poly(zsub);
        let mut zpow: BTreeMap<i64, SkewPoly> = BTreeMap::new();
        let mut wpow: BTreeMap<u32, SkewPoly> = BTreeMap::new();
        let mut out = SkewPoly::zero();
        for (n, m, c) in self.terms() {
            if let std::collections::btree_map::Entry::Vacant(e) = zpow.entry(n) {
                let v = if n >= 0 {
                    match &zsub_mono {
                        Some((e, a)) => SkewPoly::monomial(a.pow(n as u32), e * n, 0),
                        None => zs.pow_budget(n as u32, budget)?,
                    }
                } else {
                    match &zsub_mono {
                        Some((e, a)) => SkewPoly::monomial(
                            a.powi(n).ok_or(Error::DivisionByZero)?,
                            e * n,
                            0,
                        ),
                        None => return Err(Error::NonMonomialDenominator),
                    }
                };
                e.insert(v);
            }
            if let std::collections::btree_map::Entry::Vacant(e) = wpow.entry(m) {
                e.insert(wsub.pow_budget(m, budget)?);
            }
            let t = zpow[&n].mul_budget(&wpow[&m], budget)?.scale(c);
            out = out.add(&t);
            if out.num_terms() > budget {
                return Err(Error::IterateTooLarge { terms: out.num_terms(), budget });
            }
        }
        Ok(out)
    }

    /// `self(z, w + t(z, w))`; with `t` free of `w` this is a fiberwise translation.
    pub fn translate_w(&self, t: &SkewPoly) -> SkewPoly {
        let wsub = SkewPoly::w().add(t);
        self.compose(&Poly1::x(), &wsub, usize::MAX).expect("identity z-substitution")
    }

    /// `self(z^r, z^s · w)` — the monomial change of variables of a
    /// semiconjugacy. Any integers `r`, `s` are allowed (Laurent result).
    pub fn substitute_monomial(&self, r: i64, s: i64) -> SkewPoly {
        SkewPoly::from_terms(self.terms().map(|(n, m, c)| (r * n + s * m as i64, m, c.clone())))
    }

    /// `self(μ z, ν w)` for exact scalars.
    pub fn dilate(&self, mu: &ComplexRational, nu: &ComplexRational) -> Option<SkewPoly> {
        let mut out = SkewPoly::zero();
        for (n, m, c) in self.terms() {
            let f = &mu.powi(n)? * &nu.pow(m);
            out.add_term(n, m, &(c * &f));
        }
        Some(out)
    }

    /// `self(1, w)` as a polynomial in `w`.
    pub fn at_z_one(&self) -> Poly1 {
        Poly1::from_terms(self.terms().map(|(_, m, c)| (m, c.clone())))
    }

    pub fn eval(&self, z: &ComplexRational, w: &ComplexRational) -> Option<ComplexRational> {
        let mut acc = ComplexRational::zero();
        for (n, m, c) in self.terms() {
            acc += &(c * &(&z.powi(n)? * &w.pow(m)));
        }
        Some(acc)
    }

    pub fn eval_c64(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.terms()
            .map(|(n, m, c)| c.to_complex64() * z.powi(n as i32) * w.powu(m))
            .sum()
    }

    pub fn fmt_vars(&self, zv: &str, wv: &str) -> String {
        // Highest w-degree first, then highest z-degree.
        let mut keys: Vec<_> = self.terms().collect();
        keys.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
        join_terms(keys.into_iter().map(|(n, m, c)| (c, monomial_str(&[(zv, n), (wv, m as i64)]))))
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_vars("z", "w"))
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}
