//! The skew-product data model `f(z, w) = (p(z), q(z, w))`.

mod normalize;

pub use normalize::{normalize, NormalizedSkew, ScaleSpec};

use std::fmt;

use crate::algebra::{ComplexRational, Poly1, RatFn, SkewPoly};
use crate::error::{Error, Result};

/// Default cap on the number of terms of a symbolic iterate.
pub const DEFAULT_ITERATE_BUDGET: usize = 200_000;

/// A validated polynomial skew product.
///
/// `q` may carry negative powers of `z` (normalized rational skew products);
/// its leading `w`-coefficient `b_d` is always a polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewProduct {
    p: Poly1,
    q: SkewPoly,
    b_d: Poly1,
    delta: u32,
    d: u32,
    l: u32,
}

impl SkewProduct {
    pub fn new(p: Poly1, q: SkewPoly) -> Result<Self> {
        let delta = p.degree().unwrap_or(0);
        if delta < 2 {
            return Err(Error::DegreeTooSmall { which: "p", degree: delta as i64 });
        }
        let d = q.w_degree().unwrap_or(0);
        if d < 2 {
            return Err(Error::DegreeTooSmall { which: "q in w", degree: d as i64 });
        }
        let b_d = q.w_coeff_poly(d).ok_or(Error::NonMonomialDenominator)?;
        if b_d.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let l = b_d.degree().unwrap();
        Ok(SkewProduct { p, q, b_d, delta, d, l })
    }

    /// Checks a raw pair of bivariate expressions and builds the skew product.
    pub fn validate(first: &SkewPoly, second: &SkewPoly) -> Result<Self> {
        if first.depends_on_w() {
            return Err(Error::FirstComponentDependsOnW);
        }
        if !first.is_polynomial() || !second.is_polynomial() {
            return Err(Error::BadExponent);
        }
        let p = first.to_z_poly().expect("w-free polynomial");
        SkewProduct::new(p, second.clone())
    }

    pub fn p(&self) -> &Poly1 {
        &self.p
    }

    pub fn q(&self) -> &SkewPoly {
        &self.q
    }

    /// `δ = deg p`
    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// `d = deg_w q`
    pub fn d(&self) -> u32 {
        self.d
    }

    /// `l = deg b_d`
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn b_d(&self) -> &Poly1 {
        &self.b_d
    }

    /// `b_j` as a (Laurent) polynomial in `z`.
    pub fn b(&self, j: u32) -> SkewPoly {
        self.q.w_coeff(j)
    }

    /// `b_d` is a nonzero constant.
    pub fn is_nondegenerate(&self) -> bool {
        self.l == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.q.is_polynomial()
    }

    /// `p` and `b_d` monic, `a_{δ-1} = 0` and `b_{d-1} ≡ 0`.
    pub fn is_normal_form(&self) -> bool {
        self.p.is_monic()
            && self.p.coeff(self.delta - 1).is_zero()
            && self.b_d.is_monic()
            && self.b(self.d - 1).is_zero()
    }

    /// The fiber map `q_z` evaluated exactly.
    pub fn eval(&self, z: &ComplexRational, w: &ComplexRational) -> Option<(ComplexRational, ComplexRational)> {
        Some((self.p.eval(z), self.q.eval(z, w)?))
    }
}

impl fmt::Display for SkewProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

impl fmt::Debug for SkewProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewProduct{self}")
    }
}

/// Base centroid `ζ` and fiber centroid `ζ_z` (a rational function of `z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidData {
    pub zeta: ComplexRational,
    pub zeta_z: RatFn,
}

impl CentroidData {
    pub fn is_origin(&self) -> bool {
        self.zeta.is_zero() && self.zeta_z.is_zero()
    }
}

/// Laurent polynomial in `z` (a `w`-free SkewPoly) as a rational function.
pub(crate) fn laurent_to_ratfn(c: &SkewPoly) -> RatFn {
    let k = (-c.min_z_exponent().unwrap_or(0)).max(0);
    let num = Poly1::from_terms(c.terms().map(|(n, _, a)| ((n + k) as u32, a.clone())));
    RatFn::new(num, Poly1::monomial(ComplexRational::one(), k as u32)).expect("monomial den")
}

/// `ζ = -a_{δ-1} / (δ a_δ)` and `ζ_z = -b_{d-1}(z) / (d b_d(z))`.
pub fn centroids(f: &SkewProduct) -> CentroidData {
    let a_delta = f.p.lead().expect("nonzero p");
    let zeta = -(&f.p.coeff(f.delta - 1) / &(a_delta * &ComplexRational::from_int(f.delta as i64)));
    let sub = laurent_to_ratfn(&f.b(f.d - 1));
    let den = RatFn::from_poly(f.b_d.scale(&ComplexRational::from_int(f.d as i64)));
    let zeta_z = RatFn::new(
        sub.num().mul(den.den()).scale(&ComplexRational::from_int(-1)),
        sub.den().mul(den.num()),
    )
    .expect("b_d nonzero");
    CentroidData { zeta, zeta_z }
}

/// `(p^n, Q_z^n)` where `Q_z^n(w) = q_{p^{n-1}(z)} ∘ ⋯ ∘ q_z(w)`.
pub fn iterate_symbolic(f: &SkewProduct, n: u32, budget: usize) -> Result<(Poly1, SkewPoly)> {
    assert!(n >= 1, "iterate index starts at 1");
    let mut pk = f.p.clone();
    let mut qk = f.q.clone();
    for _ in 1..n {
        qk = f.q.compose(&pk, &qk, budget)?;
        pk = f.p.compose(&pk);
        if pk.num_terms() > budget {
            return Err(Error::IterateTooLarge { terms: pk.num_terms(), budget });
        }
    }
    Ok((pk, qk))
}
