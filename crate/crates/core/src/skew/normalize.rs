//! Centering and scaling of skew products.

use num_complex::Complex64;
use num_integer::binomial;

use super::{centroids, laurent_to_ratfn, CentroidData, SkewProduct};
use crate::algebra::{ComplexRational, Poly1, RatFn, SkewPoly};

/// Diagonal scaling `(Z, W) ↦ (c1 Z, c2 W)` with
/// `c1^{δ-1} = a_δ` and `c1^l c2^{d-1} = lead(b_d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaleSpec {
    pub c1: Complex64,
    pub c2: Complex64,
    /// Exact rational roots when they exist.
    pub exact: Option<(ComplexRational, ComplexRational)>,
    /// Significant digits carried by the float roots.
    pub precision: u32,
}

impl ScaleSpec {
    fn compute(a_delta: &ComplexRational, lead: &ComplexRational, delta: u32, d: u32, l: u32) -> Self {
        let kth = |x: Complex64, k: u32| x.powf(1.0 / k as f64);
        let c1 = kth(a_delta.to_complex64(), delta - 1);
        let c2 = kth(lead.to_complex64() / c1.powu(l), d - 1);
        let exact = a_delta.exact_real_root(delta - 1).and_then(|e1| {
            let rest = lead / &e1.pow(l);
            rest.exact_real_root(d - 1).map(|e2| (e1, e2))
        });
        ScaleSpec { c1, c2, exact, precision: 15 }
    }

    pub fn is_identity(&self) -> bool {
        matches!(&self.exact, Some((a, b)) if a.is_one() && b.is_one())
    }
}

/// Result of conjugating `f` by `h(z, w) = (z - ζ, w - ζ_z)` and then by the
/// diagonal scaling.
#[derive(Clone, Debug)]
pub struct NormalizedSkew {
    pub original: SkewProduct,
    pub centroids: CentroidData,
    /// `p̃(Z) = p(Z + ζ) - ζ`.
    pub p_tilde: Poly1,
    /// Coefficient of `W^m` in the translated second component, index `m`.
    pub fiber_coeffs: Vec<RatFn>,
    /// Every reduced fiber coefficient has a monomial denominator.
    pub laurent_ok: bool,
    /// The translated map (same support as the fully normalized one).
    pub translated: Option<SkewProduct>,
    pub scale: ScaleSpec,
    /// Translated and scaled map, when the scaling is rational.
    pub scaled: Option<SkewProduct>,
}

impl NormalizedSkew {
    /// The most normalized exact form available.
    pub fn normal_form(&self) -> Option<&SkewProduct> {
        self.scaled.as_ref().or(self.translated.as_ref())
    }

    pub fn was_already_centered(&self) -> bool {
        self.centroids.is_origin()
    }
}

pub fn normalize(f: &SkewProduct) -> NormalizedSkew {
    let c = centroids(f);
    let p_tilde = {
        let mut p = f.p().shift(&c.zeta);
        p.add_term(0, &-&c.zeta);
        p
    };
    let zs = c.zeta_z.shift(&c.zeta);
    let b: Vec<RatFn> = (0..=f.d()).map(|j| laurent_to_ratfn(&f.b(j)).shift(&c.zeta)).collect();
    let mut fiber_coeffs = Vec::with_capacity(b.len());
    for m in 0..=f.d() {
        let mut acc = RatFn::zero();
        for j in m..=f.d() {
            if b[j as usize].is_zero() {
                continue;
            }
            let binom = ComplexRational::from_int(binomial(j as i64, m as i64));
            acc = acc.add(&b[j as usize].mul(&zs.pow(j - m)).scale(&binom));
        }
        fiber_coeffs.push(acc);
    }
    let target = c.zeta_z.compose(&f.p().shift(&c.zeta)).expect("p is nonconstant");
    fiber_coeffs[0] = fiber_coeffs[0].sub(&target);

    let laurent: Option<Vec<SkewPoly>> = fiber_coeffs.iter().map(|r| r.to_laurent()).collect();
    let laurent_ok = laurent.is_some();
    let translated = laurent.map(|ls| {
        let mut q = SkewPoly::zero();
        for (m, lc) in ls.iter().enumerate() {
            for (n, _, a) in lc.terms() {
                q.add_term(n, m as u32, a);
            }
        }
        SkewProduct::new(p_tilde.clone(), q).expect("translation preserves degrees")
    });

    let scale = ScaleSpec::compute(
        f.p().lead().expect("nonzero"),
        f.b_d().lead().expect("nonzero"),
        f.delta(),
        f.d(),
        f.l(),
    );
    let scaled = match (&translated, &scale.exact) {
        (Some(t), Some((c1, c2))) => Some(apply_scaling(t, c1, c2)),
        _ => None,
    };
    NormalizedSkew { original: f.clone(), centroids: c, p_tilde, fiber_coeffs, laurent_ok, translated, scale, scaled }
}

/// Conjugates by `(z, w) ↦ (c1 z, c2 w)`.
fn apply_scaling(f: &SkewProduct, c1: &ComplexRational, c2: &ComplexRational) -> SkewProduct {
    let p = Poly1::from_terms(f.p().terms().map(|(j, a)| (j, a * &c1.powi(1 - j as i64).unwrap())));
    let q = SkewPoly::from_terms(f.q().terms().map(|(n, m, a)| {
        let k = &c2.powi(1 - m as i64).unwrap() * &c1.powi(-n).unwrap();
        (n, m, a * &k)
    }));
    SkewProduct::new(p, q).expect("scaling preserves degrees")
}
