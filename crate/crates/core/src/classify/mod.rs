//! Infinite-symmetry classification into types I–IV.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::algebra::{GroupKind, Poly1, SkewPoly, SymmetryGroup, TurnPair};
use crate::error::Result;
use crate::numerics::{compactness_check, CompactnessReport};
use crate::skew::SkewProduct;
use crate::symmetry::{sigma_group, symmetry_group_with, SigmaOrder, SymmetryConfig, SymmetryReport};

/// Finite groups up to this order are listed element by element.
pub const MAX_LISTED_ELEMENTS: i64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TypeTag {
    I,
    II,
    III,
    IV,
    FiniteSym,
}

impl TypeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
            TypeTag::IV => "IV",
            TypeTag::FiniteSym => "FiniteSym",
        }
    }
}

/// `π(z, w) = (z^r, z^s w)` with `π ∘ f₀ = f̃ ∘ π`, `f₀ = (z^δ, q̃(1, w))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Semiconjugacy {
    pub r: i64,
    pub s: i64,
    pub base: Poly1,
}

/// How much of `π ∘ f₀ = f̃ ∘ π` was checked exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityCheck {
    /// Both components, on the monic normal form.
    Full,
    /// Second component `q̃(z^r, z^s w) = z^{sδ} q̃(1, w)`; the base map is
    /// not monic over the rationals.
    Fiber,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum JuliaShape {
    /// `J_f = S¹ × S¹`.
    Torus,
    /// `J_f = S¹ × J_q`.
    Product { julia_of: String },
    /// `J_f = ⋃_{z ∈ J_p} {z} × {|w| = e^{-Φ(z)}}`.
    CircleBundle { base: String, radius: String },
    /// `J_f = ⋃_{z ∈ S¹} {z} × z^{s/r} J_{q(1,w)}`.
    RotatedFamily { s: i64, r: i64, julia_of: String },
    /// No closed form.
    General,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub gamma: SymmetryGroup,
    pub type_tag: TypeTag,
    pub semiconjugacy: Option<Semiconjugacy>,
    pub identity_check: Option<IdentityCheck>,
    /// Order of the finite factor `Σ` in types II and III.
    pub sigma_factor: Option<i64>,
    pub julia_shape: JuliaShape,
    pub compactness: CompactnessReport,
    /// Tag is structural and certain; `uncertain` flags the group itself.
    pub uncertain: bool,
    /// The centered map has negative powers of `z`.
    pub laurent: bool,
    /// `Γ` listed when finite of order `≤ MAX_LISTED_ELEMENTS`.
    pub elements: Option<Vec<TurnPair>>,
    pub symmetry: SymmetryReport,
}

/// Exponents `(r, s)` with `r > 0`, `gcd(r, s) = 1` and
/// `q(z^r, z^s w) = z^{sδ} q(1, w)`, if any. `q` must have leading
/// coefficient `b_d = c·z^l`.
pub fn detect_semiconjugacy(q: &SkewPoly, delta: u32, d: u32, l: u32) -> Option<Semiconjugacy> {
    let (l, d, delta) = (l as i64, d as i64, delta as i64);
    let mut ratio: Option<Ratio<i64>> = None;
    for (n, m, _) in q.terms() {
        let m = m as i64;
        if m == d {
            if n != l {
                return None;
            }
            continue;
        }
        let t = Ratio::new(n - l, d - m);
        if *ratio.get_or_insert(t) != t {
            return None;
        }
    }
    let t = ratio?;
    let (s, r) = (*t.numer(), *t.denom());
    if s == 0 || r * l + s * (d - delta) != 0 {
        return None;
    }
    let lhs = q.substitute_monomial(r, s);
    let base = q.at_z_one();
    let rhs = SkewPoly::from_terms(base.terms().map(|(m, c)| (s * delta, m, c.clone())));
    (lhs == rhs).then_some(Semiconjugacy { r, s, base })
}

/// `π ∘ f₀ = f ∘ π` with both sides expanded, for `p = z^δ` monic.
pub fn verify_semiconjugacy(f: &SkewProduct, sc: &Semiconjugacy) -> bool {
    if !f.p().is_monic_monomial() {
        return false;
    }
    let delta = f.delta() as i64;
    // f ∘ π: second component q(z^r, z^s w), first (z^r)^δ.
    let f_pi = f.q().substitute_monomial(sc.r, sc.s);
    // π ∘ f₀: (z^{δ})^s · q(1, w), first (z^δ)^r.
    let pi_f0 = SkewPoly::from_terms(sc.base.terms().map(|(m, c)| (sc.s * delta, m, c.clone())));
    f_pi == pi_f0
}

pub fn julia_shape(tag: TypeTag, f: &SkewProduct, sc: Option<&Semiconjugacy>) -> JuliaShape {
    match tag {
        TypeTag::I => JuliaShape::Torus,
        TypeTag::II => JuliaShape::Product { julia_of: f.q().at_z_one().fmt_var("w") },
        TypeTag::III => JuliaShape::CircleBundle { base: f.p().fmt_var("z"), radius: "exp(-Phi(z))".into() },
        TypeTag::IV => {
            let sc = sc.expect("type IV carries a semiconjugacy");
            JuliaShape::RotatedFamily { s: sc.s, r: sc.r, julia_of: sc.base.fmt_var("w") }
        }
        TypeTag::FiniteSym => JuliaShape::General,
    }
}

/// Whether `γ` has the shape the tag predicts.
pub fn tag_matches_group(tag: TypeTag, g: &SymmetryGroup, sc: Option<&Semiconjugacy>) -> bool {
    match (tag, g.kind()) {
        (TypeTag::I, GroupKind::FullTorus) => true,
        (TypeTag::II, GroupKind::OneDimFamily { character, .. }) => *character == [0, 1],
        (TypeTag::III, GroupKind::OneDimFamily { character, .. }) => *character == [1, 0],
        (TypeTag::IV, GroupKind::OneDimFamily { character, .. }) => {
            let sc = sc.expect("type IV carries a semiconjugacy");
            character[0] * -sc.r == character[1] * sc.s
        }
        (TypeTag::FiniteSym, GroupKind::Finite { .. }) => true,
        _ => false,
    }
}

pub fn classify(f: &SkewProduct) -> Result<ClassificationReport> {
    classify_with(f, &SymmetryConfig::default())
}

pub fn classify_with(f: &SkewProduct, cfg: &SymmetryConfig) -> Result<ClassificationReport> {
    let symmetry = symmetry_group_with(f, cfg)?;
    let compactness = compactness_check(f);
    let gamma = symmetry.group.clone();
    let uncertain = !symmetry.status.is_exact();
    let elements = gamma
        .order()
        .filter(|&n| n <= MAX_LISTED_ELEMENTS)
        .and_then(|_| gamma.elements());
    let Some(t) = symmetry.normalized.translated.clone() else {
        return Ok(ClassificationReport {
            gamma,
            type_tag: TypeTag::FiniteSym,
            semiconjugacy: None,
            identity_check: None,
            sigma_factor: None,
            julia_shape: JuliaShape::General,
            compactness,
            uncertain: true,
            laurent: false,
            elements,
            symmetry,
        });
    };
    let nf = symmetry.normalized.normal_form().cloned().unwrap_or_else(|| t.clone());
    let p_mono = t.p().is_monomial();
    let (d, l) = (t.d(), t.l());
    let single_degree = t.q().terms().all(|(_, m, _)| m == d);
    let w_only = t.q().terms().all(|(n, _, _)| n == 0);
    let mut semiconjugacy = None;
    let tag = if p_mono && t.q().num_terms() == 1 {
        TypeTag::I
    } else if p_mono && w_only {
        TypeTag::II
    } else if single_degree {
        TypeTag::III
    } else if p_mono && t.b_d().is_monomial() {
        semiconjugacy = detect_semiconjugacy(nf.q(), nf.delta(), d, l);
        if semiconjugacy.is_some() {
            TypeTag::IV
        } else {
            TypeTag::FiniteSym
        }
    } else {
        TypeTag::FiniteSym
    };
    let identity_check = semiconjugacy.as_ref().map(|sc| {
        if verify_semiconjugacy(&nf, sc) {
            IdentityCheck::Full
        } else {
            IdentityCheck::Fiber
        }
    });
    let sigma_factor = match (tag, gamma.kind()) {
        (TypeTag::II | TypeTag::III, GroupKind::OneDimFamily { torsion, .. }) => Some(*torsion),
        _ => None,
    };
    let julia_shape = julia_shape(tag, &nf, semiconjugacy.as_ref());
    Ok(ClassificationReport {
        gamma,
        type_tag: tag,
        semiconjugacy,
        identity_check,
        sigma_factor,
        julia_shape,
        compactness,
        uncertain,
        laurent: !t.is_polynomial(),
        elements,
        symmetry,
    })
}

/// `Σ` order of the base map of a semiconjugacy.
pub fn base_sigma_order(sc: &Semiconjugacy) -> Result<SigmaOrder> {
    Ok(sigma_group(&sc.base)?.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Compactness;
    use crate::symmetry::{Justification, Status};

    fn sp(p: &[i64], q: &[(i64, i64, u32)]) -> SkewProduct {
        SkewProduct::new(Poly1::from_ints(p), SkewPoly::from_int_terms(q)).unwrap()
    }

    #[test]
    fn semiconjugacy_examples() {
        let q = SkewPoly::from_int_terms(&[(1, 1, 2), (1, 3, 0)]);
        let sc = detect_semiconjugacy(&q, 3, 2, 1).unwrap();
        assert_eq!((sc.r, sc.s), (1, 1));
        assert_eq!(sc.base, Poly1::from_ints(&[1, 0, 1]));

        let q = SkewPoly::from_int_terms(&[(1, 3, 5), (1, 1, 3), (1, 0, 2)]);
        let sc = detect_semiconjugacy(&q, 2, 5, 3).unwrap();
        assert_eq!((sc.r, sc.s), (1, -1));
        assert_eq!(sc.base, Poly1::from_ints(&[0, 0, 1, 1, 0, 1]));

        let q = SkewPoly::from_int_terms(&[(1, 1, 2), (1, 2, 0)]);
        assert_eq!(detect_semiconjugacy(&q, 3, 2, 1), None);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&sp(&[0, 0, 0, 1], &[(1, 1, 2), (1, 3, 0)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::IV);
        let sc = r.semiconjugacy.as_ref().unwrap();
        assert_eq!((sc.r, sc.s), (1, 1));
        assert_eq!(r.identity_check, Some(IdentityCheck::Full));
        assert!(tag_matches_group(r.type_tag, &r.gamma, Some(sc)));
        assert_eq!(base_sigma_order(sc).unwrap(), SigmaOrder::Finite(2));
        assert_eq!(r.julia_shape, JuliaShape::RotatedFamily { s: 1, r: 1, julia_of: "w^2 + 1".into() });

        let r = classify(&sp(&[0, 0, 1], &[(1, 3, 5), (1, 1, 3), (1, 0, 2)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::IV);
        assert_eq!(r.semiconjugacy.as_ref().map(|s| (s.r, s.s)), Some((1, -1)));

        let r = classify(&sp(&[0, 0, 0, 1], &[(1, 1, 2), (1, 1, 0)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::FiniteSym);
        assert_eq!(r.elements.as_ref().map(Vec::len), Some(4));

        let r = classify(&sp(&[-1, 0, 1], &[(1, 2, 2)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::III);
        assert_eq!(r.sigma_factor, Some(2));
        assert!(matches!(r.julia_shape, JuliaShape::CircleBundle { .. }));

        let r = classify(&sp(&[0, 0, 1], &[(1, 1, 2), (-1, 0, 2)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::III);
        assert_eq!(r.symmetry.status, Status::Exact(Justification::TypeIiiLowerBound));
        assert_eq!(r.compactness.verdict, Compactness::Noncompact);

        let r = classify(&sp(&[0, 0, 1], &[(1, 0, 2)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::I);
        assert_eq!(r.julia_shape, JuliaShape::Torus);

        let r = classify(&sp(&[0, 0, 1], &[(1, 0, 2), (-1, 0, 0)])).unwrap();
        assert_eq!(r.type_tag, TypeTag::II);
        assert_eq!(r.sigma_factor, Some(2));
        assert!(tag_matches_group(r.type_tag, &r.gamma, None));
    }
}
