//! Rotational symmetries `Σ_p` of a one-variable polynomial.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{hnf_basis, ComplexRational, IntVec2, Poly1, SymmetryGroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaOrder {
    Finite(i64),
    Infinite,
}

impl SigmaOrder {
    /// Whether a rotation of order `k` belongs to `Σ_p`.
    pub fn admits(&self, k: i64) -> bool {
        match self {
            SigmaOrder::Finite(m) => m % k == 0,
            SigmaOrder::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            SigmaOrder::Finite(m) => Some(*m),
            SigmaOrder::Infinite => None,
        }
    }
}

/// `gcd{δ - j : a_j ≠ 0, j < δ}` for `p` in normal form.
pub fn sigma_order(p: &Poly1) -> Result<SigmaOrder> {
    let delta = p.degree().unwrap_or(0);
    if delta < 2 {
        return Err(Error::DegreeTooSmall { which: "p", degree: delta as i64 });
    }
    if !p.is_monic() || !p.coeff(delta - 1).is_zero() {
        return Err(Error::NotNormalForm);
    }
    Ok(support_order(p))
}

fn support_order(p: &Poly1) -> SigmaOrder {
    let delta = p.degree().unwrap();
    let g = p.terms().filter(|&(j, _)| j < delta).fold(0i64, |g, (j, _)| g.gcd(&((delta - j) as i64)));
    if g == 0 {
        SigmaOrder::Infinite
    } else {
        SigmaOrder::Finite(g)
    }
}

/// The base conditions `μ^{δ-j} = 1`, one per nonzero lower coefficient.
pub fn base_condition_vectors(p: &Poly1) -> Vec<IntVec2> {
    let delta = p.degree().unwrap_or(0);
    p.terms().filter(|&(j, _)| j < delta).map(|(j, _)| [(delta - j) as i64, 0]).collect()
}

/// `Σ_p` with its centroid; the group is embedded in the torus with trivial
/// second factor.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaGroup {
    pub zeta: ComplexRational,
    pub order: SigmaOrder,
    pub group: SymmetryGroup,
    /// `p(z + ζ) - ζ`
    pub centered: Poly1,
}

pub fn sigma_group(p: &Poly1) -> Result<SigmaGroup> {
    let delta = p.degree().unwrap_or(0);
    if delta < 2 {
        return Err(Error::DegreeTooSmall { which: "p", degree: delta as i64 });
    }
    let lead = p.lead().unwrap();
    let zeta = -(&p.coeff(delta - 1) / &(lead * &ComplexRational::from_int(delta as i64)));
    let mut centered = p.shift(&zeta);
    centered.add_term(0, &-&zeta);
    let order = support_order(&centered);
    Ok(SigmaGroup { zeta, order, group: sigma_torus_group(order), centered })
}

/// `{μ^m = 1, ν = 1}` or `S¹ × {1}`.
pub fn sigma_torus_group(order: SigmaOrder) -> SymmetryGroup {
    let l = match order {
        SigmaOrder::Finite(m) => hnf_basis(&[[m, 0], [0, 1]]),
        SigmaOrder::Infinite => hnf_basis(&[[0, 1]]),
    };
    crate::algebra::annihilator(&l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RationalTurn;
    use num_complex::Complex64;

    /// Direct oracle: does `p(μz) = μ^δ p(z)` hold for a primitive `k`-th root?
    fn rotation_oracle(p: &Poly1, k: i64) -> bool {
        let delta = p.degree().unwrap();
        let mu = RationalTurn::new(1, k).to_complex();
        [Complex64::new(0.3, 0.7), Complex64::new(-1.1, 0.2), Complex64::new(0.5, -0.4)]
            .iter()
            .all(|&z| (p.eval_c64(mu * z) - mu.powu(delta) * p.eval_c64(z)).norm() < 1e-9)
    }

    #[test]
    fn sigma_order_examples() {
        assert_eq!(sigma_order(&Poly1::monomial(1.into(), 4)).unwrap(), SigmaOrder::Infinite);
        let p = Poly1::from_ints(&[0, 0, 1, 0, 0, 1]);
        assert_eq!(sigma_order(&p).unwrap(), SigmaOrder::Finite(3));
        assert!(rotation_oracle(&p, 3) && !rotation_oracle(&p, 6) && !rotation_oracle(&p, 2));
        let p = Poly1::from_ints(&[-1, 0, 1]);
        assert_eq!(sigma_order(&p).unwrap(), SigmaOrder::Finite(2));
        assert!(rotation_oracle(&p, 2));
        assert_eq!(sigma_order(&Poly1::from_ints(&[0, 1, 1])), Err(Error::NotNormalForm));
    }

    #[test]
    fn sigma_group_examples() {
        let g = sigma_group(&Poly1::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(g.order, SigmaOrder::Infinite);
        assert!(g.zeta.is_zero());
        let g = sigma_group(&Poly1::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(g.zeta, ComplexRational::from_ratio(-1, 2));
        assert_eq!(g.order, SigmaOrder::Finite(2));
        assert_eq!(g.centered, Poly1::from_terms([(2, 1.into()), (0, ComplexRational::from_ratio(1, 4))]));
        assert_eq!(g.group.order(), Some(2));
        let g = sigma_group(&Poly1::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(g.order, SigmaOrder::Finite(2));
    }

    #[test]
    fn base_vectors_examples() {
        assert!(base_condition_vectors(&Poly1::monomial(1.into(), 3)).is_empty());
        assert_eq!(base_condition_vectors(&Poly1::from_ints(&[-1, 0, 1])), vec![[2, 0]]);
        assert_eq!(base_condition_vectors(&Poly1::from_ints(&[0, 0, 1, 0, 0, 1])), vec![[3, 0]]);
    }
}
