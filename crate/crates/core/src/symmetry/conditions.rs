//! Character conditions on `(μ, ν)` and their closure under iteration.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::sigma::{base_condition_vectors, SigmaOrder};
use crate::algebra::{character, hnf_basis, IntLattice2, IntVec2, Poly1, SymmetryGroup, TurnPair};
use crate::error::{Error, Result};
use crate::skew::SkewProduct;

/// `[[δ, l], [0, d]]`, acting on exponent vectors by `(a, b) ↦ (δa + lb, db)`.
pub type Mat2 = [[i64; 2]; 2];

pub fn mstar(delta: u32, d: u32, l: u32) -> Mat2 {
    [[delta as i64, l as i64], [0, d as i64]]
}

pub fn apply_mstar(m: &Mat2, v: IntVec2) -> IntVec2 {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][1] * v[1]]
}

/// `(n - l, m - d)` for every term of `q̃`; requires `b̃_d = z^l`.
pub fn fiber_condition_vectors(f: &SkewProduct) -> Result<Vec<IntVec2>> {
    if !f.b_d().is_monomial() {
        return Err(Error::BoundsModeRequired);
    }
    Ok(term_condition_vectors(f))
}

/// Exponent differences of every term of `q̃` against the reference term
/// `z^l w^d`. These agree with the fiber conditions when `b̃_d` is a
/// monomial; otherwise they also include `(n - l, 0)` for the lower terms of
/// `b̃_d`.
pub fn term_condition_vectors(f: &SkewProduct) -> Vec<IntVec2> {
    let (l, d) = (f.l() as i64, f.d() as i64);
    f.q()
        .terms()
        .map(|(n, m, _)| [n - l, m as i64 - d])
        .filter(|v| *v != [0, 0])
        .collect()
}

/// Smallest lattice containing `l0` and stable under `M*`.
pub fn mstar_closure(l0: &IntLattice2, delta: u32, d: u32, l: u32) -> (IntLattice2, usize) {
    let m = mstar(delta, d, l);
    let mut cur = l0.clone();
    let mut rounds = 0;
    loop {
        let images: Vec<IntVec2> = cur.basis().iter().map(|&v| apply_mstar(&m, v)).collect();
        let next = cur.join(&images);
        if next == cur {
            return (cur, rounds);
        }
        cur = next;
        rounds += 1;
    }
}

pub fn is_mstar_stable(lat: &IntLattice2, m: &Mat2) -> bool {
    lat.basis().iter().all(|&v| lat.contains(apply_mstar(m, v)))
}

/// Level-one vectors, their lattice and its `M*`-closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSet {
    pub base_vectors: Vec<IntVec2>,
    pub fiber_vectors: Vec<IntVec2>,
    pub level1: IntLattice2,
    pub lattice: IntLattice2,
    pub mstar: Mat2,
    pub closure_rounds: usize,
}

impl ConditionSet {
    /// For a centered map `f̃` (translated normal form).
    pub fn new(f: &SkewProduct) -> Self {
        let base_vectors = base_condition_vectors(f.p());
        let fiber_vectors = term_condition_vectors(f);
        let mut all = base_vectors.clone();
        all.extend_from_slice(&fiber_vectors);
        let level1 = hnf_basis(&all);
        let (lattice, closure_rounds) = mstar_closure(&level1, f.delta(), f.d(), f.l());
        ConditionSet {
            base_vectors,
            fiber_vectors,
            level1,
            lattice,
            mstar: mstar(f.delta(), f.d(), f.l()),
            closure_rounds,
        }
    }

    pub fn is_certified(&self) -> bool {
        is_mstar_stable(&self.lattice, &self.mstar) && self.lattice.contains_lattice(&self.level1)
    }
}

/// `{μ ∈ Σ_p : μ^{l-j} = 1 for every nonzero coefficient b_j of b_d} × S¹`.
pub fn bd_gate_subgroup(b_d: &Poly1, sigma: SigmaOrder) -> SymmetryGroup {
    let l = b_d.degree().unwrap_or(0);
    let mut g = b_d.terms().filter(|&(j, _)| j < l).fold(0i64, |g, (j, _)| g.gcd(&((l - j) as i64)));
    if let SigmaOrder::Finite(m) = sigma {
        g = g.gcd(&m);
    }
    SymmetryGroup::mu_cyclic_times_circle(if g == 0 { None } else { Some(g) })
}

/// Exact check of `f̃ ∘ γ = γ_1 ∘ f̃` for `γ = (μz, νw)` on the support of
/// `f̃`, with `γ_1 = (μ^δ z, μ^l ν^d w)`.
pub fn satisfies_level_one(f: &SkewProduct, g: &TurnPair) -> bool {
    let delta = f.delta() as i64;
    let base = f.p().terms().all(|(j, _)| character([j as i64 - delta, 0], g).is_identity());
    let fiber = f
        .q()
        .terms()
        .all(|(n, m, _)| character([n - f.l() as i64, m as i64 - f.d() as i64], g).is_identity());
    base && fiber
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SkewPoly;

    fn sp(p: &[i64], q: &[(i64, i64, u32)]) -> SkewProduct {
        SkewProduct::new(Poly1::from_ints(p), SkewPoly::from_int_terms(q)).unwrap()
    }

    #[test]
    fn fiber_vector_examples() {
        let f = sp(&[0, 0, 0, 1], &[(1, 1, 2), (1, 1, 0)]);
        assert_eq!(fiber_condition_vectors(&f).unwrap(), vec![[0, -2]]);
        let f = sp(&[0, 0, 1], &[(1, 3, 5)]);
        assert!(fiber_condition_vectors(&f).unwrap().is_empty());
        let f = sp(&[0, 0, 1], &[(1, 3, 5), (1, 1, 3), (1, 0, 2)]);
        let mut v = fiber_condition_vectors(&f).unwrap();
        v.sort();
        assert_eq!(v, vec![[-3, -3], [-2, -2]]);
        let f = sp(&[0, 0, 1], &[(1, 1, 2), (-1, 0, 2)]);
        assert_eq!(fiber_condition_vectors(&f), Err(Error::BoundsModeRequired));
    }

    #[test]
    fn closure_examples() {
        let (l, _) = mstar_closure(&hnf_basis(&[[0, -2]]), 3, 2, 1);
        assert_eq!(l, hnf_basis(&[[2, 0], [0, 2]]));
        let (l, rounds) = mstar_closure(&hnf_basis(&[[2, -2]]), 3, 2, 1);
        assert_eq!(l, hnf_basis(&[[2, -2]]));
        assert_eq!(rounds, 0);
        assert_eq!(mstar_closure(&IntLattice2::zero(), 3, 2, 1).0, IntLattice2::zero());
    }

    #[test]
    fn gate_examples() {
        let inf = SigmaOrder::Infinite;
        assert_eq!(bd_gate_subgroup(&Poly1::monomial(1.into(), 3), inf), SymmetryGroup::full_torus());
        assert_eq!(
            bd_gate_subgroup(&Poly1::monomial(1.into(), 3), SigmaOrder::Finite(2)),
            SymmetryGroup::mu_cyclic_times_circle(Some(2))
        );
        for l in 1..=3 {
            let mut b = Poly1::monomial(1.into(), l);
            b.add_term(0, &(-1).into());
            assert_eq!(bd_gate_subgroup(&b, inf), SymmetryGroup::mu_cyclic_times_circle(Some(l as i64)));
        }
        let b = Poly1::from_ints(&[0, 1, 0, 1]);
        assert_eq!(bd_gate_subgroup(&b, inf), SymmetryGroup::mu_cyclic_times_circle(Some(2)));
    }
}
