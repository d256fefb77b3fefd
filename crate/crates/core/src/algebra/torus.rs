//! Closed subgroups of the 2-torus, presented as annihilators of lattices.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::lattice::{snf_quotient, IntLattice2, IntVec2};
use super::turn::RationalTurn;

pub type TurnPair = (RationalTurn, RationalTurn);

/// Evaluates the character `χ_v(μ, ν) = μ^{v0} ν^{v1}`.
pub fn character(v: IntVec2, g: &TurnPair) -> RationalTurn {
    g.0.pow(v[0]).compose(&g.1.pow(v[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupKind {
    FullTorus,
    /// `{(μ, ν) : (μ^a ν^b)^torsion = 1}` with `(a, b)` primitive.
    OneDimFamily { character: IntVec2, torsion: i64 },
    /// `Z/d1 × Z/d2`, `d1 | d2`, generated by `generators`.
    Finite { d1: i64, d2: i64, generators: Vec<TurnPair> },
}

/// A closed subgroup `Γ ⊂ S¹ × S¹`, the common kernel of the characters in
/// `lattice`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    kind: GroupKind,
    lattice: IntLattice2,
}

/// The subgroup of the torus on which every character of `l` is trivial.
pub fn annihilator(l: &IntLattice2) -> SymmetryGroup {
    let kind = match l.rank() {
        0 => GroupKind::FullTorus,
        1 => {
            let (mut dir, e) = l.primitive_generator().expect("rank 1");
            if dir[0] < 0 || (dir[0] == 0 && dir[1] < 0) {
                dir = [-dir[0], -dir[1]];
            }
            GroupKind::OneDimFamily { character: dir, torsion: e }
        }
        _ => {
            let q = snf_quotient(l).expect("rank 2");
            GroupKind::Finite { d1: q.d1, d2: q.d2, generators: q.generators.to_vec() }
        }
    };
    SymmetryGroup { kind, lattice: l.clone() }
}

impl SymmetryGroup {
    pub fn full_torus() -> Self {
        annihilator(&IntLattice2::zero())
    }

    /// `{μ^order = 1} × S¹`, or `S¹ × S¹` when `order` is `None`.
    pub fn mu_cyclic_times_circle(order: Option<i64>) -> Self {
        match order {
            Some(m) => annihilator(&super::lattice::hnf_basis(&[[m, 0]])),
            None => SymmetryGroup::full_torus(),
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn lattice(&self) -> &IntLattice2 {
        &self.lattice
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, GroupKind::Finite { .. })
    }

    pub fn order(&self) -> Option<i64> {
        match &self.kind {
            GroupKind::Finite { d1, d2, .. } => Some(d1 * d2),
            _ => None,
        }
    }

    pub fn contains(&self, g: &TurnPair) -> bool {
        self.lattice.basis().iter().all(|&v| character(v, g).is_identity())
    }

    /// `Γ ⊆ other` as closed subgroups.
    pub fn is_subgroup_of(&self, other: &SymmetryGroup) -> bool {
        self.lattice.contains_lattice(&other.lattice)
    }

    /// All elements of a finite group, or `None` for infinite groups.
    pub fn elements(&self) -> Option<Vec<TurnPair>> {
        let GroupKind::Finite { d1, d2, generators } = &self.kind else {
            return None;
        };
        let (g1, g2) = (generators[0], generators[1]);
        let mut out = Vec::with_capacity((d1 * d2) as usize);
        for a in 0..*d1 {
            for b in 0..*d2 {
                out.push((
                    g1.0.pow(a).compose(&g2.0.pow(b)),
                    g1.1.pow(a).compose(&g2.1.pow(b)),
                ));
            }
        }
        out.sort();
        Some(out)
    }

    /// Elements `(μ, ν)` whose components both have order `≤ max_order`.
    pub fn elements_up_to_order(&self, max_order: i64) -> Vec<TurnPair> {
        let turns = RationalTurn::all_up_to_order(max_order);
        let mut out = Vec::new();
        for &mu in &turns {
            for &nu in &turns {
                if self.contains(&(mu, nu)) {
                    out.push((mu, nu));
                }
            }
        }
        out.sort();
        out
    }

    /// Human-readable presentation, e.g. `{(μ,ν) : μ^2 = 1, ν^2 = 1}`.
    pub fn presentation(&self) -> String {
        if self.lattice.rank() == 0 {
            return "S¹ × S¹".to_string();
        }
        let eqs: Vec<String> = self
            .lattice
            .basis()
            .iter()
            .map(|&[a, b]| {
                let lhs = char_side("μ", a.max(0), "ν", b.max(0));
                let rhs = char_side("μ", (-a).max(0), "ν", (-b).max(0));
                format!("{lhs} = {rhs}")
            })
            .collect();
        format!("{{(μ,ν) : {}}}", eqs.join(", "))
    }
}

fn char_side(x: &str, a: i64, y: &str, b: i64) -> String {
    let pw = |v: &str, e: i64| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let s = [pw(x, a), pw(y, b)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>();
    if s.is_empty() {
        "1".to_string()
    } else {
        s.concat()
    }
}

impl fmt::Debug for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.presentation(), self.lattice)
    }
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.presentation())
    }
}

#[cfg(test)]
mod tests {
    use super::super::lattice::hnf_basis;
    use super::*;

    #[test]
    fn annihilator_examples() {
        let g = annihilator(&hnf_basis(&[[2, -2]]));
        assert_eq!(g.kind(), &GroupKind::OneDimFamily { character: [1, -1], torsion: 2 });
        assert!(g.contains(&(RationalTurn::new(1, 4), RationalTurn::new(3, 4))));
        assert!(!g.contains(&(RationalTurn::new(1, 4), RationalTurn::new(0, 1))));

        let g = annihilator(&hnf_basis(&[[1, 1]]));
        assert_eq!(g.kind(), &GroupKind::OneDimFamily { character: [1, 1], torsion: 1 });
        assert!(g.contains(&(RationalTurn::new(1, 5), RationalTurn::new(4, 5))));

        assert_eq!(annihilator(&IntLattice2::zero()).kind(), &GroupKind::FullTorus);
    }

    #[test]
    fn finite_group_elements() {
        let g = annihilator(&hnf_basis(&[[2, 0], [0, 2]]));
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 4);
        let half = RationalTurn::new(1, 2);
        let one = RationalTurn::identity();
        for e in [(one, one), (one, half), (half, one), (half, half)] {
            assert!(els.contains(&e));
        }
        assert_eq!(g.elements_up_to_order(12), els);
    }
}
