//! Subgroups of `Z²` in Hermite normal form, and their Smith quotients.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::turn::RationalTurn;
use crate::error::{Error, Result};

pub type IntVec2 = [i64; 2];

/// A subgroup of `Z²` stored in canonical Hermite form.
///
/// * rank 0: no basis vectors;
/// * rank 1: one vector `(a, b)` with `a > 0`, or `a = 0, b > 0`;
/// * rank 2: rows `(a, b), (0, c)` with `a > 0`, `c > 0`, `0 ≤ b < c`.
///
/// Two generating sets give the same subgroup iff their canonical bases are
/// equal, so `==` is subgroup equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntLattice2 {
    basis: Vec<IntVec2>,
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("lattice entry overflowed i64")
}

/// Canonical basis of the subgroup generated by `vectors`.
pub fn hnf_basis(vectors: &[IntVec2]) -> IntLattice2 {
    let mut pivot: Option<[i128; 2]> = None;
    let mut second = 0i128;
    for v in vectors {
        let v = [v[0] as i128, v[1] as i128];
        if v[0] == 0 {
            second = second.gcd(&v[1]);
            continue;
        }
        match pivot {
            None => pivot = Some(v),
            Some(p) => {
                let e = p[0].extended_gcd(&v[0]);
                let g = e.gcd;
                let np = [g, e.x * p[1] + e.y * v[1]];
                // The complementary combination has zero first coordinate.
                let rest = (v[0] / g) * p[1] - (p[0] / g) * v[1];
                second = second.gcd(&rest);
                pivot = Some(np);
            }
        }
    }
    let basis = match pivot {
        None if second == 0 => vec![],
        None => vec![[0, narrow(second.abs())]],
        Some(mut p) => {
            if p[0] < 0 {
                p = [-p[0], -p[1]];
            }
            if second == 0 {
                vec![[narrow(p[0]), narrow(p[1])]]
            } else {
                let c = second.abs();
                vec![[narrow(p[0]), narrow(p[1].rem_euclid(c))], [0, narrow(c)]]
            }
        }
    };
    IntLattice2 { basis }
}

impl IntLattice2 {
    pub fn zero() -> Self {
        IntLattice2::default()
    }

    pub fn full() -> Self {
        IntLattice2 { basis: vec![[1, 0], [0, 1]] }
    }

    pub fn basis(&self) -> &[IntVec2] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Index `|Z² / L|` for rank 2, `None` otherwise.
    pub fn index(&self) -> Option<i64> {
        match self.basis.as_slice() {
            [a, b] => Some((a[0] * b[1] - a[1] * b[0]).abs()),
            _ => None,
        }
    }

    pub fn contains(&self, v: IntVec2) -> bool {
        match self.basis.as_slice() {
            [] => v == [0, 0],
            [[a, b]] => {
                if *a != 0 {
                    v[0] % a == 0 && v[1] == (v[0] / a) * b
                } else {
                    v[0] == 0 && v[1] % b == 0
                }
            }
            [[a, b], [_, c]] => {
                if v[0] % a != 0 {
                    return false;
                }
                let t = v[0] / a;
                (v[1] - t * b) % c == 0
            }
            _ => unreachable!("rank at most 2"),
        }
    }

    pub fn contains_lattice(&self, o: &IntLattice2) -> bool {
        o.basis.iter().all(|&v| self.contains(v))
    }

    /// Lattice generated by `self` together with `extra`.
    pub fn join(&self, extra: &[IntVec2]) -> IntLattice2 {
        let mut all = self.basis.clone();
        all.extend_from_slice(extra);
        hnf_basis(&all)
    }

    /// For rank 1: the primitive direction `(a, b)` and multiplicity `e > 0`
    /// with generator `e·(a, b)`.
    pub fn primitive_generator(&self) -> Option<(IntVec2, i64)> {
        match self.basis.as_slice() {
            [[a, b]] => {
                let e = a.gcd(b);
                Some(([a / e, b / e], e))
            }
            _ => None,
        }
    }
}

impl fmt::Debug for IntLattice2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", v[0], v[1])?;
        }
        write!(f, "⟩")
    }
}

/// Smith quotient `Z² / L ≅ Z/d1 × Z/d2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithQuotient {
    pub d1: i64,
    pub d2: i64,
    /// Torus points `(μ, ν)` of orders `d1` and `d2` generating the
    /// annihilator of `L` as a direct product.
    pub generators: [(RationalTurn, RationalTurn); 2],
}

/// Smith normal form of the canonical basis matrix of a rank-2 lattice.
pub fn snf_quotient(l: &IntLattice2) -> Result<SmithQuotient> {
    let [r0, r1] = match l.basis() {
        [a, b] => [*a, *b],
        _ => return Err(Error::NotFiniteIndex),
    };
    let mut b = [r0, r1];
    // Column operations are mirrored on v so that U·B·V = D.
    let mut v = [[1i64, 0], [0, 1]];
    let swap_cols = |b: &mut [[i64; 2]; 2], v: &mut [[i64; 2]; 2]| {
        for row in b.iter_mut().chain(v.iter_mut()) {
            row.swap(0, 1);
        }
    };
    loop {
        // Move the smallest nonzero entry to (0, 0).
        let mut best = None;
        for i in 0..2 {
            for j in 0..2 {
                let x = b[i][j].abs();
                if x != 0 && best.is_none_or(|(bx, _, _)| x < bx) {
                    best = Some((x, i, j));
                }
            }
        }
        let (_, i, j) = best.expect("rank-2 matrix is nonzero");
        if i == 1 {
            b.swap(0, 1);
        }
        if j == 1 {
            swap_cols(&mut b, &mut v);
        }
        let p = b[0][0];
        let q = b[1][0] / p;
        b[1][0] -= q * p;
        b[1][1] -= q * b[0][1];
        let q = b[0][1] / p;
        b[0][1] -= q * p;
        b[1][1] -= q * b[1][0];
        for row in v.iter_mut() {
            row[1] -= q * row[0];
        }
        if b[1][0] != 0 || b[0][1] != 0 {
            continue;
        }
        if b[1][1] % b[0][0] != 0 {
            let r = b[1];
            b[0][0] += r[0];
            b[0][1] += r[1];
            continue;
        }
        break;
    }
    let d1 = b[0][0].abs();
    let d2 = b[1][1].abs();
    let gen = |col: usize, d: i64| {
        (RationalTurn::new(v[0][col], d), RationalTurn::new(v[1][col], d))
    };
    Ok(SmithQuotient { d1, d2, generators: [gen(0, d1), gen(1, d2)] })
}
