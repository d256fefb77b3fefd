//! Roots of unity as reduced fractions of a full turn.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::rational::ComplexRational;

/// `exp(2πi·k/m)` with `0 ≤ k < m` and `gcd(k, m) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalTurn {
    k: i64,
    m: i64,
}

impl RationalTurn {
    pub fn new(k: i64, m: i64) -> Self {
        assert!(m > 0, "turn denominator must be positive");
        let k = k.rem_euclid(m);
        let g = k.gcd(&m);
        RationalTurn { k: k / g, m: m / g }
    }

    pub fn identity() -> Self {
        RationalTurn { k: 0, m: 1 }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> i64 {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0
    }

    /// Product of roots of unity.
    pub fn compose(&self, o: &RationalTurn) -> RationalTurn {
        let l = self.m.lcm(&o.m);
        RationalTurn::new(self.k * (l / self.m) + o.k * (l / o.m), l)
    }

    pub fn inverse(&self) -> RationalTurn {
        RationalTurn::new(-self.k, self.m)
    }

    /// `self^e`
    pub fn pow(&self, e: i64) -> RationalTurn {
        let k = ((self.k as i128 * e as i128).rem_euclid(self.m as i128)) as i64;
        RationalTurn::new(k, self.m)
    }

    /// Angle in radians, in `[0, 2π)`.
    pub fn angle(&self) -> f64 {
        std::f64::consts::TAU * self.k as f64 / self.m as f64
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle())
    }

    /// Exact value when the root of unity lies in `Q(i)` (orders 1, 2, 4).
    pub fn to_exact(&self) -> Option<ComplexRational> {
        match (self.k, self.m) {
            (0, 1) => Some(ComplexRational::one()),
            (1, 2) => Some(ComplexRational::from_int(-1)),
            (1, 4) => Some(ComplexRational::i()),
            (3, 4) => Some(-ComplexRational::i()),
            _ => None,
        }
    }

    /// All turns of order at most `max_order`, sorted by (order, k).
    pub fn all_up_to_order(max_order: i64) -> Vec<RationalTurn> {
        let mut v = Vec::new();
        for m in 1..=max_order.max(1) {
            for k in 0..m {
                if k.gcd(&m) == 1 || (m == 1 && k == 0) {
                    v.push(RationalTurn { k, m });
                }
            }
        }
        v
    }
}

impl fmt::Display for RationalTurn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.m)
    }
}

impl fmt::Debug for RationalTurn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Turn({}/{})", self.k, self.m)
    }
}
