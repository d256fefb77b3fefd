//! Independent check of the iterate equations `f^n γ = γ_n f^n`.
//!
//! Candidate rotations are mapped into a prime field `F_P` with
//! `P ≡ 1 (mod 4·lcm(1..M))`, so every root of unity of order `≤ M` and `i`
//! have exact images. Both sides of the level-`n` identity are evaluated by
//! iterating the map at random points, which avoids expanding `f^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{ComplexRational, RationalTurn, TurnPair};
use crate::error::{Error, Result};
use crate::skew::{normalize, SkewProduct};

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `F_P` together with a primitive `4L`-th root of unity, `L = lcm(1..M)`.
#[derive(Clone, Debug)]
pub struct RootField {
    pub p: u64,
    pub l: u64,
    /// Primitive `4L`-th root of unity.
    pub root: u64,
}

impl RootField {
    pub fn new(max_order: i64) -> Self {
        let l = (1..=max_order.max(1) as u64).fold(1u64, |a, b| a.lcm(&b));
        let n = 4 * l;
        let mut k = (1u64 << 61) / n;
        let p = loop {
            let cand = n * k + 1;
            if is_prime_u64(cand) {
                break cand;
            }
            k -= 1;
        };
        let factors = prime_factors(n);
        let mut x = 2u64;
        let root = loop {
            let y = powmod(x, (p - 1) / n, p);
            if factors.iter().all(|&q| powmod(y, n / q, p) != 1) {
                break y;
            }
            x += 1;
        };
        RootField { p, l, root }
    }

    pub fn i(&self) -> u64 {
        powmod(self.root, self.l, self.p)
    }

    pub fn turn(&self, t: RationalTurn) -> u64 {
        let step = 4 * self.l / t.order() as u64;
        powmod(self.root, step * t.k() as u64, self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        powmod(a, self.p - 2, self.p)
    }

    fn big(&self, x: &BigInt) -> u64 {
        let pb = BigInt::from(self.p);
        x.mod_floor(&pb).to_u64().unwrap()
    }

    pub fn cr(&self, c: &ComplexRational) -> Option<u64> {
        let part = |r: &num_rational::BigRational| -> Option<u64> {
            let d = self.big(r.denom());
            if d == 0 {
                return None;
            }
            Some(mulmod(self.big(r.numer()), self.inv(d), self.p))
        };
        let re = part(&c.re)?;
        let im = part(&c.im)?;
        Some((re + mulmod(im, self.i(), self.p)) % self.p)
    }
}

/// The map reduced into `F_P`.
struct ModMap {
    p: Vec<(u64, u64)>,
    q: Vec<(i64, u32, u64)>,
    field: RootField,
}

impl ModMap {
    fn new(f: &SkewProduct, field: RootField) -> Option<Self> {
        let p = f.p().terms().map(|(e, c)| Some((e as u64, field.cr(c)?))).collect::<Option<Vec<_>>>()?;
        let q = f.q().terms().map(|(n, m, c)| Some((n, m, field.cr(c)?))).collect::<Option<Vec<_>>>()?;
        Some(ModMap { p, q, field })
    }

    fn step(&self, z: u64, w: u64) -> (u64, u64) {
        let pr = self.field.p;
        let zinv = self.field.inv(z);
        let pz = self.p.iter().fold(0, |acc, &(e, c)| (acc + mulmod(c, powmod(z, e, pr), pr)) % pr);
        let qz = self.q.iter().fold(0, |acc, &(n, m, c)| {
            let zn = if n >= 0 { powmod(z, n as u64, pr) } else { powmod(zinv, (-n) as u64, pr) };
            (acc + mulmod(c, mulmod(zn, powmod(w, m as u64, pr), pr), pr)) % pr
        });
        (pz, qz)
    }
}

/// All `(μ, ν)` of orders `≤ max_order` such that for every `n ≤ depth`
/// there are constants with `p^n(μz) = μ_n p^n(z)` and
/// `Q^n(μz, νw) = ν_n Q^n(z, w)` on the centered map.
pub fn brute_force_group(f: &SkewProduct, max_order: i64, depth: u32) -> Result<Vec<TurnPair>> {
    let norm = normalize(f);
    let t = norm.translated.ok_or(Error::NonMonomialDenominator)?;
    let field = RootField::new(max_order);
    let map = ModMap::new(&t, field).ok_or(Error::DivisionByZero)?;
    let pr = map.field.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let points: Vec<(u64, u64)> = (0..6).map(|_| (rng.gen_range(2..pr), rng.gen_range(2..pr))).collect();
    let turns = RationalTurn::all_up_to_order(max_order);
    let pairs: Vec<TurnPair> = turns.iter().flat_map(|&a| turns.iter().map(move |&b| (a, b))).collect();
    let mut out: Vec<TurnPair> = pairs
        .into_par_iter()
        .filter(|&(mu, nu)| {
            let (m, n) = (map.field.turn(mu), map.field.turn(nu));
            let mut orbits: Vec<[(u64, u64); 2]> =
                points.iter().map(|&(z, w)| [(z, w), (mulmod(m, z, pr), mulmod(n, w, pr))]).collect();
            for _ in 0..depth {
                for o in orbits.iter_mut() {
                    o[0] = map.step(o[0].0, o[0].1);
                    o[1] = map.step(o[1].0, o[1].1);
                }
                let ratio = |a: u64, b: u64| if b.is_zero() { None } else { Some(mulmod(a, map.field.inv(b), pr)) };
                let mut base_ratio = None;
                let mut fiber_ratio = None;
                for o in &orbits {
                    let (Some(rb), Some(rf)) = (ratio(o[1].0, o[0].0), ratio(o[1].1, o[0].1)) else {
                        continue;
                    };
                    if *base_ratio.get_or_insert(rb) != rb || *fiber_ratio.get_or_insert(rf) != rf {
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly1, SkewPoly};

    fn sp(p: &[i64], q: &[(i64, i64, u32)]) -> SkewProduct {
        SkewProduct::new(Poly1::from_ints(p), SkewPoly::from_int_terms(q)).unwrap()
    }

    #[test]
    fn field_roots() {
        let f = RootField::new(12);
        assert!(is_prime_u64(f.p));
        assert_eq!((f.p - 1) % (4 * 27720), 0);
        assert_eq!(mulmod(f.i(), f.i(), f.p), f.p - 1);
        for t in RationalTurn::all_up_to_order(12) {
            let x = f.turn(t);
            assert_eq!(powmod(x, t.order() as u64, f.p), 1);
            for q in prime_factors(t.order() as u64) {
                assert_ne!(powmod(x, t.order() as u64 / q, f.p), 1);
            }
        }
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn example_groups() {
        let f = sp(&[0, 0, 0, 1], &[(1, 1, 2), (1, 1, 0)]);
        assert_eq!(brute_force_group(&f, 8, 3).unwrap().len(), 4);
        let id = (RationalTurn::identity(), RationalTurn::identity());
        assert!(brute_force_group(&f, 8, 3).unwrap().contains(&id));
        let f = sp(&[0, 0, 1], &[(1, 3, 5), (1, 1, 3), (1, 0, 2)]);
        let g = brute_force_group(&f, 6, 3).unwrap();
        assert!(g.iter().all(|(mu, nu)| mu.compose(nu).is_identity()));
        // ν ranges over all turns of order ≤ 6, μ = ν^{-1}.
        assert_eq!(g.len(), RationalTurn::all_up_to_order(6).len());
    }
}
