//! Numeric checks: does a candidate `γ` preserve `J_f`, and is `J_f` compact.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::green::{FloatRatFn, GreenEvaluator, GreenSample};
use super::roots::aberth;
use super::sample::sample_julia_skew;
use crate::error::Result;
use crate::skew::{centroids, SkewProduct};

const PROBES: usize = 16;

/// Approximate distance from `y` to the boundary of the filled set described
/// by `green`: the distance estimate outside, the smallest probe circle that
/// reaches an escaping point inside.
pub fn boundary_distance(green: impl Fn(Complex64) -> GreenSample, y: Complex64) -> f64 {
    let s = green(y);
    if s.escaped {
        return s.distance_estimate();
    }
    let mut eps = 1e-9;
    while eps < 4.0 {
        for k in 0..PROBES {
            let dir = Complex64::from_polar(eps, std::f64::consts::TAU * (k as f64 + 0.5) / PROBES as f64);
            if green(y + dir).escaped {
                return eps;
            }
        }
        eps *= 2.0;
    }
    f64::INFINITY
}

/// Realizes `γ_{μ,ν}(z, w) = (μ(z - ζ) + ζ, ν(w - ζ_z) + ζ_{σ(z)})`.
#[derive(Clone, Debug)]
pub struct SymmetryRealizer {
    zeta: Complex64,
    zeta_z: FloatRatFn,
}

impl SymmetryRealizer {
    pub fn new(f: &SkewProduct) -> Self {
        let c = centroids(f);
        SymmetryRealizer { zeta: c.zeta.to_complex64(), zeta_z: FloatRatFn::new(&c.zeta_z) }
    }

    pub fn apply(&self, mu: Complex64, nu: Complex64, z: Complex64, w: Complex64) -> (Complex64, Complex64) {
        let sz = mu * (z - self.zeta) + self.zeta;
        (sz, nu * (w - self.zeta_z.eval(z)) + self.zeta_z.eval(sz))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    /// Pullback depth for fiber boundary samples.
    pub depth: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: 512, tol: 1e-3, seed: 0, depth: 24 }
    }
}

/// Reference sampling of `J_f` reused across candidate symmetries.
#[derive(Clone, Debug)]
pub struct JuliaSamples {
    pub points: Vec<(Complex64, Complex64)>,
    pub config: VerifyConfig,
}

impl JuliaSamples {
    pub fn generate(eval: &GreenEvaluator, config: VerifyConfig) -> Result<Self> {
        let points = sample_julia_skew(eval, config.samples, config.seed, config.depth)?;
        Ok(JuliaSamples { points, config })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub mu: [f64; 2],
    pub nu: [f64; 2],
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_base_distance: f64,
    /// Fiber distances are relative: divided by `max(1, |w|)`, since fiber
    /// Julia sets grow without bound near zeros of `b_d`.
    pub max_fiber_distance: f64,
    /// `max(base, fiber)` over samples, a one-sided distance from `γ(J_f)` to `J_f`.
    pub distance: f64,
    pub pass: bool,
}

/// Applies `γ_{μ,ν}` to sampled points of `J_f` and measures how far the images
/// land from `J_f`, fiber by fiber.
pub fn verify_symmetry_numeric(
    eval: &GreenEvaluator,
    realizer: &SymmetryRealizer,
    mu: Complex64,
    nu: Complex64,
    samples: &JuliaSamples,
) -> VerifyReport {
    let (base, fiber) = samples
        .points
        .par_iter()
        .map(|&(z, w)| {
            let (z1, w1) = realizer.apply(mu, nu, z, w);
            let db = boundary_distance(|x| eval.green_base_sample(x), z1);
            let df = boundary_distance(|y| eval.green_fiber_sample(z1, y), w1) / w1.norm().max(1.0);
            (db, df)
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    let distance = base.max(fiber);
    VerifyReport {
        mu: [mu.re, mu.im],
        nu: [nu.re, nu.im],
        samples: samples.points.len(),
        seed: samples.config.seed,
        tol: samples.config.tol,
        max_base_distance: base,
        max_fiber_distance: fiber,
        distance,
        pass: distance <= samples.config.tol,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Compactness {
    Compact,
    Noncompact,
    Uncertain,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompactnessReport {
    pub verdict: Compactness,
    /// `constant`, `exact` or `numeric`.
    pub method: String,
    /// Smallest estimated distance from a root of `b_d` to `J_p`.
    pub min_distance: Option<f64>,
    pub eps_near: f64,
    pub eps_far: f64,
}

pub const EPS_NEAR: f64 = 1e-6;
pub const EPS_FAR: f64 = 1e-2;

/// `J_f` is compact iff no root of `b_d` lies on `J_p`.
pub fn compactness_check(f: &SkewProduct) -> CompactnessReport {
    let mk = |verdict, method: &str, min_distance| CompactnessReport {
        verdict,
        method: method.to_string(),
        min_distance,
        eps_near: EPS_NEAR,
        eps_far: EPS_FAR,
    };
    let bd = f.b_d();
    if bd.is_constant() {
        return mk(Compactness::Compact, "constant", None);
    }
    // p = z^δ: J_p is the unit circle, so roots of α z^l + β z^k lie on it
    // iff |α| = |β|.
    if f.p().is_monic_monomial() && bd.num_terms() <= 2 {
        let verdict = match bd.num_terms() {
            1 => Compactness::Compact,
            _ => {
                let mut it = bd.terms();
                let (_, lo) = it.next().unwrap();
                let (_, hi) = it.next().unwrap();
                if lo.norm_sqr() == hi.norm_sqr() {
                    Compactness::Noncompact
                } else {
                    Compactness::Compact
                }
            }
        };
        return mk(verdict, "exact", None);
    }
    let Some(roots) = aberth(&bd.to_dense_c64()) else {
        return mk(Compactness::Uncertain, "numeric", None);
    };
    let eval = GreenEvaluator::new(f);
    let mut min_d = f64::INFINITY;
    for r in roots {
        min_d = min_d.min(boundary_distance(|x| eval.green_base_sample(x), r));
    }
    // A root deep inside K_p has no escaping neighbour nearby either, which
    // also reads as far from J_p.
    let verdict = if min_d < EPS_NEAR {
        Compactness::Noncompact
    } else if min_d > EPS_FAR {
        Compactness::Compact
    } else {
        Compactness::Uncertain
    };
    mk(verdict, "numeric", Some(min_d))
}

/// Max over `J_p` samples of `||b_d(σ(z))| - |b_d(z)||` for `σ(z) = μ(z-ζ)+ζ`.
pub fn bd_modulus_deviation(eval: &GreenEvaluator, zeta: Complex64, mu: Complex64, samples: &[Complex64]) -> f64 {
    let m = eval.map();
    samples
        .iter()
        .map(|&z| (m.b_d(mu * (z - zeta) + zeta).norm() - m.b_d(z).norm()).abs())
        .fold(0.0, f64::max)
}
