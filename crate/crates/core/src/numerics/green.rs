//! Green functions, the Φ series and fiberwise Böttcher coordinates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly1, RatFn};
use crate::error::{Error, Result};
use crate::skew::SkewProduct;

/// Floating-point copy of a skew product.
#[derive(Clone, Debug)]
pub struct FloatMap {
    p: Vec<Complex64>,
    /// For each power `w^m`: lowest `z`-exponent and dense coefficients.
    b: Vec<(i64, Vec<Complex64>)>,
    delta: u32,
    d: u32,
}

fn horner(c: &[Complex64], x: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
}

impl FloatMap {
    pub fn new(f: &SkewProduct) -> Self {
        let b = (0..=f.d())
            .map(|m| {
                let c = f.b(m);
                let lo = c.min_z_exponent().unwrap_or(0);
                let hi = c.terms().map(|(n, _, _)| n).max().unwrap_or(0);
                let mut dense = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
                for (n, _, a) in c.terms() {
                    dense[(n - lo) as usize] = a.to_complex64();
                }
                (lo, dense)
            })
            .collect();
        FloatMap { p: f.p().to_dense_c64(), b, delta: f.delta(), d: f.d() }
    }

    /// The fiber polynomial `w ↦ q(z, w)` for a one-variable map, placed over
    /// the base `z²` so the generic machinery applies.
    pub fn from_poly_in_w(q: &Poly1) -> Self {
        let b = (0..=q.degree().unwrap_or(0))
            .map(|m| (0, vec![q.coeff(m).to_complex64()]))
            .collect::<Vec<_>>();
        let d = (b.len() - 1) as u32;
        let p = vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        FloatMap { p, b, delta: 2, d }
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn p_coeffs(&self) -> &[Complex64] {
        &self.p
    }

    pub fn p(&self, z: Complex64) -> Complex64 {
        horner(&self.p, z)
    }

    pub fn p_deriv(&self, z: Complex64) -> Complex64 {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in self.p.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        dp
    }

    fn laurent(&self, m: usize, z: Complex64) -> Complex64 {
        let (lo, c) = &self.b[m];
        let v = horner(c, z);
        if *lo == 0 {
            v
        } else {
            v * z.powi(*lo as i32)
        }
    }

    /// `b_m(z)`
    pub fn b(&self, m: u32, z: Complex64) -> Complex64 {
        self.laurent(m as usize, z)
    }

    pub fn b_d(&self, z: Complex64) -> Complex64 {
        self.laurent(self.d as usize, z)
    }

    /// Writes `b_0(z), …, b_d(z)` into `out`.
    pub fn fiber_coeffs_into(&self, z: Complex64, out: &mut Vec<Complex64>) {
        out.clear();
        out.extend((0..self.b.len()).map(|m| self.laurent(m, z)));
    }

    pub fn q(&self, z: Complex64, w: Complex64) -> Complex64 {
        let mut buf = Vec::with_capacity(self.b.len());
        self.fiber_coeffs_into(z, &mut buf);
        horner(&buf, w)
    }
}

/// Outcome of one Green-function evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreenSample {
    pub value: f64,
    /// `|∇G|` at the point (zero when the orbit did not escape).
    pub grad_norm: f64,
    pub iterations: usize,
    pub escaped: bool,
    /// Some `|b_d(p^k z)|` along the orbit fell below the degeneracy threshold.
    pub degenerate: bool,
    /// The base orbit escaped before the fiber orbit did.
    pub base_escaped: bool,
}

impl GreenSample {
    /// `G / |∇G|`, comparable to the distance from the filled Julia set.
    pub fn distance_estimate(&self) -> f64 {
        if self.escaped && self.grad_norm > 0.0 {
            self.value / self.grad_norm
        } else {
            0.0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiStatus {
    Converged,
    Degenerate,
    Truncated,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GreenConfig {
    /// Non-escaping orbits stop once the Green value is provably below this.
    pub tol: f64,
    pub n_max: usize,
    /// Hard cap for the adaptive iteration count.
    pub n_cap: usize,
    pub degenerate_eps: f64,
    pub phi_terms: usize,
}

impl Default for GreenConfig {
    fn default() -> Self {
        GreenConfig { tol: 1e-14, n_max: 64, n_cap: 4096, degenerate_eps: 1e-12, phi_terms: 60 }
    }
}

/// Immutable evaluator for `G_p`, `G_z`, `Φ` and `φ_z`; safe to share across
/// threads.
#[derive(Clone, Debug)]
pub struct GreenEvaluator {
    map: FloatMap,
    cfg: GreenConfig,
    escape_radius: f64,
    log_lead: f64,
}

const BIG: f64 = 1e12;

impl GreenEvaluator {
    pub fn new(f: &SkewProduct) -> Self {
        GreenEvaluator::from_float_map(FloatMap::new(f), GreenConfig::default())
    }

    pub fn with_config(f: &SkewProduct, cfg: GreenConfig) -> Self {
        GreenEvaluator::from_float_map(FloatMap::new(f), cfg)
    }

    pub fn from_float_map(map: FloatMap, cfg: GreenConfig) -> Self {
        let lead = map.p[map.delta as usize].norm();
        let sum: f64 = map.p.iter().map(|a| a.norm()).sum();
        // |z| > R forces |p(z)| > 2|z|.
        let escape_radius = (4.0 * (1.0 + sum) / lead).max(2.0);
        debug_assert!({
            let z = Complex64::new(escape_radius * 1.01, 0.0);
            (0..8).all(|k| {
                let zz = z * Complex64::from_polar(1.0, k as f64);
                map.p(zz).norm() > 2.0 * zz.norm()
            })
        });
        let log_lead = lead.ln() / (map.delta as f64 - 1.0);
        GreenEvaluator { map, cfg, escape_radius, log_lead }
    }

    pub fn map(&self) -> &FloatMap {
        &self.map
    }

    pub fn config(&self) -> &GreenConfig {
        &self.cfg
    }

    pub fn escape_radius(&self) -> f64 {
        self.escape_radius
    }

    /// `G_p(z)` with its gradient norm.
    pub fn green_base_sample(&self, z0: Complex64) -> GreenSample {
        let delta = self.map.delta as f64;
        let big = BIG * self.escape_radius;
        let bound = big.ln() + self.log_lead.abs() + 1.0;
        let mut z = z0;
        let mut dz = Complex64::new(1.0, 0.0);
        let mut scale = 1.0;
        for n in 0..self.cfg.n_cap {
            let r = z.norm();
            if r > big {
                let value = scale * (r.ln() + self.log_lead);
                let grad_norm = scale * dz.norm() / r;
                return GreenSample { value: value.max(0.0), grad_norm, iterations: n, escaped: true, degenerate: false, base_escaped: true };
            }
            if n >= 1 && scale * bound < self.cfg.tol {
                return GreenSample { value: 0.0, grad_norm: 0.0, iterations: n, escaped: false, degenerate: false, base_escaped: false };
            }
            dz *= self.map.p_deriv(z);
            z = self.map.p(z);
            scale /= delta;
        }
        GreenSample { value: 0.0, grad_norm: 0.0, iterations: self.cfg.n_cap, escaped: false, degenerate: false, base_escaped: false }
    }

    pub fn green_base(&self, z: Complex64) -> f64 {
        self.green_base_sample(z).value
    }

    /// `Φ(z) = Σ_n d^{-(n+1)} log|b_d(p^n(z))|`
    pub fn phi_sum(&self, z0: Complex64) -> (f64, PhiStatus) {
        let d = self.map.d as f64;
        let big = BIG * self.escape_radius;
        let mut z = z0;
        let mut s = 0.0;
        let mut scale = 1.0 / d;
        let mut max_log = 0.0f64;
        for _ in 0..self.cfg.phi_terms {
            let bd = self.map.b_d(z).norm();
            if bd == 0.0 || !bd.is_finite() {
                return (f64::NEG_INFINITY, PhiStatus::Degenerate);
            }
            let lb = bd.ln();
            s += scale * lb;
            max_log = max_log.max(lb.abs());
            if z.norm() > big {
                return (s, PhiStatus::Truncated);
            }
            if max_log * scale / (d - 1.0) < 1e-17 {
                return (s, PhiStatus::Converged);
            }
            z = self.map.p(z);
            scale /= d;
        }
        let status = if max_log * scale / (d - 1.0) < 1e-15 { PhiStatus::Converged } else { PhiStatus::Truncated };
        (s, status)
    }

    /// `G_z(w)` with its gradient norm in `w`.
    pub fn green_fiber_sample(&self, z0: Complex64, w0: Complex64) -> GreenSample {
        let d = self.map.d as f64;
        let dd = self.map.d as usize;
        let base_big = BIG * self.escape_radius;
        let mut buf = Vec::with_capacity(dd + 1);
        let (mut z, mut w) = (z0, w0);
        let mut dw = Complex64::new(1.0, 0.0);
        let mut scale = 1.0;
        let mut max_log = 0.0f64;
        let mut degenerate = false;
        for n in 0..self.cfg.n_cap {
            self.map.fiber_coeffs_into(z, &mut buf);
            let bd = buf[dd].norm();
            if bd < self.cfg.degenerate_eps {
                degenerate = true;
            }
            let r = w.norm();
            if bd > 0.0 {
                let ratio: f64 = buf[..dd].iter().map(|c| c.norm()).sum::<f64>() / bd;
                let threshold = BIG * (1.0 + ratio);
                if r > threshold {
                    let (phi, status) = self.phi_sum(z);
                    degenerate |= status == PhiStatus::Degenerate;
                    let value = scale * (r.ln() + phi);
                    let grad_norm = scale * dw.norm() / r;
                    return GreenSample { value: value.max(0.0), grad_norm, iterations: n, escaped: true, degenerate, base_escaped: false };
                }
                max_log = max_log.max(bd.ln().abs());
                if n >= 1 && scale * (threshold.ln() + max_log / (d - 1.0) + 1.0) < self.cfg.tol {
                    return GreenSample { value: 0.0, grad_norm: 0.0, iterations: n, escaped: false, degenerate, base_escaped: false };
                }
            }
            if z.norm() > base_big || !r.is_finite() {
                let value = scale * r.max(1.0).ln();
                return GreenSample { value, grad_norm: 0.0, iterations: n, escaped: true, degenerate, base_escaped: true };
            }
            let mut dq = Complex64::new(0.0, 0.0);
            let mut q = Complex64::new(0.0, 0.0);
            for &a in buf.iter().rev() {
                dq = dq * w + q;
                q = q * w + a;
            }
            dw *= dq;
            w = q;
            z = self.map.p(z);
            scale /= d;
        }
        GreenSample { value: 0.0, grad_norm: 0.0, iterations: self.cfg.n_cap, escaped: false, degenerate, base_escaped: false }
    }

    pub fn green_fiber(&self, z: Complex64, w: Complex64) -> f64 {
        self.green_fiber_sample(z, w).value
    }

    /// `φ_z(w) = w · Π_n u_n^{1/d^{n+1}}` with
    /// `u_n = q_{z_n}(w_n) / (b_d(z_n) w_n^d)`, principal branch per factor.
    pub fn bottcher_fiber(&self, z0: Complex64, w0: Complex64) -> Result<Complex64> {
        let dd = self.map.d as usize;
        let d = self.map.d as f64;
        let mut buf = Vec::with_capacity(dd + 1);
        let (mut z, mut w) = (z0, w0);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut scale = 1.0 / d;
        for _ in 0..self.cfg.n_cap {
            self.map.fiber_coeffs_into(z, &mut buf);
            let bd = buf[dd];
            if bd.norm() < self.cfg.degenerate_eps {
                return Err(Error::PhiDegenerate);
            }
            let mut t = Complex64::new(0.0, 0.0);
            let winv = w.inv();
            for &a in &buf[..dd] {
                t = t * winv + a;
            }
            // u - 1 = Σ_{j<d} b_j w^{j-d} / b_d
            let u1 = t * winv / bd;
            let dev = u1.norm();
            if dev > 0.5 {
                return Err(Error::BranchInstability { factor: dev });
            }
            acc += (Complex64::new(1.0, 0.0) + u1).ln() * scale;
            if dev * scale < 1e-18 {
                break;
            }
            w = bd * w.powu(self.map.d) * (Complex64::new(1.0, 0.0) + u1);
            z = self.map.p(z);
            scale /= d;
            if !w.is_finite() {
                break;
            }
        }
        Ok(w0 * acc.exp())
    }
}

/// Float evaluation of a rational function of `z`.
#[derive(Clone, Debug)]
pub struct FloatRatFn {
    num: Vec<Complex64>,
    den: Vec<Complex64>,
}

impl FloatRatFn {
    pub fn new(r: &RatFn) -> Self {
        FloatRatFn { num: r.num().to_dense_c64(), den: r.den().to_dense_c64() }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.num, z) / horner(&self.den, z)
    }
}
