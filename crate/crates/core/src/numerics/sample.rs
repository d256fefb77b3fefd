//! Sampling `J_p` and the fiber boundaries `∂K_z` by backward iteration.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::green::{FloatMap, GreenEvaluator};
use super::roots::aberth;
use crate::error::{Error, Result};

/// Inverse-iteration sampler for the base Julia set.
#[derive(Clone, Debug)]
pub struct BaseSampler {
    p: Vec<Complex64>,
    pub seed: u64,
    pub burn_in: usize,
    /// Accepted samples satisfy `G_p < tol`.
    pub tol: f64,
}

/// Uniformly chosen root of `c(x) = target`, or `None` if root finding fails.
fn random_preimage(c: &[Complex64], target: Complex64, rng: &mut impl Rng) -> Option<Complex64> {
    let mut shifted = c.to_vec();
    shifted[0] -= target;
    let roots = aberth(&shifted)?;
    Some(roots[rng.gen_range(0..roots.len())])
}

impl BaseSampler {
    pub fn new(map: &FloatMap, seed: u64) -> Self {
        BaseSampler { p: map.p_coeffs().to_vec(), seed, burn_in: 64, tol: 1e-8 }
    }

    pub fn sample(&self, eval: &GreenEvaluator, count: usize) -> Result<Vec<Complex64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut x = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let fail = || Error::SamplerFailure("root finder did not converge".into());
        for _ in 0..self.burn_in {
            x = random_preimage(&self.p, x, &mut rng).ok_or_else(fail)?;
        }
        let mut out = Vec::with_capacity(count);
        let mut attempts = 0usize;
        while out.len() < count {
            x = random_preimage(&self.p, x, &mut rng).ok_or_else(fail)?;
            attempts += 1;
            if eval.green_base(x) < self.tol {
                out.push(x);
            }
            if attempts > 20 * count + 100 {
                return Err(Error::SamplerFailure("no bounded samples found".into()));
            }
        }
        Ok(out)
    }
}

/// `count` points of `J_p`, deterministic in `seed`.
pub fn sample_julia_base(eval: &GreenEvaluator, count: usize, seed: u64) -> Result<Vec<Complex64>> {
    BaseSampler::new(eval.map(), seed).sample(eval, count)
}

/// A point near `∂K_{z}` obtained by pulling a large circle back through the
/// fibers `q_{z_{depth-1}}, …, q_{z_0}` along the forward orbit of `z`.
pub fn sample_fiber_boundary(map: &FloatMap, z: Complex64, depth: usize, rng: &mut impl Rng) -> Option<Complex64> {
    let mut orbit = Vec::with_capacity(depth);
    let mut zk = z;
    for _ in 0..depth {
        orbit.push(zk);
        zk = map.p(zk);
    }
    let mut buf = Vec::new();
    let mut w = Complex64::from_polar(4.0, rng.gen_range(0.0..std::f64::consts::TAU));
    for &zk in orbit.iter().rev() {
        map.fiber_coeffs_into(zk, &mut buf);
        w = random_preimage(&buf, w, rng)?;
    }
    Some(w)
}

/// Points `(z, w)` of `J_f` over sampled base points.
pub fn sample_julia_skew(eval: &GreenEvaluator, count: usize, seed: u64, depth: usize) -> Result<Vec<(Complex64, Complex64)>> {
    let base = sample_julia_base(eval, count, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut out = Vec::with_capacity(count);
    for z in base {
        let w = sample_fiber_boundary(eval.map(), z, depth, &mut rng)
            .ok_or_else(|| Error::SamplerFailure("fiber pullback failed".into()))?;
        out.push((z, w));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly1, SkewPoly};
    use crate::skew::SkewProduct;

    fn eval(p: &[i64], q: &[(i64, i64, u32)]) -> GreenEvaluator {
        GreenEvaluator::new(&SkewProduct::new(Poly1::from_ints(p), SkewPoly::from_int_terms(q)).unwrap())
    }

    #[test]
    fn circle_and_interval() {
        let g = eval(&[0, 0, 1], &[(1, 0, 2)]);
        for z in sample_julia_base(&g, 200, 1).unwrap() {
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
        let g = eval(&[-2, 0, 1], &[(1, 0, 2)]);
        for z in sample_julia_base(&g, 200, 2).unwrap() {
            assert!(z.im.abs() < 1e-6 && z.re.abs() <= 2.0 + 1e-9, "{z}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = eval(&[-1, 0, 1], &[(1, 2, 2)]);
        assert_eq!(sample_julia_skew(&g, 50, 9, 20).unwrap(), sample_julia_skew(&g, 50, 9, 20).unwrap());
        assert_ne!(sample_julia_base(&g, 50, 9).unwrap(), sample_julia_base(&g, 50, 10).unwrap());
    }

    #[test]
    fn fiber_samples_on_circle() {
        // (z^2, w^2): every fiber boundary is the unit circle.
        let g = eval(&[0, 0, 1], &[(1, 0, 2)]);
        for (_, w) in sample_julia_skew(&g, 100, 3, 30).unwrap() {
            assert!((w.norm() - 1.0).abs() < 1e-6);
        }
    }
}
