//! Simultaneous root finding (Aberth–Ehrlich).

use num_complex::Complex64;

const MAX_ITER: usize = 500;

fn horner(c: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

/// All roots of `c[0] + c[1] x + … + c[n] x^n`.
///
/// Leading zeros are dropped; `None` when the polynomial is constant or the
/// iteration fails to settle.
pub fn aberth(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.iter().rposition(|c| c.norm() > 0.0)?;
    if n == 0 {
        return None;
    }
    let c = &coeffs[..=n];
    // Roots at the origin are split off exactly.
    let zeros = c.iter().position(|a| a.norm() > 0.0).unwrap();
    let c = &c[zeros..];
    let n = c.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if n == 0 {
        return Some(roots);
    }
    let lead = c[n];
    // Fujiwara-type bound on the root moduli.
    let radius = (0..n)
        .map(|k| (c[k] / lead).norm().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = radius.max(1e-8);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 2.0 * std::f64::consts::PI * (k as
            f64 + 0.25) / n as f64 + 0.4))
        .collect();
    let scale = 1.0 + c.iter().map(|a| a.norm()).sum::<f64>();
    let mut settled = false;
    for _ in 0..MAX_ITER {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            settled = true;
            break;
        }
    }
    if !settled {
        // Accept if the residuals are already at rounding level.
        let ok = z.iter().all(|&x| {
            let (p, _) = horner(c, x);
            p.norm() <= 1e-10 * scale * (1.0 + x.norm()).powi(n as i32)
        });
        if !ok {
            return None;
        }
    }
    if z.iter().any(|x| !x.is_finite()) {
        return None;
    }
    roots.extend(z);
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_roots(coeffs: &[Complex64], expected: &[Complex64]) {
        let mut got = aberth(coeffs).unwrap();
        assert_eq!(got.len(), expected.len());
        for e in expected {
            let (k, d) = got
                .iter()
                .enumerate()
                .map(|(k, r)| (k, (r - e).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(d < 1e-10, "root {e} missing: {got:?}");
            got.remove(k);
        }
    }

    #[test]
    fn cyclotomic_and_real() {
        // z^4 - 1
        assert_roots(&[c(-1., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)],
            &[c(1., 0.), c(-1., 0.), c(0., 1.), c(0., -1.)]);
        // (z - 3)(z + 0.5) = z^2 - 2.5 z - 1.5
        assert_roots(&[c(-1.5, 0.), c(-2.5, 0.), c(1., 0.)], &[c(3., 0.), c(-0.5, 0.)]);
    }

    #[test]
    fn zero_roots_and_degenerate() {
        // z^3 (z - i)
        assert_roots(&[c(0., 0.), c(0., 0.), c(0., 0.), c(0., -1.), c(1., 0.)],
            &[c(0., 0.), c(0., 0.), c(0., 0.), c(0., 1.)]);
        assert!(aberth(&[c(2., 0.)]).is_none());
        assert!(aberth(&[c(2., 0.), c(0., 0.)]).is_none());
    }

    #[test]
    fn residuals_on_random_polys() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for deg in 2..=8 {
            let cs: Vec<Complex64> = (0..=deg).map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
            let rs = aberth(&cs).unwrap();
            assert_eq!(rs.len(), deg);
            for r in rs {
                assert!(horner(&cs, r).0.norm() < 1e-9, "deg {deg}");
            }
        }
    }
}
