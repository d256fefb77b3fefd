//! Rasterized fiber slices `K_z` and their boundary bands.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::green::GreenEvaluator;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub center: [f64; 2],
    pub width: f64,
}

impl Window {
    pub fn new(center: Complex64, width: f64) -> Self {
        Window { center: [center.re, center.im], width }
    }

    /// Center of pixel `(row, col)`; row 0 is the top edge.
    pub fn pixel_center(&self, res: usize, row: usize, col: usize) -> Complex64 {
        let h = self.width / res as f64;
        Complex64::new(
            self.center[0] - self.width / 2.0 + (col as f64 + 0.5) * h,
            self.center[1] + self.width / 2.0 - (row as f64 + 0.5) * h,
        )
    }

    /// Inverse of [`Window::pixel_center`] in continuous pixel units `(row, col)`.
    pub fn to_pixel(&self, res: usize, x: Complex64) -> (f64, f64) {
        let h = self.width / res as f64;
        let col = (x.re - (self.center[0] - self.width / 2.0)) / h - 0.5;
        let row = ((self.center[1] + self.width / 2.0) - x.im) / h - 0.5;
        (row, col)
    }

    pub fn pixel_size(&self, res: usize) -> f64 {
        self.width / res as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceStats {
    /// Fraction of pixels whose orbit did not escape.
    pub bounded_fraction: f64,
    pub boundary_pixels: usize,
    pub degenerate_pixels: usize,
    pub max_iterations: usize,
    pub mean_iterations: f64,
    /// Every pixel bounded: possibly `K_z = C` here, never certified.
    pub all_bounded: bool,
    pub all_escaping: bool,
}

/// A rendered fiber `{z} × C` over a window.
#[derive(Clone, Debug)]
pub struct JuliaSlice {
    pub z: Complex64,
    pub window: Window,
    pub resolution: usize,
    /// Row-major Green values.
    pub green_values: Vec<f64>,
    /// Row-major membership in the boundary band.
    pub boundary: Vec<bool>,
    pub boundary_points: Vec<Complex64>,
    pub band_px: f64,
    pub stats: SliceStats,
}

/// Renders `G_z` on the window; a pixel belongs to the boundary band when its
/// orbit escapes with distance estimate below `band_px` pixels.
pub fn render_slice(eval: &GreenEvaluator, z: Complex64, window: Window, resolution: usize, band_px: f64) -> JuliaSlice {
    let h = window.pixel_size(resolution);
    let samples: Vec<_> = (0..resolution * resolution)
        .into_par_iter()
        .map(|i| eval.green_fiber_sample(z, window.pixel_center(resolution, i / resolution, i % resolution)))
        .collect();
    let boundary: Vec<bool> = samples
        .iter()
        .map(|s| s.escaped && s.value > 0.0 && s.distance_estimate() < band_px * h)
        .collect();
    let green_values: Vec<f64> = samples.iter().map(|s| s.value).collect();
    let boundary_points = boundary
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| window.pixel_center(resolution, i / resolution, i % resolution))
        .collect::<Vec<_>>();
    let n = samples.len() as f64;
    let bounded = samples.iter().filter(|s| !s.escaped).count();
    let stats = SliceStats {
        bounded_fraction: bounded as f64 / n,
        boundary_pixels: boundary_points.len(),
        degenerate_pixels: samples.iter().filter(|s| s.degenerate).count(),
        max_iterations: samples.iter().map(|s| s.iterations).max().unwrap_or(0),
        mean_iterations: samples.iter().map(|s| s.iterations as f64).sum::<f64>() / n,
        all_bounded: bounded == samples.len(),
        all_escaping: bounded == 0 && boundary_points.is_empty(),
    };
    JuliaSlice { z, window, resolution, green_values, boundary, boundary_points, band_px, stats }
}

impl JuliaSlice {
    /// Gray levels: boundary band black, bounded pixels mid gray, exterior
    /// shaded by the Green value.
    pub fn gray_levels(&self) -> Vec<u8> {
        self.green_values
            .iter()
            .zip(&self.boundary)
            .map(|(&g, &b)| {
                if b {
                    0
                } else if g == 0.0 {
                    110
                } else {
                    (160.0 + 95.0 * (1.0 - (-g).exp())).round() as u8
                }
            })
            .collect()
    }

    /// Binary PGM (P5, maxval 255).
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.resolution, self.resolution).into_bytes();
        out.extend(self.gray_levels());
        out
    }

    pub fn sidecar(&self, seed: u64) -> serde_json::Value {
        serde_json::json!({
            "z": [self.z.re, self.z.im],
            "window": self.window,
            "resolution": [self.resolution, self.resolution],
            "band_px": self.band_px,
            "seed": seed,
            "stats": self.stats,
        })
    }

    /// Writes `<stem>.pgm` and `<stem>.json` into `dir`.
    pub fn write(&self, dir: &Path, stem: &str, seed: u64) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::File::create(dir.join(format!("{stem}.pgm")))?.write_all(&self.to_pgm())?;
        let json = serde_json::to_string_pretty(&self.sidecar(seed)).expect("serializable");
        std::fs::write(dir.join(format!("{stem}.json")), json + "\n")?;
        Ok(())
    }

    pub fn boundary_pixels(&self) -> Vec<(usize, usize)> {
        self.boundary
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| (i / self.resolution, i % self.resolution))
            .collect()
    }
}

/// Grid buckets for nearest-neighbour queries on pixel sets.
struct Buckets {
    cell: f64,
    map: std::collections::HashMap<(i64, i64), Vec<(f64, f64)>>,
}

impl Buckets {
    fn new(pts: &[(f64, f64)], cell: f64) -> Self {
        let mut map: std::collections::HashMap<(i64, i64), Vec<(f64, f64)>> = Default::default();
        for &p in pts {
            map.entry(((p.0 / cell).floor() as i64, (p.1 / cell).floor() as i64)).or_default().push(p);
        }
        Buckets { cell, map }
    }

    fn nearest(&self, q: (f64, f64), cap: f64) -> f64 {
        let (ci, cj) = ((q.0 / self.cell).floor() as i64, (q.1 / self.cell).floor() as i64);
        let mut best = f64::INFINITY;
        let max_ring = (cap / self.cell).ceil() as i64 + 1;
        for r in 0..=max_ring {
            if (r - 1) as f64 * self.cell > best {
                break;
            }
            for di in -r..=r {
                for dj in -r..=r {
                    if di.abs() != r && dj.abs() != r {
                        continue;
                    }
                    if let Some(v) = self.map.get(&(ci + di, cj + dj)) {
                        for p in v {
                            best = best.min(((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt());
                        }
                    }
                }
            }
        }
        best.min(cap)
    }
}

/// `max_{a ∈ A} min_{b ∈ B} |a - b|` in pixel units, capped at `cap`.
pub fn directed_hausdorff(a: &[(f64, f64)], b: &[(f64, f64)], cap: f64) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    if b.is_empty() {
        return cap;
    }
    let buckets = Buckets::new(b, 8.0);
    a.par_iter().map(|&q| buckets.nearest(q, cap)).reduce(|| 0.0, f64::max)
}

/// Symmetric discrete Hausdorff distance in pixel units, capped at `cap`.
pub fn hausdorff(a: &[(f64, f64)], b: &[(f64, f64)], cap: f64) -> f64 {
    directed_hausdorff(a, b, cap).max(directed_hausdorff(b, a, cap))
}

pub fn pixels_as_points(px: &[(usize, usize)]) -> Vec<(f64, f64)> {
    px.iter().map(|&(r, c)| (r as f64, c as f64)).collect()
}
