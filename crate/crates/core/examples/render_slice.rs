//! Rendering a fiber slice of J_f to PGM with a JSON sidecar.
//!
//! ```text
//! cargo run --release --example render_slice -- /tmp/slices
//! ```

use num_complex::Complex64;
use skewsym::cli::parse_map;
use skewsym::numerics::{render_slice, GreenEvaluator, Window};

pub fn run_example() -> skewsym::Result<()> {
    let dir = std::env::args().nth(1).map(Into::into).unwrap_or_else(|| std::env::temp_dir().join("skewsym-slices"));
    let res = 256;
    for (stem, text, z) in [
        ("circle", "(z^2, w^2)", Complex64::new(1.0, 0.0)),
        ("rotated", "(z^3, z*w^2 + z^3)", Complex64::from_polar(1.0, 1.0)),
        // The fixed point (1 + √5)/2 of z² - 1 lies on J_p.
        ("bundle", "(z^2 - 1, z^2*w^2)", Complex64::new((1.0 + 5f64.sqrt()) / 2.0, 0.0)),
    ] {
        let f = parse_map(text)?;
        let slice = render_slice(&GreenEvaluator::new(&f), z, Window::new(Complex64::new(0.0, 0.0), 4.0), res, 1.0);
        slice.write(&dir, stem, 0)?;
        println!(
            "{stem}: {} boundary pixels, bounded fraction {:.3} -> {}",
            slice.stats.boundary_pixels,
            slice.stats.bounded_fraction,
            dir.join(format!("{stem}.pgm")).display()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
