//! Base and fiberwise Green functions, Φ, and the fiberwise Böttcher map.
//!
//! ```text
//! cargo run --release --example green_functions
//! ```

use num_complex::Complex64;
use skewsym::cli::parse_map;
use skewsym::numerics::GreenEvaluator;

pub fn run_example() -> skewsym::Result<()> {
    let f = parse_map("(z^3, z*w^2 + z)")?;
    let g = GreenEvaluator::new(&f);
    let z = Complex64::from_polar(1.0, 0.7);
    for r in [0.5, 2.0, 10.0] {
        let w = Complex64::new(r, 0.3);
        let zn = g.map().p(z);
        let residual = g.green_fiber(zn, g.map().q(z, w)) - 2.0 * g.green_fiber(z, w);
        println!("G_z({w:.2}) = {:.6}  functional-equation residual {residual:.1e}", g.green_fiber(z, w));
    }
    println!("G_p(2) = {:.6} (log 2 = {:.6})", g.green_base(Complex64::new(2.0, 0.0)), 2f64.ln());
    let (phi, status) = g.phi_sum(z);
    println!("Phi(z) = {phi:.6} [{status:?}]");
    for r in [1e3, 1e6] {
        let w = Complex64::new(r, 0.0);
        let b = g.bottcher_fiber(z, w)?;
        println!("|phi_z(w) - w| at |w| = {r:e}: {:.3e}", (b - w).norm());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
