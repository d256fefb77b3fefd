//! Numeric evidence that group elements preserve J_f and nearby rotations
//! do not.
//!
//! ```text
//! cargo run --release --example verify_symmetry
//! ```

use num_complex::Complex64;
use skewsym::cli::parse_map;
use skewsym::numerics::{verify_symmetry_numeric, GreenEvaluator, JuliaSamples, SymmetryRealizer, VerifyConfig};
use skewsym::symmetry::symmetry_group;

pub fn run_example() -> skewsym::Result<()> {
    let f = parse_map("(z^2 - 1, z^2*w^2)")?;
    let group = symmetry_group(&f)?.group;
    let eval = GreenEvaluator::new(&f);
    let samples = JuliaSamples::generate(&eval, VerifyConfig { samples: 256, ..VerifyConfig::default() })?;
    let realizer = SymmetryRealizer::new(&f);
    for (mu, nu) in group.elements_up_to_order(3) {
        let (m, n) = (mu.to_complex(), nu.to_complex());
        let ok = verify_symmetry_numeric(&eval, &realizer, m, n, &samples);
        let off = verify_symmetry_numeric(&eval, &realizer, m * Complex64::from_polar(1.0, 0.05), n, &samples);
        println!("({mu}, {nu}): distance {:.1e} pass {}; perturbed {:.1e} pass {}", ok.distance, ok.pass, off.distance, off.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
