//! The lattice pipeline against a brute-force search over rotations of small
//! order, checked on the iterate equations in a prime field.
//!
//! ```text
//! cargo run --release --example oracle_crosscheck
//! ```

use skewsym::cli::parse_map;
use skewsym::symmetry::{brute_force_group, symmetry_group};

pub fn run_example() -> skewsym::Result<()> {
    for text in ["(z^3, z*w^2 + z)", "(z^3, z*w^2 + z^3)", "(z^4 + z, z^2*w^3 + w)", "(z^2, z^3*w^5 + z*w^3 + w^2)"] {
        let f = parse_map(text)?;
        let lattice: Vec<_> = symmetry_group(&f)?.group.elements_up_to_order(8);
        let brute = brute_force_group(&f, 8, 4)?;
        println!("{text}: {} elements of order <= 8, oracle agrees: {}", lattice.len(), lattice == brute);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
