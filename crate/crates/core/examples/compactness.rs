//! Whether J_f is compact: does b_d vanish on J_p?
//!
//! ```text
//! cargo run --release --example compactness
//! ```

use skewsym::cli::parse_map;
use skewsym::numerics::compactness_check;

pub fn run_example() -> skewsym::Result<()> {
    for text in ["(z^2, (z - 1)*w^2)", "(z^2, (z - 3)*w^2)", "(z^2 - 2, (z - 1)*w^2)", "(z^2 - 1, 5*w^2 + z)"] {
        let r = compactness_check(&parse_map(text)?);
        println!("{text}: {:?} via {} (min distance {:?})", r.verdict, r.method, r.min_distance);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
