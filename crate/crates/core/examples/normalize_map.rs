//! Moving both centroids to the origin and scaling to monic form.
//!
//! ```text
//! cargo run --example normalize_map
//! ```

use skewsym::cli::parse_map;
use skewsym::skew::normalize;

pub fn run_example() -> skewsym::Result<()> {
    for text in ["(z^3, z*w^2 + 2*z^2*w + z^3 + z)", "(2z^2, w^2)", "(z^2 + 2z + 3, (z+1)w^2 + w)", "(z^2, z^2*w^2 + z*w)"] {
        let f = parse_map(text)?;
        let n = normalize(&f);
        println!("{f}");
        println!("  zeta = {}, zeta_z = {}", n.centroids.zeta, n.centroids.zeta_z);
        match n.normal_form() {
            Some(t) => println!("  normal form {t}  (c1 = {:.6}, c2 = {:.6})", n.scale.c1, n.scale.c2),
            None => println!("  fiber centroid is not a Laurent polynomial"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
