//! Sorting maps with infinitely many symmetries into the four types.
//!
//! ```text
//! cargo run --release --example classify_types
//! ```

use skewsym::classify::classify;
use skewsym::cli::parse_map;

pub fn run_example() -> skewsym::Result<()> {
    let maps = [
        "(z^2, z*w^2)",
        "(z^3, w^2 - 1)",
        "(z^2 - 1, z^2*w^2)",
        "(z^3, z*w^2 + z^3)",
        "(z^2, z^3*w^5 + z*w^3 + w^2)",
        "(z^3, z*w^2 + z)",
    ];
    for text in maps {
        let r = classify(&parse_map(text)?)?;
        print!("{text}: type {}", r.type_tag.as_str());
        if let Some(sc) = &r.semiconjugacy {
            print!(", pi = (z^{}, z^{} w), base {}", sc.r, sc.s, sc.base.fmt_var("w"));
        }
        println!(", Γ = {}, J_f {:?}", r.gamma.presentation(), r.compactness.verdict);
        println!("  shape {}", serde_json::to_string(&r.julia_shape).unwrap());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
