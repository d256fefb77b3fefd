//! Exact symmetry groups with their certificates.
//!
//! ```text
//! cargo run --release --example symmetry_groups
//! ```

use skewsym::cli::parse_map;
use skewsym::symmetry::{symmetry_group, Status};

pub fn run_example() -> skewsym::Result<()> {
    let maps = [
        "(z^3, z*w^2 + z)",
        "(z^3, z*w^2 + 2*z^2*w + z^3 + z)",
        "(z^2 - 1, z^2*w^2)",
        "(z^3, z*w^2 + z^3)",
        "(z^2, z^3*w^5 + z*w^3 + w^2)",
        "(z^2, (z^2 - 1)*w^2)",
        "(z^2 - 2, (z^3 + z)*w^2 + w^2*z - 3)",
    ];
    for text in maps {
        let f = parse_map(text)?;
        let r = symmetry_group(&f)?;
        let status = match &r.status {
            Status::Exact(j) => format!("exact ({})", j.as_str()),
            Status::BoundsPair { lower, upper } => format!("between {} and {}", lower.presentation(), upper.presentation()),
            Status::CandidateUpperBound => "candidate upper bound".to_string(),
        };
        println!("{text}\n  Γ = {}  [{status}]", r.group.presentation());
        if let Some(c) = &r.conditions {
            println!("  lattice {:?}, M*-stable: {}", c.lattice.basis(), c.is_certified());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
