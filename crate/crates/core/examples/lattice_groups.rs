//! Character lattices in Z² and the torus subgroups they cut out.
//!
//! ```text
//! cargo run --example lattice_groups
//! ```

use skewsym::algebra::{annihilator, hnf_basis, snf_quotient, GroupKind};

pub fn run_example() -> skewsym::Result<()> {
    for vectors in [vec![], vec![[2, -2]], vec![[0, -2], [-2, -4]], vec![[3, 0], [0, 1]], vec![[4, 6], [6, 4]]] {
        let lat = hnf_basis(&vectors);
        let g = annihilator(&lat);
        println!("{vectors:?} -> basis {:?} -> {}", lat.basis(), g.presentation());
        if let GroupKind::Finite { .. } = g.kind() {
            let q = snf_quotient(&lat)?;
            println!("    Z/{} x Z/{}, {} elements", q.d1, q.d2, g.elements().map_or(0, |e| e.len()));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skewsym::Result<()> {
    run_example()
}
