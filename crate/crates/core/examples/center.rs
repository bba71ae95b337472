//! Centers by degree: trivial over `Q`, generated by `z^p` and `y^(2p)` over `F_p`.
//!
//! Run with `cargo run --example center`.

use superjordan::expr::print;
use superjordan::field::FieldSpec;
use superjordan::structure::{center_basis, supercenter_basis};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [FieldSpec::rationals(), FieldSpec::prime(3)?, FieldSpec::prime(5)?] {
        println!("over {spec}:");
        for n in 1..=12 {
            let center = center_basis(n, spec);
            let supercenter = supercenter_basis(n, spec);
            if center.is_empty() && supercenter.is_empty() {
                continue;
            }
            let show = |b: &[superjordan::Element]| b.iter().map(print).collect::<Vec<_>>().join(", ");
            println!(
                "  degree {n:>2}: center [{}], supercenter [{}]",
                show(&center),
                show(&supercenter)
            );
        }
    }
    Ok(())
}
