//! In characteristic `p`, `z^p` and `y^(2p)` are primitive; reducing by them gives a finite-dimensional quotient.
//!
//! Run with `cargo run --example nichols_quotient`.

use superjordan::balgebra::{Element, Monomial};
use superjordan::field::FieldSpec;
use superjordan::hopf::{coproduct, is_primitive, nichols_reduce};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [3u32, 5] {
        let spec = FieldSpec::prime(p as u64)?;
        let zp = Element::z(spec).pow(p);
        let y2p = Element::y(spec).pow(2 * p);
        assert!(is_primitive(&zp) && is_primitive(&y2p));
        println!("over {spec}: Delta(z^{p}) = {}", coproduct(&zp));

        let surviving: usize = (0..=8 * p)
            .map(|n| {
                Monomial::of_degree(n)
                    .into_iter()
                    .filter(|m| !nichols_reduce(&Element::monomial(spec, *m)).unwrap().is_zero())
                    .count()
            })
            .sum();
        println!("  quotient dimension: {surviving} (expected 2 * {p} * {})", 2 * p);
        assert_eq!(surviving as u32, 4 * p * p);
    }
    Ok(())
}
