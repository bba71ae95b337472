//! Normal forms in the PBW basis `x^a z^b y^c`, checked against naive word rewriting.
//!
//! Run with `cargo run --example normal_form`.

use superjordan::balgebra::{naive, Element, Monomial};
use superjordan::expr::{parse_element, print};
use superjordan::field::FieldSpec;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    for text in ["y*x", "x*x", "y*z - z*y", "(x*y)^3", "y^2*z", "(x + y)^3"] {
        let u = parse_element(text, q)?;
        println!("{text:>12}  =  {}", print(&u));
    }

    let (x, y, z) = (Element::x(q), Element::y(q), Element::z(q));
    assert!((&(&(&y * &z) - &(&z * &y)) - &(&x * &z)).is_zero());

    // The Ore engine and the rewriter agree on every pair of low-degree monomials.
    let basis = Monomial::up_to_degree(4);
    let mut pairs = 0;
    for a in &basis {
        for b in &basis {
            let (u, v) = (Element::monomial(q, *a), Element::monomial(q, *b));
            assert_eq!(&u * &v, naive::product(&u, &v));
            pairs += 1;
        }
    }
    println!("Ore product matches rewriting on {pairs} monomial pairs");

    let f7 = FieldSpec::prime(7)?;
    println!("over {f7}: (y + 3)^7 = {}", print(&parse_element("(y + 3)^7", f7)?));
    Ok(())
}
