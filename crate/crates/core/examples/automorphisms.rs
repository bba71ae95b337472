//! The automorphisms `sigma(s, mu)`: composition, inverses, restriction to `J`, and `omega` on the even part.
//!
//! Run with `cargo run --example automorphisms`.

use superjordan::expr::{parse_element, print};
use superjordan::field::FieldSpec;
use superjordan::maps::{apply_aut, apply_omega, compose_aut, restrict_to_jordan, SuperAut};
use superjordan::poly::Poly;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    let a = SuperAut::new(q.int(2), Poly::from_ints(q, &[0, 1]))?;
    let b = SuperAut::new(q.int(3), Poly::from_ints(q, &[1]))?;
    let ab = compose_aut(&a, &b)?;
    println!("{a} o {b} = {ab}");

    let u = parse_element("y^3 + x*z", q)?;
    assert_eq!(apply_aut(&ab, &u), apply_aut(&a, &apply_aut(&b, &u)));
    println!("{ab} sends {} to {}", print(&u), print(&apply_aut(&ab, &u)));
    assert_eq!(apply_aut(&ab.inverse(), &apply_aut(&ab, &u)), u);

    println!("restricted to J: {}", restrict_to_jordan(&ab));
    println!("g = {} has g(y) = {}", SuperAut::g(q), print(&SuperAut::g(q).image_y()));

    let even = parse_element("x*y*z + y^2", q)?;
    println!("omega({}) = {}", print(&even), print(&apply_omega(&even)?));
    Ok(())
}
