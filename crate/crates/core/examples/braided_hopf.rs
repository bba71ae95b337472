//! The braided Hopf structure: braiding, coproduct, counit, primitives, and the projection to `k[eta_L]`.
//!
//! Run with `cargo run --example braided_hopf`.

use superjordan::expr::{parse_element, print};
use superjordan::field::FieldSpec;
use superjordan::hopf::{
    braiding, coproduct, counit, counit_left, delta_tensor_id, id_tensor_delta, is_hopf_automorphism, primitive_space,
    project_l,
};
use superjordan::maps::SuperAut;
use superjordan::poly::Poly;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    let (x, y) = (parse_element("x", q)?, parse_element("y", q)?);
    println!("c(x (x) y) = {}", braiding(&x, &y)?);
    println!("c(y (x) y) = {}", braiding(&y, &y)?);

    for text in ["z", "y^2", "x*y", "z*y"] {
        let u = parse_element(text, q)?;
        let d = coproduct(&u);
        assert_eq!(delta_tensor_id(&d), id_tensor_delta(&d));
        assert_eq!(counit_left(&d), u);
        println!("Delta({text}) = {d}");
    }
    println!("counit(3 + y) = {}", counit(&parse_element("3 + y", q)?));

    for n in 1..=4 {
        let basis: Vec<String> = primitive_space(n, q).iter().map(print).collect();
        println!("primitives in degree {n}: {basis:?}");
    }

    println!("pi(y^3 + z) = {}", project_l(&parse_element("y^3 + z", q)?));

    for (c, mu) in [(1, 2), (0, 1)] {
        let s = if mu == 1 {
            Poly::from_ints(q, &[0, 1])
        } else {
            Poly::from_ints(q, &[c])
        };
        let sigma = SuperAut::new(q.int(mu), s)?;
        println!("{sigma} commutes with Delta: {}", is_hopf_automorphism(&sigma, 4));
    }
    Ok(())
}
