//! The locally nilpotent derivation `c` (y -> x) and `exp(s c) = sigma(s, 1)`.
//!
//! Run with `cargo run --example derivations`.

use superjordan::expr::{parse_element, print};
use superjordan::field::FieldSpec;
use superjordan::maps::{apply_derivation, exp_derivation, GenDerivation, SuperAut};
use superjordan::poly::Poly;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    let c = GenDerivation::c(q);
    println!("c(z) = {}", print(&c.on_z()));

    let mut u = parse_element("y^4 + z*y", q)?;
    let mut step = 0;
    while !u.is_zero() {
        println!("c^{step}: {}", print(&u));
        u = apply_derivation(&c, &u);
        step += 1;
    }

    let s = Poly::from_ints(q, &[1, 2]);
    let v = parse_element("y^3 + x*y", q)?;
    let e = exp_derivation(&s, &v)?;
    assert_eq!(e, SuperAut::new(q.one(), s.clone())?.apply(&v));
    println!("exp(({}) c)({}) = {}", s.display_with("z"), print(&v), print(&e));

    let f5 = FieldSpec::prime(5)?;
    if let Err(e) = exp_derivation(&Poly::from_ints(f5, &[1]), &parse_element("y", f5)?) {
        println!("over {f5}: {e}");
    }
    Ok(())
}
