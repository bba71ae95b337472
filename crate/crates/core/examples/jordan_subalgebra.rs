//! The Jordan subalgebra `J = k[z, y^2]`: the twist `eta`, the operator `nabla`,
//! the abstract Jordan plane, and the super decomposition `p + q*xy + r*x + s*y`.
//!
//! Run with `cargo run --example jordan_subalgebra`.

use superjordan::expr::{parse_element, parse_jordan};
use superjordan::field::FieldSpec;
use superjordan::jordan::{decompose_super, eta, eta_inv, jordan_embed, nabla, JordanElement};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    let f = JordanElement::new(parse_element("z^2*y^4 + 3*y^2", q)?)?;
    println!("f          = {f}");
    println!("eta(f)     = {}", eta(&f));
    println!("eta^-1(f)  = {}", eta_inv(&f));
    println!("nabla(f)   = {}", nabla(&f));
    assert_eq!(eta_inv(&eta(&f)), f);

    // YX = XY - (1/2)X^2 maps into B via X -> z, Y -> -(1/2)y^2.
    let yx = parse_jordan("Y*X", q)?;
    println!("Y*X        = {yx}");
    println!("embedded   = {}", jordan_embed(&yx));
    let direct = parse_element("(-1/2*y^2)*z", q)?;
    assert_eq!(jordan_embed(&yx).into_element(), direct);

    let b = parse_element("y^3 + x*y*z + 2*x*y^2 - z", q)?;
    let parts = decompose_super(&b);
    println!("b = {b}");
    println!(
        "  p = {}\n  q = {}\n  r = {}\n  s = {}",
        parts.p, parts.q, parts.r, parts.s
    );
    assert_eq!(parts.recompose(), b);
    Ok(())
}
