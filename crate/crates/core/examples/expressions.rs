//! Parsing, printing, and JSON records, including the abstract Jordan plane.
//!
//! Run with `cargo run --example expressions`.

use superjordan::expr::{parse, parse_ast, print, Parsed, Target};
use superjordan::field::FieldSpec;
use superjordan::serial::{from_json, to_json, ElementRecord};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    println!("{:?}", parse_ast("-y^2 + 2*x*y")?);

    for text in ["-y^2", "(-y)^2", "1/2*y*x", "z - (x*y + y*x)"] {
        if let Parsed::B(u) = parse(text, q, Target::B)? {
            println!("{text:>16}  ->  {}", print(&u));
        }
    }
    if let Parsed::Jordan(u) = parse("Y^2*X", q, Target::Jordan)? {
        println!("{:>16}  ->  {u}", "Y^2*X");
    }

    for bad in ["xy", "2x", "x^", "w"] {
        println!("{bad:>16}  !!  {}", parse(bad, q, Target::B).unwrap_err());
    }

    let f5 = FieldSpec::prime(5)?;
    let Parsed::B(u) = parse("7*x - y*x", f5, Target::B)? else {
        unreachable!()
    };
    let json = to_json(&ElementRecord::from_element(&u));
    println!("{json}");
    let back: ElementRecord = from_json(&json)?;
    assert_eq!(back.to_element()?, u);
    Ok(())
}
