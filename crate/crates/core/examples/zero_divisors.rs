//! Zero-divisor verdicts for homogeneous elements, each confirmed by brute force.
//!
//! Run with `cargo run --example zero_divisors`.

use superjordan::expr::{parse_element, print};
use superjordan::field::FieldSpec;
use superjordan::structure::{
    brute_annihilator, classify_zero_divisor, default_bound, is_regular_homogeneous, ore_witness,
};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::rationals();
    for text in [
        "x*y",
        "z - x*y",
        "x*y*z^2",
        "x",
        "x*z*y^2 - z^2*y",
        "y",
        "z + y^2",
        "x*y + y^2",
    ] {
        let f = parse_element(text, q)?;
        let verdict = classify_zero_divisor(&f)?;
        let brute = brute_annihilator(&f, default_bound(&f));
        assert_eq!(verdict.is_zero_divisor, brute.is_some());
        match &verdict.witness {
            Some(w) => {
                assert!((&f * w).is_zero());
                println!("{text:>16}: {} (annihilated by {})", verdict.reason, print(w));
            }
            None => println!("{text:>16}: {}", verdict.reason),
        }
    }

    // Ore condition for a regular element: f*b' = b*f'.
    let f = parse_element("y", q)?;
    let b = parse_element("x", q)?;
    assert!(is_regular_homogeneous(&f)?);
    if let Some((b2, f2)) = ore_witness(&f, &b, 4)? {
        println!("Ore witness for f = y, b = x: b' = {}, f' = {}", print(&b2), print(&f2));
        assert_eq!(&f * &b2, &b * &f2);
    }
    Ok(())
}
