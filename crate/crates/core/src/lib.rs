//! Exact symbolic computation in the super Jordan plane.
//!
//! The algebra is generated by `x`, `y` with `x^2 = 0` and `yz - zy - xz = 0`,
//! where `z = xy + yx`. Elements are kept in normal form on the basis
//! `x^a z^b y^c` (`a` in `{0, 1}`) over the rationals or `F_p` for odd `p`.
//!
//! ```
//! use superjordan::expr::{parse_element, print};
//! use superjordan::field::FieldSpec;
//!
//! let q = FieldSpec::rationals();
//! let yx = parse_element("y*x", q).unwrap();
//! assert_eq!(print(&yx), "z - x*y");
//! ```
//!
//! Each module has a runnable walkthrough under `examples/`
//! (`cargo run --example normal_form`, and so on).

pub mod balgebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod field;
pub mod hopf;
pub mod jordan;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod random;
pub mod serial;
pub mod structure;

pub use balgebra::{Element, Monomial};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
