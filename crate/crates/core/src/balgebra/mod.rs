//! Arithmetic in the super Jordan plane on the basis `x^a z^b y^c`.

mod element;
mod monomial;
pub mod naive;
mod ore;

pub use element::Element;
pub use monomial::Monomial;
pub use ore::{dmap, ore_commute, tau, PolyAz};

use crate::poly::Poly;

/// Product `u * v` in normal form; errors on mixed fields.
pub fn normal_mul(u: &Element, v: &Element) -> crate::Result<Element> {
    u.checked_mul(v)
}

/// Euler derivative `z d/dz` on `k[z]`.
pub fn euler_d(f: &Poly) -> Poly {
    f.euler_d()
}

/// Number of PBW monomials of degree `n`.
pub fn basis_count(n: u32) -> usize {
    Monomial::of_degree(n).len()
}
