//! The Ore presentation `A[z][y; tau, d]` with `A = k[x]/(x^2)`.
//!
//! Products are put in normal form by pushing powers of `y` to the right
//! through elements of `A[z]` with `y f = tau(f) y + d(f)`.

use std::collections::HashMap;

use super::element::Element;
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;

/// An element `f = f+ + x f-` of the commutative algebra `A[z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyAz {
    pub plus: Poly,
    pub minus: Poly,
}

impl PolyAz {
    pub fn zero(spec: FieldSpec) -> Self {
        PolyAz {
            plus: Poly::zero(spec),
            minus: Poly::zero(spec),
        }
    }

    pub fn new(plus: Poly, minus: Poly) -> Self {
        assert_eq!(plus.spec(), minus.spec());
        PolyAz { plus, minus }
    }

    fn basis(spec: FieldSpec, a: u8, b: u32) -> Self {
        let mono = Poly::monomial(spec.one(), b as usize);
        if a == 0 {
            PolyAz {
                plus: mono,
                minus: Poly::zero(spec),
            }
        } else {
            PolyAz {
                plus: Poly::zero(spec),
                minus: mono,
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.plus.spec()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    /// Split an element of `A[z]`; fails if some monomial contains `y`.
    pub fn from_element(f: &Element) -> Result<Self> {
        let spec = f.spec();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (m, c) in f.terms() {
            if m.c() != 0 {
                return Err(Error::NotInAz(m.to_string()));
            }
            let target = if m.a() == 0 { &mut plus } else { &mut minus };
            let i = m.b() as usize;
            if target.len() <= i {
                target.resize(i + 1, spec.zero());
            }
            target[i] = c.clone();
        }
        Ok(PolyAz {
            plus: Poly::from_coeffs(spec, plus),
            minus: Poly::from_coeffs(spec, minus),
        })
    }

    pub fn to_element(&self) -> Element {
        self.to_element_times_y(0)
    }

    /// `f * y^c` as an element.
    pub fn to_element_times_y(&self, c: u32) -> Element {
        let spec = self.spec();
        let plus = self
            .plus
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, k)| (Monomial::new(0, i as u32, c), k.clone()));
        let minus = self
            .minus
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, k)| (Monomial::new(1, i as u32, c), k.clone()));
        Element::from_terms(spec, plus.chain(minus))
    }

    pub fn add(&self, other: &PolyAz) -> PolyAz {
        PolyAz {
            plus: self.plus.add(&other.plus),
            minus: self.minus.add(&other.minus),
        }
    }

    /// Product in the commutative algebra `A[z]`.
    pub fn mul(&self, other: &PolyAz) -> PolyAz {
        PolyAz {
            plus: self.plus.mul(&other.plus),
            minus: self.plus.mul(&other.minus).add(&self.minus.mul(&other.plus)),
        }
    }

    /// `tau(f) = f+ - x f-`
    pub fn tau(&self) -> PolyAz {
        PolyAz {
            plus: self.plus.clone(),
            minus: self.minus.neg(),
        }
    }

    /// `d(f) = x D(f+) + z f-`
    pub fn d(&self) -> PolyAz {
        PolyAz {
            plus: self.minus.shift(1),
            minus: self.plus.euler_d(),
        }
    }
}

/// The automorphism `tau` of `A[z]`.
pub fn tau(f: &Element) -> Result<Element> {
    Ok(PolyAz::from_element(f)?.tau().to_element())
}

/// The `tau`-derivation `d` of `A[z]`.
pub fn dmap(f: &Element) -> Result<Element> {
    Ok(PolyAz::from_element(f)?.d().to_element())
}

/// Coefficients `g_j` with `y^c f = sum_j g_j y^j`.
pub(crate) fn push_y(c: u32, f: &PolyAz) -> Vec<PolyAz> {
    let spec = f.spec();
    let mut coeffs = vec![f.clone()];
    for _ in 0..c {
        let mut next = vec![PolyAz::zero(spec); coeffs.len() + 1];
        for (j, g) in coeffs.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            next[j + 1] = next[j + 1].add(&g.tau());
            next[j] = next[j].add(&g.d());
        }
        coeffs = next;
    }
    coeffs
}

/// Normal form of `y^c f` for `f` in `A[z]`.
pub fn ore_commute(c: u32, f: &Element) -> Result<Element> {
    let f = PolyAz::from_element(f)?;
    let spec = f.spec();
    let mut out = Element::zero(spec);
    for (j, g) in push_y(c, &f).iter().enumerate() {
        out = &out + &g.to_element_times_y(j as u32);
    }
    Ok(out)
}

/// Product of two elements in PBW normal form.
///
/// For basis monomials, `(x^a z^b y^c)(x^a' z^b' y^c')` pushes `y^c` through
/// `x^a' z^b'` and then merges the `A[z]` parts.
pub(crate) fn normal_mul(u: &Element, v: &Element) -> Element {
    let spec = u.spec();
    let mut cache: HashMap<(u32, u8, u32), Vec<PolyAz>> = HashMap::new();
    let mut out = Element::zero(spec);
    for (m1, c1) in u.terms() {
        for (m2, c2) in v.terms() {
            let coeff = c1 * c2;
            let pushed = cache
                .entry((m1.c(), m2.a(), m2.b()))
                .or_insert_with(|| push_y(m1.c(), &PolyAz::basis(spec, m2.a(), m2.b())));
            for (j, g) in pushed.iter().enumerate() {
                let c = j as u32 + m2.c();
                // x^a z^b (g+ + x g-); when a = 1 only x g+ survives
                let parts: &[(u8, &Poly)] = if m1.a() == 0 {
                    &[(0, &g.plus), (1, &g.minus)]
                } else {
                    &[(1, &g.plus)]
                };
                for &(a, part) in parts {
                    for (i, k) in part.coeffs().iter().enumerate() {
                        out.add_term(Monomial::new(a, i as u32 + m1.b(), c), &coeff * k);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balgebra::naive;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn el(terms: &[(u8, u32, u32, i64)]) -> Element {
        Element::from_int_terms(q(), terms)
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&Element::x(q())).unwrap(), -Element::x(q()));
        assert_eq!(tau(&Element::z(q())).unwrap(), Element::z(q()));
        let f = el(&[(0, 0, 0, 1), (1, 2, 0, 1)]);
        assert_eq!(tau(&f).unwrap(), el(&[(0, 0, 0, 1), (1, 2, 0, -1)]));
        assert!(matches!(tau(&Element::y(q())), Err(Error::NotInAz(_))));
    }

    #[test]
    fn tau_example_matches_engine_identity() {
        // y f = tau(f) y + d(f), evaluated with the word rewriter
        let f = el(&[(0, 0, 0, 1), (1, 2, 0, 1)]);
        let y = Element::y(q());
        let lhs = naive::product(&y, &f);
        let rhs = &naive::product(&tau(&f).unwrap(), &y) + &dmap(&f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_examples() {
        assert_eq!(dmap(&Element::x(q())).unwrap(), Element::z(q()));
        assert_eq!(dmap(&Element::z(q())).unwrap(), el(&[(1, 1, 0, 1)]));
        assert!(dmap(&el(&[(0, 0, 2, 1)])).is_err());
    }

    #[test]
    fn d_of_z_squared_against_rewriter() {
        let z2 = el(&[(0, 2, 0, 1)]);
        let y = Element::y(q());
        let oracle = &naive::product(&y, &z2) - &naive::product(&tau(&z2).unwrap(), &y);
        assert_eq!(oracle, el(&[(1, 2, 0, 2)]));
        assert_eq!(dmap(&z2).unwrap(), oracle);
    }

    #[test]
    fn ore_commute_examples() {
        let z = Element::z(q());
        assert_eq!(ore_commute(1, &z).unwrap(), el(&[(0, 1, 1, 1), (1, 1, 0, 1)]));
        assert_eq!(ore_commute(2, &z).unwrap(), el(&[(0, 1, 2, 1), (0, 2, 0, 1)]));
        assert_eq!(
            ore_commute(1, &Element::x(q())).unwrap(),
            el(&[(0, 1, 0, 1), (1, 0, 1, -1)])
        );
        assert_eq!(ore_commute(0, &z).unwrap(), z);
    }

    #[test]
    fn normal_mul_examples() {
        let x = Element::x(q());
        let y = Element::y(q());
        assert_eq!(&y * &x, el(&[(0, 1, 0, 1), (1, 0, 1, -1)]));
        assert!((&x * &x).is_zero());
        let xy = &x * &y;
        assert_eq!(&xy * &xy, el(&[(1, 1, 1, 1)]));
    }

    #[test]
    fn tau_involutive_and_anticommutes_with_d() {
        let f = el(&[(0, 0, 0, 3), (1, 1, 0, -2), (0, 3, 0, 5), (1, 4, 0, 1)]);
        let pf = PolyAz::from_element(&f).unwrap();
        assert_eq!(pf.tau().tau(), pf);
        assert_eq!(
            pf.d().tau(),
            PolyAz {
                plus: pf.tau().d().plus.neg(),
                minus: pf.tau().d().minus.neg()
            }
        );
    }
}
