use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::ore;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

/// An element of the super Jordan plane in PBW normal form.
///
/// Stored as a sparse map from basis monomials to nonzero coefficients, so
/// structural equality is equality in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    spec: FieldSpec,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Element {
    pub fn zero(spec: FieldSpec) -> Self {
        Element {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::monomial(spec, Monomial::ONE)
    }

    pub fn x(spec: FieldSpec) -> Self {
        Self::monomial(spec, Monomial::X)
    }

    pub fn y(spec: FieldSpec) -> Self {
        Self::monomial(spec, Monomial::Y)
    }

    pub fn z(spec: FieldSpec) -> Self {
        Self::monomial(spec, Monomial::Z)
    }

    pub fn monomial(spec: FieldSpec, m: Monomial) -> Self {
        Self::term(spec.one(), m)
    }

    pub fn term(coeff: FieldElement, m: Monomial) -> Self {
        let mut e = Self::zero(coeff.spec());
        e.add_term(m, coeff);
        e
    }

    pub fn scalar(c: FieldElement) -> Self {
        Self::term(c, Monomial::ONE)
    }

    /// Collect terms, merging repeats and dropping zeros.
    pub fn from_terms(spec: FieldSpec, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut e = Self::zero(spec);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    /// Convenience for tests and examples: `(a, b, c, coeff)` integer tuples.
    pub fn from_int_terms(spec: FieldSpec, terms: &[(u8, u32, u32, i64)]) -> Self {
        Self::from_terms(
            spec,
            terms.iter().map(|&(a, b, c, k)| (Monomial::new(a, b, c), spec.int(k))),
        )
    }

    pub fn from_poly_z(p: &Poly) -> Self {
        Self::from_terms(
            p.spec(),
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(0, i as u32, 0), c.clone())),
        )
    }

    /// The polynomial `s(z)` if this element lies in `k[z]`.
    pub fn to_poly_z(&self) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            if m.a() != 0 || m.c() != 0 {
                return Err(Error::NotUnivariate(self.to_string()));
            }
            let i = m.b() as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, self.spec.zero());
            }
            coeffs[i] = c.clone();
        }
        Ok(Poly::from_coeffs(self.spec, coeffs))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: FieldElement) {
        debug_assert_eq!(c.spec(), self.spec);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.spec.zero())
    }

    /// Number of nonzero terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree if every term has the same one (zero counts as homogeneous).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Parity if every term has the same one; `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<u32> {
        let mut parities = self.terms.keys().map(Monomial::parity);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.parity() == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.parity() == 1)
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.spec.label(), other.spec.label()))
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.checked_add(&other.neg_ref())
    }

    /// The product in PBW normal form.
    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(ore::normal_mul(self, other))
    }

    pub fn scale(&self, c: &FieldElement) -> Element {
        assert_eq!(c.spec(), self.spec, "scalar from a different field");
        Self::from_terms(self.spec, self.terms.iter().map(|(m, k)| (*m, k * c)))
    }

    fn neg_ref(&self) -> Element {
        Element {
            spec: self.spec,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Element {
        let mut base = self.clone();
        let mut acc = Element::one(self.spec);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `uv - vu`
    pub fn commutator(&self, other: &Element) -> Element {
        &(self * other) - &(other * self)
    }

    /// Homogeneous components by total degree.
    pub fn grade(&self) -> BTreeMap<u32, Element> {
        let mut out: BTreeMap<u32, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Element::zero(self.spec))
                .add_term(*m, c.clone());
        }
        out
    }

    /// `(even part, odd part)`
    pub fn parity_split(&self) -> (Element, Element) {
        let mut even = Element::zero(self.spec);
        let mut odd = Element::zero(self.spec);
        for (m, c) in &self.terms {
            let part = if m.parity() == 0 { &mut even } else { &mut odd };
            part.add_term(*m, c.clone());
        }
        (even, odd)
    }

    /// Keep only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Element {
        Element {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(m, c)| {
            let mono = if *m == Monomial::ONE {
                String::new()
            } else {
                m.to_string()
            };
            (c.clone(), mono)
        });
        f.write_str(&crate::expr::join_terms(terms))
    }
}

// Operator impls panic on mixed fields; use the `checked_*` methods to get an error.
macro_rules! elem_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                self.$checked(rhs).expect("elements over different fields")
            }
        }
        impl $trait<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

elem_binop!(Add, add, checked_add);
elem_binop!(Sub, sub, checked_sub);
elem_binop!(Mul, mul, checked_mul);

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.neg_ref()
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.neg_ref()
    }
}
