//! The Jordan plane inside the super Jordan plane.
//!
//! `J` is spanned by `z^b y^(2k)`. Every element of the super Jordan plane
//! splits uniquely as `p + q*xy + r*x + s*y` with `p, q, r, s` in `J`.

use std::collections::BTreeMap;
use std::fmt;

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

/// An element `sum_i a_i(z) y^(2i)` of `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanElement(Element);

impl JordanElement {
    pub fn new(e: Element) -> Result<Self> {
        if let Some(m) = e.monomials().find(|m| m.a() != 0 || m.c() % 2 != 0) {
            return Err(Error::NotJordan(m.to_string()));
        }
        Ok(JordanElement(e))
    }

    pub fn zero(spec: FieldSpec) -> Self {
        JordanElement(Element::zero(spec))
    }

    pub fn one(spec: FieldSpec) -> Self {
        JordanElement(Element::one(spec))
    }

    pub fn z(spec: FieldSpec) -> Self {
        JordanElement(Element::z(spec))
    }

    /// `y^2`
    pub fn y2(spec: FieldSpec) -> Self {
        JordanElement(Element::monomial(spec, Monomial::new(0, 0, 2)))
    }

    pub fn from_poly_z(p: &Poly) -> Self {
        JordanElement(Element::from_poly_z(p))
    }

    /// `sum_i a[i](z) y^(2i)`
    pub fn from_coefficients(spec: FieldSpec, a: &[Poly]) -> Self {
        let terms = a.iter().enumerate().flat_map(|(i, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(b, k)| (Monomial::new(0, b as u32, 2 * i as u32), k.clone()))
        });
        JordanElement(Element::from_terms(spec, terms))
    }

    /// The coefficients `a_i(z)` of `y^(2i)`, without trailing zeros.
    pub fn coefficients(&self) -> Vec<Poly> {
        let spec = self.spec();
        let mut raw: Vec<Vec<FieldElement>> = Vec::new();
        for (m, c) in self.0.terms() {
            let i = (m.c() / 2) as usize;
            let b = m.b() as usize;
            if raw.len() <= i {
                raw.resize(i + 1, Vec::new());
            }
            if raw[i].len() <= b {
                raw[i].resize(b + 1, spec.zero());
            }
            raw[i][b] = c.clone();
        }
        raw.into_iter().map(|v| Poly::from_coeffs(spec, v)).collect()
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec()
    }

    pub fn as_element(&self) -> &Element {
        &self.0
    }

    pub fn into_element(self) -> Element {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        JordanElement(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        JordanElement(&self.0 - &other.0)
    }

    pub fn neg(&self) -> Self {
        JordanElement(-&self.0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        JordanElement(&self.0 * &other.0)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        JordanElement(self.0.scale(c))
    }
}

impl fmt::Display for JordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(y^2 - z)^i = y^(2i) - i z y^(2i-2)`
pub fn y2_minus_z_pow(spec: FieldSpec, i: u32) -> JordanElement {
    let mut e = Element::monomial(spec, Monomial::new(0, 0, 2 * i));
    if i > 0 {
        e.add_term(Monomial::new(0, 1, 2 * i - 2), -spec.int(i as i64));
    }
    JordanElement(e)
}

/// Substitute `y^2 -> y^2 - z` in coefficient form.
fn eta_coeffs(a: &[Poly], spec: FieldSpec) -> Vec<Poly> {
    let mut out: Vec<Poly> = a.to_vec();
    for (i, ai) in a.iter().enumerate().skip(1) {
        let shifted = ai.shift(1).scale(&spec.int(i as i64));
        out[i - 1] = out[i - 1].sub(&shifted);
    }
    out
}

/// The automorphism `eta` of `J`, determined by `eta(z) = z`, `eta(y^2) = y^2 - z`.
pub fn eta(f: &JordanElement) -> JordanElement {
    let spec = f.spec();
    JordanElement::from_coefficients(spec, &eta_coeffs(&f.coefficients(), spec))
}

/// Inverse of [`eta`]: `y^2 -> y^2 + z`.
pub fn eta_inv(g: &JordanElement) -> JordanElement {
    let spec = g.spec();
    let gs = g.coefficients();
    let mut fs = gs.clone();
    for i in (0..gs.len().saturating_sub(1)).rev() {
        let carry = fs[i + 1].shift(1).scale(&spec.int(i as i64 + 1));
        fs[i] = gs[i].add(&carry);
    }
    JordanElement::from_coefficients(spec, &fs)
}

/// `nabla(f) = sum_i D(a_i) (y^2 - z)^i`
pub fn nabla(f: &JordanElement) -> JordanElement {
    let spec = f.spec();
    let d: Vec<Poly> = f.coefficients().iter().map(Poly::euler_d).collect();
    JordanElement::from_coefficients(spec, &eta_coeffs(&d, spec))
}

/// An element `sum c_ij X^i Y^j` of the abstract Jordan plane `YX - XY = -1/2 X^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractJordan {
    spec: FieldSpec,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl AbstractJordan {
    pub fn zero(spec: FieldSpec) -> Self {
        AbstractJordan {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: FieldElement) -> Self {
        Self::from_terms(c.spec(), [((0, 0), c)])
    }

    pub fn gen_x(spec: FieldSpec) -> Self {
        Self::from_terms(spec, [((1, 0), spec.one())])
    }

    pub fn gen_y(spec: FieldSpec) -> Self {
        Self::from_terms(spec, [((0, 1), spec.one())])
    }

    pub fn from_terms(spec: FieldSpec, terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>) -> Self {
        let mut out = Self::zero(spec);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(|| self.spec.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// Terms keyed by `(i, j)` for `X^i Y^j`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AbstractJordan {
            spec: self.spec,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec, "elements over different fields");
        let spec = self.spec;
        let minus_half = spec.ratio(-1, 2).expect("odd characteristic");
        let mut out = Self::zero(spec);
        for (&(i, j), c1) in &self.terms {
            for (&(k, l), c2) in &other.terms {
                // Y^j X^k = sum_t cs[t] X^(k+t) Y^(j-t)
                let mut cs = vec![spec.one()];
                for _ in 0..j {
                    let mut next = vec![spec.zero(); cs.len() + 1];
                    for (t, c) in cs.iter().enumerate() {
                        next[t] = &next[t] + c;
                        let m = spec.int(k as i64 + t as i64);
                        next[t + 1] = &next[t + 1] + &(&(c * &m) * &minus_half);
                    }
                    cs = next;
                }
                let base = c1 * c2;
                for (t, c) in cs.iter().enumerate() {
                    let t = t as u32;
                    out.add_term((i + k + t, j - t + l), &base * c);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::scalar(self.spec.one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for AbstractJordan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|((i, j), _)| (i + j, *i, *j));
        let terms = keys.into_iter().map(|(&(i, j), c)| {
            let mut parts = Vec::new();
            for (sym, e) in [("X", i), ("Y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(sym.to_string()),
                    _ => parts.push(format!("{sym}^{e}")),
                }
            }
            (c.clone(), parts.join("*"))
        });
        f.write_str(&crate::expr::join_terms(terms))
    }
}

/// The embedding `X -> z`, `Y -> -1/2 y^2`.
pub fn jordan_embed(u: &AbstractJordan) -> JordanElement {
    let spec = u.spec;
    let minus_half = spec.ratio(-1, 2).expect("odd characteristic");
    let terms = u
        .terms
        .iter()
        .map(|(&(i, j), c)| (Monomial::new(0, i, 2 * j), c * &minus_half.pow(j as u64)));
    JordanElement(Element::from_terms(spec, terms))
}

/// Components of `b = p + q*xy + r*x + s*y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperDecomposition {
    pub p: JordanElement,
    pub q: JordanElement,
    pub r: JordanElement,
    pub s: JordanElement,
}

impl SuperDecomposition {
    /// `p + q*xy + r*x + s*y` in normal form.
    pub fn recompose(&self) -> Element {
        let spec = self.p.spec();
        let xy = xy(spec);
        let x = Element::x(spec);
        let y = Element::y(spec);
        &(&(self.p.as_element() + &(self.q.as_element() * &xy)) + &(self.r.as_element() * &x))
            + &(self.s.as_element() * &y)
    }
}

fn xy(spec: FieldSpec) -> Element {
    Element::monomial(spec, Monomial::new(1, 0, 1))
}

pub fn decompose_super(b: &Element) -> SuperDecomposition {
    let spec = b.spec();
    let mut p = Element::zero(spec);
    let mut q = Element::zero(spec);
    let mut r = Element::zero(spec);
    let mut s = Element::zero(spec);
    for (m, c) in b.terms() {
        match (m.a(), m.c() % 2) {
            (0, 0) => p.add_term(*m, c.clone()),
            (0, _) => s.add_term(Monomial::new(0, m.b(), m.c() - 1), c.clone()),
            // x g y = eta(g) x y
            (_, 1) => q.add_term(Monomial::new(0, m.b(), m.c() - 1), c.clone()),
            // x g = eta(g) x
            _ => r.add_term(Monomial::new(0, m.b(), m.c()), c.clone()),
        }
    }
    SuperDecomposition {
        p: JordanElement(p),
        q: eta(&JordanElement(q)),
        r: eta(&JordanElement(r)),
        s: JordanElement(s),
    }
}

/// An even element `plus + minus*xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenParts {
    pub plus: JordanElement,
    pub minus: JordanElement,
}

/// An odd element `plus*x + minus*y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddParts {
    pub plus: JordanElement,
    pub minus: JordanElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneous {
    Even(EvenParts),
    Odd(OddParts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    EvenEven,
    OddOdd,
    EvenOdd,
    OddEven,
}

impl Homogeneous {
    /// Split a parity-homogeneous element; zero counts as even.
    pub fn from_element(f: &Element) -> Result<Self> {
        let d = decompose_super(f);
        if f.is_even() {
            Ok(Homogeneous::Even(EvenParts { plus: d.p, minus: d.q }))
        } else if f.is_odd() {
            Ok(Homogeneous::Odd(OddParts { plus: d.r, minus: d.s }))
        } else {
            Err(Error::NotHomogeneous(f.to_string()))
        }
    }

    pub fn to_element(&self) -> Element {
        match self {
            Homogeneous::Even(e) => {
                let spec = e.plus.spec();
                e.plus.as_element() + &(e.minus.as_element() * &xy(spec))
            }
            Homogeneous::Odd(o) => {
                let spec = o.plus.spec();
                &(o.plus.as_element() * &Element::x(spec)) + &(o.minus.as_element() * &Element::y(spec))
            }
        }
    }
}

pub fn product_kind(left: &Homogeneous, right: &Homogeneous) -> ProductKind {
    match (left, right) {
        (Homogeneous::Even(_), Homogeneous::Even(_)) => ProductKind::EvenEven,
        (Homogeneous::Odd(_), Homogeneous::Odd(_)) => ProductKind::OddOdd,
        (Homogeneous::Even(_), Homogeneous::Odd(_)) => ProductKind::EvenOdd,
        (Homogeneous::Odd(_), Homogeneous::Even(_)) => ProductKind::OddEven,
    }
}

/// Product of two homogeneous elements by the closed formulas in `J`.
pub fn homog_product(left: &Homogeneous, right: &Homogeneous) -> Homogeneous {
    match (left, right) {
        (Homogeneous::Even(f), Homogeneous::Even(g)) => {
            let spec = f.plus.spec();
            let z = JordanElement::z(spec);
            let inner = eta(&g.plus.add(&g.minus.mul(&z)));
            Homogeneous::Even(EvenParts {
                plus: f.plus.mul(&g.plus),
                minus: f.plus.mul(&g.minus).add(&f.minus.mul(&inner)),
            })
        }
        (Homogeneous::Odd(f), Homogeneous::Odd(g)) => {
            let spec = f.plus.spec();
            let z = JordanElement::z(spec);
            let y2 = JordanElement::y2(spec);
            Homogeneous::Even(EvenParts {
                plus: f.minus.mul(&g.plus.mul(&z).add(&g.minus.mul(&y2))),
                minus: f
                    .plus
                    .mul(&eta(&g.minus))
                    .add(&f.minus.mul(&nabla(&g.minus).sub(&g.plus))),
            })
        }
        (Homogeneous::Even(f), Homogeneous::Odd(g)) => {
            let spec = f.plus.spec();
            let z = JordanElement::z(spec);
            let y2 = JordanElement::y2(spec);
            let inner = eta(&g.plus.mul(&z).add(&g.minus.mul(&y2)));
            Homogeneous::Odd(OddParts {
                plus: f.plus.mul(&g.plus).add(&f.minus.mul(&inner)),
                minus: f.plus.mul(&g.minus),
            })
        }
        (Homogeneous::Odd(g), Homogeneous::Even(f)) => {
            let spec = f.plus.spec();
            let z = JordanElement::z(spec);
            let eta_y2 = eta(&JordanElement::y2(spec));
            Homogeneous::Odd(OddParts {
                plus: g
                    .plus
                    .mul(&eta(&f.plus))
                    .add(&g.minus.mul(&nabla(&f.plus).sub(&f.minus.mul(&eta_y2)))),
                minus: g.minus.mul(&f.plus.add(&f.minus.mul(&z))),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_element, parse_jordan};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn e(t: &str) -> Element {
        parse_element(t, q()).unwrap()
    }

    fn j(t: &str) -> JordanElement {
        JordanElement::new(e(t)).unwrap()
    }

    #[test]
    fn membership() {
        assert!(JordanElement::new(e("z*y^2 + 3")).is_ok());
        assert!(JordanElement::new(e("y")).is_err());
        assert!(JordanElement::new(e("x*z")).is_err());
    }

    #[test]
    fn coefficient_round_trip() {
        let f = j("z*y^4 + 2*z^3 - y^2");
        let a = f.coefficients();
        assert_eq!(a.len(), 3);
        assert_eq!(JordanElement::from_coefficients(q(), &a), f);
    }

    #[test]
    fn shortcut_matches_repeated_products() {
        let base = e("y^2 - z");
        let mut acc = Element::one(q());
        for i in 0..=8 {
            assert_eq!(y2_minus_z_pow(q(), i).into_element(), acc);
            acc = &acc * &base;
        }
    }

    #[test]
    fn embed_examples() {
        let rel = parse_jordan("Y*X - X*Y + (1/2)*X^2", q()).unwrap();
        assert!(rel.is_zero());
        assert!(jordan_embed(&rel).is_zero());
        assert_eq!(jordan_embed(&AbstractJordan::gen_x(q())), j("z"));
        let y2 = AbstractJordan::gen_y(q()).pow(2);
        assert_eq!(jordan_embed(&y2), j("(1/4)*y^4"));
        let half_y2 = e("-(1/2)*y^2");
        assert_eq!(jordan_embed(&y2).into_element(), &half_y2 * &half_y2);
    }

    #[test]
    fn embed_is_multiplicative() {
        let u = parse_jordan("X^2*Y + 3*Y^2 - X", q()).unwrap();
        let v = parse_jordan("Y^3 + X*Y - 2", q()).unwrap();
        let lhs = jordan_embed(&u.mul(&v));
        let rhs = jordan_embed(&u).mul(&jordan_embed(&v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn abstract_relation_and_print() {
        let yx = AbstractJordan::gen_y(q()).mul(&AbstractJordan::gen_x(q()));
        assert_eq!(yx.to_string(), "X*Y - (1/2)*X^2");
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&j("y^2")), j("y^2 - z"));
        assert_eq!(eta(&j("z")), j("z"));
        assert_eq!(eta(&j("y^4")), j("y^4 - 2*z*y^2"));
        assert_eq!(eta_inv(&j("y^2 - z")), j("y^2"));
        assert_eq!(eta_inv(&j("z")), j("z"));
        assert_eq!(eta_inv(&j("1")), j("1"));
        let f = j("z^2*y^6 - 3*y^4 + z*y^2 + 5");
        assert_eq!(eta(&eta_inv(&f)), f);
        assert_eq!(eta_inv(&eta(&f)), f);
    }

    #[test]
    fn eta_commutation_rules() {
        let f = j("z*y^4 + 2*y^2 - z^3");
        let ef = eta(&f).into_element();
        for g in ["x", "z", "x*y"] {
            let g = e(g);
            assert_eq!(&g * f.as_element(), &ef * &g);
        }
    }

    #[test]
    fn nabla_examples() {
        assert_eq!(nabla(&j("z")), j("z"));
        assert!(nabla(&j("y^2")).is_zero());
        assert_eq!(nabla(&j("z*y^2")), j("z*y^2 - z^2"));
        let f = j("z*y^2");
        let y = e("y");
        let comm = &(&y * f.as_element()) - &(f.as_element() * &y);
        assert_eq!(comm, nabla(&f).as_element() * &e("x"));
    }

    #[test]
    fn nabla_commutation_rules() {
        let f = j("z^2*y^4 - y^2 + 3*z");
        let nf = nabla(&f).into_element();
        let fe = f.as_element();
        assert_eq!(&e("y") * fe, &(fe * &e("y")) + &(&nf * &e("x")));
        assert_eq!(&e("y^2") * fe, &(fe * &e("y^2")) + &(&nf * &e("z")));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_super(&e("x*y"));
        assert_eq!(
            (d.p.is_zero(), d.q.clone(), d.r.is_zero(), d.s.is_zero()),
            (true, j("1"), true, true)
        );
        let d = decompose_super(&e("x*z"));
        assert_eq!(d.r, j("z"));
        let d = decompose_super(&e("x*y^2"));
        assert_eq!(d.r, j("y^2 - z"));
        let b = e("3 + x*z*y^3 - z^2*y^5 + x*y^4 + y^2 - 2*x");
        assert_eq!(decompose_super(&b).recompose(), b);
    }

    fn check_product(f: &str, g: &str) -> Element {
        let (f, g) = (e(f), e(g));
        let hf = Homogeneous::from_element(&f).unwrap();
        let hg = Homogeneous::from_element(&g).unwrap();
        let out = homog_product(&hf, &hg).to_element();
        assert_eq!(out, &f * &g);
        out
    }

    #[test]
    fn homogeneous_product_examples() {
        assert!(check_product("x*y", "z - x*y").is_zero());
        assert!(check_product("x", "x").is_zero());
        assert_eq!(check_product("y", "y"), e("y^2"));
        check_product("z*y^2 + x*y", "y^4 - 2*z*x*y");
        check_product("y^3 + z*x", "x*y^2 - y");
        check_product("z + x*y^3", "3*x*z + y^3");
        check_product("x*y^2 + z^2*y", "y^2 - x*y");
    }

    #[test]
    fn kinds() {
        let even = Homogeneous::from_element(&e("z")).unwrap();
        let odd = Homogeneous::from_element(&e("y")).unwrap();
        assert_eq!(product_kind(&even, &odd), ProductKind::EvenOdd);
        assert_eq!(product_kind(&odd, &even), ProductKind::OddEven);
        assert!(Homogeneous::from_element(&e("z + y")).is_err());
    }
}
