//! Automorphisms and derivations.
//!
//! Every super-automorphism is `sigma(s, mu)`: `x -> mu x`, `y -> mu y + s(z) x`.

use std::collections::HashMap;
use std::fmt;

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::jordan::{decompose_super, JordanElement};
use crate::poly::Poly;

/// The automorphism `x -> mu x`, `y -> mu y + s(z) x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAut {
    mu: FieldElement,
    s: Poly,
}

fn relation_defects(x: &Element, y: &Element) -> [Element; 2] {
    let z = &(x * y) + &(y * x);
    [x * x, &(&(y * &z) - &(&z * y)) - &(x * &z)]
}

impl SuperAut {
    /// Validates `mu != 0` and that the defining relations are preserved.
    pub fn new(mu: FieldElement, s: Poly) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::InvalidAutomorphism("mu must be nonzero".into()));
        }
        if s.spec() != mu.spec() {
            return Err(Error::FieldMismatch(mu.spec().label(), s.spec().label()));
        }
        let sigma = SuperAut { mu, s };
        if relation_defects(&sigma.image_x(), &sigma.image_y())
            .iter()
            .any(|d| !d.is_zero())
        {
            return Err(Error::InvalidAutomorphism("defining relations not preserved".into()));
        }
        Ok(sigma)
    }

    pub fn identity(spec: FieldSpec) -> Self {
        SuperAut {
            mu: spec.one(),
            s: Poly::zero(spec),
        }
    }

    /// The group generator `g = sigma(1, -1)` of the realization.
    pub fn g(spec: FieldSpec) -> Self {
        SuperAut {
            mu: spec.int(-1),
            s: Poly::constant(spec.one()),
        }
    }

    pub fn mu(&self) -> &FieldElement {
        &self.mu
    }

    pub fn s(&self) -> &Poly {
        &self.s
    }

    pub fn spec(&self) -> FieldSpec {
        self.mu.spec()
    }

    pub fn image_x(&self) -> Element {
        Element::x(self.spec()).scale(&self.mu)
    }

    pub fn image_y(&self) -> Element {
        &Element::y(self.spec()).scale(&self.mu) + &(&Element::from_poly_z(&self.s) * &Element::x(self.spec()))
    }

    /// `mu^2 z`
    pub fn image_z(&self) -> Element {
        Element::z(self.spec()).scale(&(&self.mu * &self.mu))
    }

    pub fn apply(&self, u: &Element) -> Element {
        apply_aut(self, u)
    }

    /// `t(z) = -mu^-2 s(mu^-2 z)`, `1/mu`
    pub fn inverse(&self) -> SuperAut {
        let inv = self.mu.inv().expect("mu nonzero");
        let inv2 = &inv * &inv;
        SuperAut {
            mu: inv,
            s: self.s.rescale(&inv2).scale(&-&inv2),
        }
    }

    pub fn pow(&self, n: i64) -> SuperAut {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = SuperAut::identity(self.spec());
        for _ in 0..n.unsigned_abs() {
            acc = compose_aut(&acc, &base).expect("same field");
        }
        acc
    }
}

impl fmt::Display for SuperAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma(s = {}, mu = {})", self.s, self.mu)
    }
}

/// Image of `u` under `sigma`.
pub fn apply_aut(sigma: &SuperAut, u: &Element) -> Element {
    let spec = u.spec();
    let mu2 = &sigma.mu * &sigma.mu;
    let sy = sigma.image_y();
    let mut y_powers: HashMap<u32, Element> = HashMap::new();
    let mut out = Element::zero(spec);
    for (m, c) in u.terms() {
        let yc = y_powers.entry(m.c()).or_insert_with(|| sy.pow(m.c())).clone();
        let scale = &(c * &sigma.mu.pow(m.a() as u64)) * &mu2.pow(m.b() as u64);
        let head = Element::term(scale, Monomial::new(m.a(), m.b(), 0));
        out = &out + &(&head * &yc);
    }
    out
}

/// `sigma ∘ sigma'` (apply `sigma'` first): `sigma(s'', mu mu')` with
/// `s''(z) = mu' s(z) + mu s'(mu^2 z)`.
pub fn compose_aut(sigma: &SuperAut, sigma2: &SuperAut) -> Result<SuperAut> {
    if sigma.spec() != sigma2.spec() {
        return Err(Error::FieldMismatch(sigma.spec().label(), sigma2.spec().label()));
    }
    let mu2 = &sigma.mu * &sigma.mu;
    let s = sigma.s.scale(&sigma2.mu).add(&sigma2.s.rescale(&mu2).scale(&sigma.mu));
    Ok(SuperAut {
        mu: &sigma.mu * &sigma2.mu,
        s,
    })
}

/// The automorphism `z -> alpha z`, `y^2 -> alpha y^2 + p(z)` of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanAut {
    alpha: FieldElement,
    p: Poly,
}

impl JordanAut {
    pub fn new(alpha: FieldElement, p: Poly) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidAutomorphism("alpha must be nonzero".into()));
        }
        if p.spec() != alpha.spec() {
            return Err(Error::FieldMismatch(alpha.spec().label(), p.spec().label()));
        }
        Ok(JordanAut { alpha, p })
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn spec(&self) -> FieldSpec {
        self.alpha.spec()
    }

    pub fn apply(&self, f: &JordanElement) -> JordanElement {
        let spec = f.spec();
        let image_y2 = JordanElement::y2(spec)
            .scale(&self.alpha)
            .add(&JordanElement::from_poly_z(&self.p));
        let mut power = JordanElement::one(spec);
        let mut out = JordanElement::zero(spec);
        for a in f.coefficients() {
            out = out.add(&JordanElement::from_poly_z(&a.rescale(&self.alpha)).mul(&power));
            power = power.mul(&image_y2);
        }
        out
    }

    /// `self ∘ other`: `alpha'' = alpha alpha'`, `p'' = alpha' p(z) + p'(alpha z)`.
    pub fn compose(&self, other: &JordanAut) -> Result<JordanAut> {
        if self.spec() != other.spec() {
            return Err(Error::FieldMismatch(self.spec().label(), other.spec().label()));
        }
        Ok(JordanAut {
            alpha: &self.alpha * &other.alpha,
            p: self.p.scale(&other.alpha).add(&other.p.rescale(&self.alpha)),
        })
    }
}

impl fmt::Display for JordanAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau(p = {}, alpha = {})", self.p, self.alpha)
    }
}

/// Restriction to `J`: `tau(mu z s(z), mu^2)`.
pub fn restrict_to_jordan(sigma: &SuperAut) -> JordanAut {
    JordanAut {
        alpha: &sigma.mu * &sigma.mu,
        p: sigma.s.shift(1).scale(&sigma.mu),
    }
}

/// The involution of the even part fixing `J` with `xy -> z - xy`.
pub fn apply_omega(u: &Element) -> Result<Element> {
    if !u.is_even() {
        return Err(Error::OddInput);
    }
    let spec = u.spec();
    let d = decompose_super(u);
    let z_minus_xy = Element::from_int_terms(spec, &[(0, 1, 0, 1), (1, 0, 1, -1)]);
    Ok(d.p.as_element() + &(d.q.as_element() * &z_minus_xy))
}

/// A derivation fixed by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDerivation {
    on_x: Element,
    on_y: Element,
}

impl GenDerivation {
    /// Validates that the Leibniz extension kills the defining relations.
    pub fn new(on_x: Element, on_y: Element) -> Result<Self> {
        if on_x.spec() != on_y.spec() {
            return Err(Error::FieldMismatch(on_x.spec().label(), on_y.spec().label()));
        }
        let delta = GenDerivation { on_x, on_y };
        let spec = delta.spec();
        let x = Element::x(spec);
        let y = Element::y(spec);
        let z = Element::z(spec);
        let dz = delta.on_z();
        let checks = [
            &(&delta.on_x * &x) + &(&x * &delta.on_x),
            &(&(&(&delta.on_y * &z) + &(&y * &dz)) - &(&(&dz * &y) + &(&z * &delta.on_y)))
                - &(&(&delta.on_x * &z) + &(&x * &dz)),
        ];
        if checks.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidDerivation("defining relations not annihilated".into()));
        }
        Ok(delta)
    }

    /// `c`: `x -> 0`, `y -> x`.
    pub fn c(spec: FieldSpec) -> Self {
        Self::scaled(&Poly::constant(spec.one()))
    }

    /// `s c`: `x -> 0`, `y -> s(z) x`.
    pub fn scaled(s: &Poly) -> Self {
        let spec = s.spec();
        GenDerivation {
            on_x: Element::zero(spec),
            on_y: &Element::from_poly_z(s) * &Element::x(spec),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.on_x.spec()
    }

    pub fn on_x(&self) -> &Element {
        &self.on_x
    }

    pub fn on_y(&self) -> &Element {
        &self.on_y
    }

    /// `delta(z) = delta(x) y + x delta(y) + delta(y) x + y delta(x)`
    pub fn on_z(&self) -> Element {
        let spec = self.spec();
        let x = Element::x(spec);
        let y = Element::y(spec);
        &(&(&self.on_x * &y) + &(&x * &self.on_y)) + &(&(&self.on_y * &x) + &(&y * &self.on_x))
    }

    pub fn apply(&self, u: &Element) -> Element {
        apply_derivation(self, u)
    }
}

/// `delta(g^n) = sum_k g^k delta(g) g^(n-1-k)`
fn leibniz_power(g: &Element, dg: &Element, n: u32) -> Element {
    let mut out = Element::zero(g.spec());
    for k in 0..n {
        out = &out + &(&(&g.pow(k) * dg) * &g.pow(n - 1 - k));
    }
    out
}

/// Leibniz extension of `delta` over `x^a z^b y^c`.
pub fn apply_derivation(delta: &GenDerivation, u: &Element) -> Element {
    let spec = u.spec();
    let (x, y, z) = (Element::x(spec), Element::y(spec), Element::z(spec));
    let dz = delta.on_z();
    let mut out = Element::zero(spec);
    for (m, c) in u.terms() {
        let xa = x.pow(m.a() as u32);
        let zb = z.pow(m.b());
        let yc = y.pow(m.c());
        let parts = [
            &(&leibniz_power(&x, &delta.on_x, m.a() as u32) * &zb) * &yc,
            &(&xa * &leibniz_power(&z, &dz, m.b())) * &yc,
            &(&xa * &zb) * &leibniz_power(&y, &delta.on_y, m.c()),
        ];
        for part in parts {
            out = &out + &part.scale(c);
        }
    }
    out
}

/// `exp(s c)(u) = sum_k (s c)^k(u) / k!`; characteristic 0 only.
pub fn exp_derivation(s: &Poly, u: &Element) -> Result<Element> {
    let spec = u.spec();
    if !spec.is_rational() {
        return Err(Error::RequiresCharZero);
    }
    if s.spec() != spec {
        return Err(Error::FieldMismatch(s.spec().label(), spec.label()));
    }
    let delta = GenDerivation::scaled(s);
    let mut term = u.clone();
    let mut out = Element::zero(spec);
    let mut k = 0i64;
    while !term.is_zero() {
        out = &out + &term;
        k += 1;
        term = apply_derivation(&delta, &term).scale(&spec.ratio(1, k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_element;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn e(t: &str) -> Element {
        parse_element(t, q()).unwrap()
    }

    fn sigma(s: &[i64], mu: i64) -> SuperAut {
        SuperAut::new(q().int(mu), Poly::from_ints(q(), s)).unwrap()
    }

    #[test]
    fn apply_examples() {
        let mu = 3;
        assert_eq!(sigma(&[], mu).apply(&e("z")), e("9*z"));
        let s = sigma(&[1, -2], mu);
        assert_eq!(s.apply(&e("x*y")), e("9*x*y"));
        // mu^2 y^2 + mu z s(z)
        assert_eq!(s.apply(&e("y^2")), e("9*y^2 + 3*z*(1 - 2*z)"));
        assert_eq!(s.apply(&e("z")), s.image_z());
    }

    #[test]
    fn invalid_data_rejected() {
        assert!(SuperAut::new(q().zero(), Poly::zero(q())).is_err());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(SuperAut::new(q().one(), Poly::zero(f3)).is_err());
        assert!(GenDerivation::new(e("0"), e("y")).is_err());
        assert!(GenDerivation::new(e("0"), e("x")).is_ok());
    }

    #[test]
    fn compose_examples() {
        let s = sigma(&[4, 1], 2);
        assert_eq!(compose_aut(&s, &SuperAut::identity(q())).unwrap(), s);
        let composed = compose_aut(&sigma(&[0, 1], 2), &sigma(&[1], 3)).unwrap();
        assert_eq!(composed, sigma(&[2, 3], 6));
        assert_eq!(composed.to_string(), "sigma(s = 2 + 3*z, mu = 6)");
        let inv = s.inverse();
        assert_eq!(compose_aut(&s, &inv).unwrap(), SuperAut::identity(q()));
        assert_eq!(compose_aut(&inv, &s).unwrap(), SuperAut::identity(q()));
    }

    #[test]
    fn compose_matches_functional_composition() {
        let a = sigma(&[0, 1], 2);
        let b = sigma(&[1], 3);
        let ab = compose_aut(&a, &b).unwrap();
        for g in ["x", "y", "y^2*x + z^2"] {
            assert_eq!(ab.apply(&e(g)), a.apply(&b.apply(&e(g))));
        }
    }

    #[test]
    fn restriction_examples() {
        let id = JordanAut::new(q().one(), Poly::zero(q())).unwrap();
        assert_eq!(restrict_to_jordan(&sigma(&[], -1)), id);
        let t = JordanAut::new(q().one(), Poly::from_ints(q(), &[0, 1])).unwrap();
        assert_eq!(restrict_to_jordan(&sigma(&[1], 1)), t);
        let t = JordanAut::new(q().int(4), Poly::zero(q())).unwrap();
        assert_eq!(restrict_to_jordan(&sigma(&[], 2)), t);
    }

    #[test]
    fn restriction_agrees_on_jordan() {
        let s = sigma(&[2, -1], 3);
        let tau = restrict_to_jordan(&s);
        let f = JordanElement::new(e("z*y^4 - 2*y^2 + z^3")).unwrap();
        assert_eq!(tau.apply(&f).into_element(), s.apply(f.as_element()));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(apply_omega(&e("x*y")).unwrap(), e("z - x*y"));
        assert_eq!(apply_omega(&e("z")).unwrap(), e("z"));
        assert_eq!(apply_omega(&e("y^2")).unwrap(), e("y^2"));
        let zxy = e("z*x*y");
        assert_eq!(zxy, e("(x*y)^2"));
        assert_eq!(apply_omega(&zxy).unwrap(), e("(z - x*y)^2"));
        assert_eq!(apply_omega(&e("x")).unwrap_err(), Error::OddInput);
    }

    #[test]
    fn derivation_examples() {
        let c = GenDerivation::c(q());
        assert!(c.apply(&e("z")).is_zero());
        assert_eq!(c.apply(&e("y^2")), e("z"));
        assert!(c.apply(&e("x")).is_zero());
        assert!(c.on_z().is_zero());
    }

    #[test]
    fn exp_examples() {
        let s = Poly::from_ints(q(), &[1, 2]);
        let se = Element::from_poly_z(&s);
        assert_eq!(exp_derivation(&s, &e("y")).unwrap(), &e("y") + &(&se * &e("x")));
        assert_eq!(exp_derivation(&s, &e("x")).unwrap(), e("x"));
        assert_eq!(exp_derivation(&s, &e("y^2")).unwrap(), &e("y^2") + &(&e("z") * &se));
        let u = e("x*z*y^3 - y^4 + 2*z");
        let sigma = SuperAut::new(q().one(), s.clone()).unwrap();
        assert_eq!(exp_derivation(&s, &u).unwrap(), sigma.apply(&u));
        let f3 = FieldSpec::prime(3).unwrap();
        let err = exp_derivation(&Poly::zero(f3), &Element::y(f3)).unwrap_err();
        assert_eq!(err, Error::RequiresCharZero);
    }

    #[test]
    fn g_powers() {
        let g = SuperAut::g(q());
        assert_eq!(g.apply(&e("x")), e("-x"));
        assert_eq!(g.apply(&e("y")), e("-y + x"));
        assert_eq!(g.pow(2).apply(&e("y")), e("y - 2*x"));
        assert_eq!(g.pow(-1).apply(&g.apply(&e("y"))), e("y"));
    }
}
