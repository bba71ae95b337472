//! Seeded generators for random elements, used by probes, tests and examples.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::balgebra::{Element, Monomial};
use crate::field::{FieldElement, FieldSpec};
use crate::jordan::JordanElement;
use crate::poly::Poly;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small scalars: `n/d` with `|n| <= 5`, `d <= 3` over Q; uniform residues over F_p.
pub fn scalar(rng: &mut impl Rng, spec: FieldSpec) -> FieldElement {
    match spec.modulus() {
        Some(p) => spec.int(rng.gen_range(0..p) as i64),
        None => {
            let n = rng.gen_range(-5..=5);
            let d = *[1, 1, 1, 2, 3].choose(rng).unwrap();
            spec.ratio(n, d).unwrap()
        }
    }
}

pub fn nonzero_scalar(rng: &mut impl Rng, spec: FieldSpec) -> FieldElement {
    loop {
        let c = scalar(rng, spec);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn poly(rng: &mut impl Rng, spec: FieldSpec, max_degree: usize) -> Poly {
    let len = rng.gen_range(0..=max_degree + 1);
    Poly::from_coeffs(spec, (0..len).map(|_| scalar(rng, spec)).collect())
}

fn combination(rng: &mut impl Rng, spec: FieldSpec, pool: &[Monomial], max_terms: usize) -> Element {
    if pool.is_empty() {
        return Element::zero(spec);
    }
    let n = rng.gen_range(1..=max_terms.max(1));
    Element::from_terms(spec, (0..n).map(|_| (*pool.choose(rng).unwrap(), scalar(rng, spec))))
}

/// Up to `max_terms` random terms of degree at most `max_degree`; may be zero.
pub fn element(rng: &mut impl Rng, spec: FieldSpec, max_degree: u32, max_terms: usize) -> Element {
    combination(rng, spec, &Monomial::up_to_degree(max_degree), max_terms)
}

pub fn nonzero_element(rng: &mut impl Rng, spec: FieldSpec, max_degree: u32, max_terms: usize) -> Element {
    loop {
        let e = element(rng, spec, max_degree, max_terms);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Nonzero element with every term of the given parity and degree at most `max_degree`.
pub fn parity_homogeneous(
    rng: &mut impl Rng,
    spec: FieldSpec,
    max_degree: u32,
    parity: u32,
    max_terms: usize,
) -> Element {
    let pool: Vec<Monomial> = Monomial::up_to_degree(max_degree)
        .into_iter()
        .filter(|m| m.parity() == parity)
        .collect();
    loop {
        let e = combination(rng, spec, &pool, max_terms);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Nonzero element of total degree exactly `degree`.
pub fn graded(rng: &mut impl Rng, spec: FieldSpec, degree: u32, max_terms: usize) -> Element {
    let pool = Monomial::of_degree(degree);
    loop {
        let e = combination(rng, spec, &pool, max_terms);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn jordan(rng: &mut impl Rng, spec: FieldSpec, max_degree: u32, max_terms: usize) -> JordanElement {
    let pool: Vec<Monomial> = Monomial::up_to_degree(max_degree)
        .into_iter()
        .filter(|m| m.a() == 0 && m.c() % 2 == 0)
        .collect();
    JordanElement::new(combination(rng, spec, &pool, max_terms)).expect("pool lies in J")
}

/// A nonzero parity-homogeneous element drawn from one of the four zero-divisor
/// families: `h*xy`, `h*(xy - z)`, `h*x`, and `-h(y^2 - z)x + h z y`.
pub fn zero_divisor(rng: &mut impl Rng, spec: FieldSpec, max_degree: u32) -> Element {
    let xy = Element::monomial(spec, Monomial::new(1, 0, 1));
    let x = Element::x(spec);
    let z = Element::z(spec);
    loop {
        let family = rng.gen_range(0..4u32);
        let h_max = match family {
            0..=2 => max_degree.saturating_sub(2),
            _ => max_degree.saturating_sub(3),
        };
        let h = jordan(rng, spec, h_max, 3).into_element();
        let f = match family {
            0 => &h * &xy,
            1 => &h * &(&xy - &z),
            2 => &h * &x,
            _ => {
                let y2z = Element::from_int_terms(spec, &[(0, 0, 2, 1), (0, 1, 0, -1)]);
                &(&h * &Element::from_int_terms(spec, &[(0, 1, 1, 1)])) - &(&(&h * &y2z) * &x)
            }
        };
        if !f.is_zero() {
            return f;
        }
    }
}
