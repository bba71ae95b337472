//! Center, supercenter, zero divisors, regularity and primeness probes.

use std::collections::BTreeMap;
use std::fmt;

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::jordan::{decompose_super, JordanElement};
use crate::linalg::null_space;
use crate::random;

fn elements_from(spec: FieldSpec, basis: &[Monomial], vectors: Vec<Vec<FieldElement>>) -> Vec<Element> {
    vectors
        .into_iter()
        .map(|v| Element::from_terms(spec, basis.iter().copied().zip(v)))
        .collect()
}

/// Solve for `b` in the span of `basis` with `constraint(b_m)` vanishing,
/// where `constraint` is linear and evaluated per basis monomial.
fn solve_linear(
    spec: FieldSpec,
    basis: &[Monomial],
    mut constraint: impl FnMut(&Element) -> Vec<Element>,
) -> Vec<Element> {
    let columns: Vec<BTreeMap<(usize, Monomial), FieldElement>> = basis
        .iter()
        .map(|m| {
            let images = constraint(&Element::monomial(spec, *m));
            images
                .iter()
                .enumerate()
                .flat_map(|(tag, e)| e.terms().map(move |(k, c)| ((tag, *k), c.clone())))
                .collect()
        })
        .collect();
    elements_from(spec, basis, null_space(spec, &columns))
}

/// Basis of the degree-`n` part of the center.
pub fn center_basis(n: u32, spec: FieldSpec) -> Vec<Element> {
    let x = Element::x(spec);
    let y = Element::y(spec);
    solve_linear(spec, &Monomial::of_degree(n), |b| {
        vec![b.commutator(&x), b.commutator(&y)]
    })
}

/// Basis of the degree-`n` part of the supercenter; the parity is `n mod 2`.
pub fn supercenter_basis(n: u32, spec: FieldSpec) -> Vec<Element> {
    let x = Element::x(spec);
    let y = Element::y(spec);
    let odd = n % 2 == 1;
    // f g - (-1)^(|f||g|) g f with g odd
    let supercomm = move |b: &Element, g: &Element| if odd { &(b * g) + &(g * b) } else { b.commutator(g) };
    solve_linear(spec, &Monomial::of_degree(n), |b| {
        vec![supercomm(b, &x), supercomm(b, &y)]
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZdReason {
    /// Even, in `J xy`.
    EvenInJxy,
    /// Even, in `J (z - xy)`.
    EvenInJZMinusXy,
    /// Odd with vanishing `y` component.
    OddFminusZero,
    /// Odd with `f- y^2 = -f+ z`.
    OddRelation,
    Regular,
}

impl ZdReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZdReason::EvenInJxy => "EvenInJxy",
            ZdReason::EvenInJZMinusXy => "EvenInJ(z-xy)",
            ZdReason::OddFminusZero => "OddFminusZero",
            ZdReason::OddRelation => "OddRelation",
            ZdReason::Regular => "Regular",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            ZdReason::EvenInJxy,
            ZdReason::EvenInJZMinusXy,
            ZdReason::OddFminusZero,
            ZdReason::OddRelation,
            ZdReason::Regular,
        ]
        .into_iter()
        .find(|r| r.as_str() == s)
    }
}

impl fmt::Display for ZdReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisorVerdict {
    pub is_zero_divisor: bool,
    pub reason: ZdReason,
    /// Nonzero `w` with `f * w = 0`; present iff `is_zero_divisor`.
    pub witness: Option<Element>,
}

fn check_homogeneous(f: &Element) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_even() && !f.is_odd() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    Ok(())
}

/// Decide whether a nonzero parity-homogeneous `f` is a zero divisor.
pub fn classify_zero_divisor(f: &Element) -> Result<ZeroDivisorVerdict> {
    check_homogeneous(f)?;
    let spec = f.spec();
    let d = decompose_super(f);
    let z = JordanElement::z(spec);
    let verdict = |reason: ZdReason, witness: Option<Element>| ZeroDivisorVerdict {
        is_zero_divisor: witness.is_some(),
        reason,
        witness,
    };
    if f.is_even() {
        let (plus, minus) = (d.p, d.q);
        let xy = Element::monomial(spec, Monomial::new(1, 0, 1));
        if plus.is_zero() {
            return Ok(verdict(ZdReason::EvenInJxy, Some(&Element::z(spec) - &xy)));
        }
        if plus == minus.mul(&z).neg() {
            return Ok(verdict(ZdReason::EvenInJZMinusXy, Some(xy)));
        }
    } else {
        let (plus, minus) = (d.r, d.s);
        if minus.is_zero() {
            return Ok(verdict(ZdReason::OddFminusZero, Some(f.clone())));
        }
        if minus.mul(&JordanElement::y2(spec)) == plus.mul(&z).neg() {
            return Ok(verdict(ZdReason::OddRelation, Some(f.clone())));
        }
    }
    Ok(verdict(ZdReason::Regular, None))
}

/// Membership in the set of homogeneous regular elements.
pub fn is_regular_homogeneous(f: &Element) -> Result<bool> {
    Ok(!classify_zero_divisor(f)?.is_zero_divisor)
}

fn annihilator(f: &Element, bound: u32, right: bool) -> Option<Element> {
    let spec = f.spec();
    let product = |m: &Element| if right { vec![f * m] } else { vec![m * f] };
    match f.homogeneous_degree() {
        // graded input: the annihilator is graded, search degree by degree
        Some(_) => (0..=bound).find_map(|n| solve_linear(spec, &Monomial::of_degree(n), product).into_iter().next()),
        None => solve_linear(spec, &Monomial::up_to_degree(bound), product)
            .into_iter()
            .next(),
    }
}

/// A nonzero `g` of degree at most `bound` with `f * g = 0`, by exact linear algebra.
pub fn brute_annihilator(f: &Element, bound: u32) -> Option<Element> {
    annihilator(f, bound, true)
}

/// A nonzero `g` of degree at most `bound` with `g * f = 0`.
pub fn brute_left_annihilator(f: &Element, bound: u32) -> Option<Element> {
    annihilator(f, bound, false)
}

/// Default witness-search bound for `f`.
pub fn default_bound(f: &Element) -> u32 {
    f.degree().unwrap_or(0) + 4
}

/// A basis monomial `m` of degree at most `bound` with `f m g != 0`.
///
/// Tries `1, x, y, z` first, then the remaining monomials by degree.
pub fn superprime_witness(f: &Element, g: &Element, bound: u32) -> Result<Monomial> {
    check_homogeneous(f)?;
    check_homogeneous(g)?;
    if f.spec() != g.spec() {
        return Err(Error::FieldMismatch(f.spec().label(), g.spec().label()));
    }
    let spec = f.spec();
    let first = [Monomial::ONE, Monomial::X, Monomial::Y, Monomial::Z];
    let rest = Monomial::up_to_degree(bound).into_iter().filter(|m| !first.contains(m));
    first
        .into_iter()
        .filter(|m| m.degree() <= bound)
        .chain(rest)
        .find(|m| !(&(f * &Element::monomial(spec, *m)) * g).is_zero())
        .ok_or(Error::NoWitness(bound))
}

/// Checks `xy * h * (z - xy) = 0` for every even basis monomial `h` of degree at most `bound`.
pub fn notprime_probe(bound: u32, spec: FieldSpec) -> bool {
    let xy = Element::monomial(spec, Monomial::new(1, 0, 1));
    let right = &Element::z(spec) - &xy;
    Monomial::up_to_degree(bound)
        .into_iter()
        .filter(|m| m.parity() == 0)
        .all(|h| (&(&xy * &Element::monomial(spec, h)) * &right).is_zero())
}

/// An even basis monomial `h` of degree at most `bound` with `f0 h f0 != 0`.
pub fn semiprime_witness(f0: &Element, bound: u32) -> Result<Monomial> {
    if f0.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f0.is_even() {
        return Err(Error::OddInput);
    }
    let spec = f0.spec();
    Monomial::up_to_degree(bound)
        .into_iter()
        .filter(|m| m.parity() == 0)
        .find(|h| !(&(f0 * &Element::monomial(spec, *h)) * f0).is_zero())
        .ok_or(Error::NoWitness(bound))
}

/// Outcome of a randomized probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub samples: usize,
    /// Inputs for which no witness was found.
    pub failures: Vec<(Element, Element)>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random homogeneous pairs `(f, g)` of degree at most `max_degree`, each
/// searched for a witness monomial of degree at most `bound`.
pub fn superprime_probe(spec: FieldSpec, samples: usize, max_degree: u32, bound: u32, seed: u64) -> ProbeReport {
    let mut rng = random::seeded(seed);
    let mut failures = Vec::new();
    for i in 0..samples {
        let f = random::parity_homogeneous(&mut rng, spec, max_degree, (i % 2) as u32, 3);
        let g = random::parity_homogeneous(&mut rng, spec, max_degree, ((i / 2) % 2) as u32, 3);
        if superprime_witness(&f, &g, bound).is_err() {
            failures.push((f, g));
        }
    }
    ProbeReport { samples, failures }
}

/// Random nonzero even `f0` of degree at most `max_degree`, each searched for a semiprime witness.
pub fn semiprime_probe(spec: FieldSpec, samples: usize, max_degree: u32, bound: u32, seed: u64) -> ProbeReport {
    let mut rng = random::seeded(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let f = random::parity_homogeneous(&mut rng, spec, max_degree, 0, 3);
        if semiprime_witness(&f, bound).is_err() {
            failures.push((f.clone(), f));
        }
    }
    ProbeReport { samples, failures }
}

/// A pair `(b', f')` with `f b' = b f'` and `f'` homogeneous regular, searched
/// over degrees `deg b + k`, `deg f + k` for `k <= bound`.
///
/// `f` and `b` must be graded (single total degree).
pub fn ore_witness(f: &Element, b: &Element, bound: u32) -> Result<Option<(Element, Element)>> {
    if !is_regular_homogeneous(f)? {
        return Err(Error::NotHomogeneous(format!("{f} is not regular")));
    }
    let spec = f.spec();
    let df = f
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(f.to_string()))?;
    if b.is_zero() {
        return Ok(Some((Element::zero(spec), Element::one(spec))));
    }
    let db = b
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(b.to_string()))?;
    for k in 0..=bound {
        let left = Monomial::of_degree(db + k);
        let right = Monomial::of_degree(df + k);
        let columns: Vec<BTreeMap<Monomial, FieldElement>> = left
            .iter()
            .map(|m| f * &Element::monomial(spec, *m))
            .chain(right.iter().map(|m| -(b * &Element::monomial(spec, *m))))
            .map(|e| e.terms().map(|(m, c)| (*m, c.clone())).collect())
            .collect();
        for v in null_space(spec, &columns) {
            let (vl, vr) = v.split_at(left.len());
            let b_prime = Element::from_terms(spec, left.iter().copied().zip(vl.iter().cloned()));
            let f_prime = Element::from_terms(spec, right.iter().copied().zip(vr.iter().cloned()));
            if !f_prime.is_zero() && is_regular_homogeneous(&f_prime)? {
                return Ok(Some((b_prime, f_prime)));
            }
        }
    }
    Ok(None)
}
