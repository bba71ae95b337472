//! Word rewriting in the free algebra on `x, y, z`.
//!
//! Rules: `yx -> z - xy`, `yz -> zy + xz`, `zx -> xz`, `xx -> 0`. Words with
//! no reducible pair are exactly `x^a z^b y^c` with `a <= 1`. This is an
//! independent route to the normal form, used to cross-check the Ore engine.

use std::collections::BTreeMap;

use super::element::Element;
use super::monomial::Monomial;
use crate::field::{FieldElement, FieldSpec};

const X: u8 = 0;
const Y: u8 = 1;
const Z: u8 = 2;

pub fn word_of(m: &Monomial) -> Vec<u8> {
    let mut w = vec![X; m.a() as usize];
    w.extend(std::iter::repeat_n(Z, m.b() as usize));
    w.extend(std::iter::repeat_n(Y, m.c() as usize));
    w
}

/// Normal form of a word (letters 0 = x, 1 = y, 2 = z).
pub fn normalize_word(spec: FieldSpec, word: &[u8]) -> Element {
    let mut pending: BTreeMap<Vec<u8>, FieldElement> = BTreeMap::new();
    pending.insert(word.to_vec(), spec.one());
    let mut out = Element::zero(spec);

    while let Some((w, c)) = pending.pop_first() {
        let Some(i) = w.windows(2).position(|p| reducible(p[0], p[1])) else {
            out.add_term(monomial_of(&w), c);
            continue;
        };
        let (head, tail) = (&w[..i], &w[i + 2..]);
        let splice = |mid: &[u8]| -> Vec<u8> { head.iter().chain(mid).chain(tail).copied().collect() };
        let replacements: Vec<(Vec<u8>, FieldElement)> = match (w[i], w[i + 1]) {
            (Y, X) => vec![(splice(&[Z]), c.clone()), (splice(&[X, Y]), -&c)],
            (Y, Z) => vec![(splice(&[Z, Y]), c.clone()), (splice(&[X, Z]), c.clone())],
            (Z, X) => vec![(splice(&[X, Z]), c.clone())],
            (X, X) => vec![],
            _ => unreachable!(),
        };
        for (nw, nc) in replacements {
            let entry = pending.entry(nw).or_insert_with(|| spec.zero());
            *entry = &*entry + &nc;
        }
        pending.retain(|_, v| !v.is_zero());
    }
    out
}

/// Product of two normal-form elements computed by word rewriting.
pub fn product(u: &Element, v: &Element) -> Element {
    let spec = u.spec();
    let mut out = Element::zero(spec);
    for (m1, c1) in u.terms() {
        for (m2, c2) in v.terms() {
            let mut w = word_of(m1);
            w.extend(word_of(m2));
            out = &out + &normalize_word(spec, &w).scale(&(c1 * c2));
        }
    }
    out
}

fn reducible(a: u8, b: u8) -> bool {
    matches!((a, b), (Y, X) | (Y, Z) | (Z, X) | (X, X))
}

fn monomial_of(w: &[u8]) -> Monomial {
    let a = w.iter().filter(|&&l| l == X).count() as u8;
    let b = w.iter().filter(|&&l| l == Z).count() as u32;
    let c = w.iter().filter(|&&l| l == Y).count() as u32;
    Monomial::new(a, b, c)
}
