//! JSON records for elements, tensors, verdicts and automorphisms.
//!
//! Coefficients are strings: `"n"` or `"n/d"` over Q, residues over F_p.
//! Every record converts back to the value it was built from.

use serde::{Deserialize, Serialize};

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::hopf::{LElement, TensorElement};
use crate::jordan::{AbstractJordan, SuperDecomposition};
use crate::maps::{JordanAut, SuperAut};
use crate::poly::Poly;
use crate::structure::{ZdReason, ZeroDivisorVerdict};

fn coeff_string(c: &FieldElement) -> String {
    c.to_string()
}

fn parse_coeff(spec: FieldSpec, s: &str) -> Result<FieldElement> {
    spec.parse_scalar(s)
}

fn monomial(a: u8, b: u32, c: u32) -> Result<Monomial> {
    Monomial::try_new(a, b, c).ok_or_else(|| Error::Schema(format!("exponent a = {a} must be 0 or 1")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub a: u8,
    pub b: u32,
    pub c: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub field: String,
    pub terms: Vec<TermRecord>,
}

impl ElementRecord {
    pub fn from_element(u: &Element) -> Self {
        ElementRecord {
            field: u.spec().label(),
            terms: u
                .terms()
                .map(|(m, c)| TermRecord {
                    a: m.a(),
                    b: m.b(),
                    c: m.c(),
                    coeff: coeff_string(c),
                })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<Element> {
        let spec = FieldSpec::from_label(&self.field)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((monomial(t.a, t.b, t.c)?, parse_coeff(spec, &t.coeff)?));
        }
        Ok(Element::from_terms(spec, terms))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub a: u8,
    pub b: u32,
    pub c: u32,
}

impl MonomialRecord {
    pub fn from_monomial(m: &Monomial) -> Self {
        MonomialRecord {
            a: m.a(),
            b: m.b(),
            c: m.c(),
        }
    }

    pub fn to_monomial(&self) -> Result<Monomial> {
        monomial(self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermRecord {
    pub m1: MonomialRecord,
    pub m2: MonomialRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m3: Option<MonomialRecord>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorRecord {
    pub field: String,
    pub rank: usize,
    pub terms: Vec<TensorTermRecord>,
}

impl TensorRecord {
    pub fn from_tensor(t: &TensorElement) -> Self {
        let terms = t
            .terms()
            .map(|(k, c)| {
                let f = k.factors();
                TensorTermRecord {
                    m1: MonomialRecord::from_monomial(&f[0]),
                    m2: MonomialRecord::from_monomial(&f[1]),
                    m3: f.get(2).map(MonomialRecord::from_monomial),
                    coeff: coeff_string(c),
                }
            })
            .collect();
        TensorRecord {
            field: t.spec().label(),
            rank: t.rank(),
            terms,
        }
    }

    pub fn to_tensor(&self) -> Result<TensorElement> {
        let spec = FieldSpec::from_label(&self.field)?;
        if self.rank != 2 && self.rank != 3 {
            return Err(Error::Schema(format!("tensor rank {} unsupported", self.rank)));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut factors = vec![t.m1.to_monomial()?, t.m2.to_monomial()?];
            if let Some(m3) = &t.m3 {
                factors.push(m3.to_monomial()?);
            }
            terms.push((factors, parse_coeff(spec, &t.coeff)?));
        }
        TensorElement::from_terms(spec, self.rank, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub is_zero_divisor: bool,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ElementRecord>,
}

impl VerdictRecord {
    pub fn from_verdict(v: &ZeroDivisorVerdict) -> Self {
        VerdictRecord {
            is_zero_divisor: v.is_zero_divisor,
            reason: v.reason.to_string(),
            witness: v.witness.as_ref().map(ElementRecord::from_element),
        }
    }

    pub fn to_verdict(&self) -> Result<ZeroDivisorVerdict> {
        let reason =
            ZdReason::parse(&self.reason).ok_or_else(|| Error::Schema(format!("unknown reason {:?}", self.reason)))?;
        let witness = self.witness.as_ref().map(ElementRecord::to_element).transpose()?;
        if witness.is_some() != self.is_zero_divisor {
            return Err(Error::Schema("witness must be present iff is_zero_divisor".into()));
        }
        Ok(ZeroDivisorVerdict {
            is_zero_divisor: self.is_zero_divisor,
            reason,
            witness,
        })
    }
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(coeff_string).collect()
}

fn poly_from_strings(spec: FieldSpec, coeffs: &[String]) -> Result<Poly> {
    let cs = coeffs
        .iter()
        .map(|c| parse_coeff(spec, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(spec, cs))
}

/// `{mu, s}` with `s` listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRecord {
    pub mu: String,
    pub s: Vec<String>,
}

impl AutomorphismRecord {
    pub fn from_aut(sigma: &SuperAut) -> Self {
        AutomorphismRecord {
            mu: coeff_string(sigma.mu()),
            s: poly_strings(sigma.s()),
        }
    }

    pub fn to_aut(&self, spec: FieldSpec) -> Result<SuperAut> {
        SuperAut::new(parse_coeff(spec, &self.mu)?, poly_from_strings(spec, &self.s)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanAutRecord {
    pub alpha: String,
    pub p: Vec<String>,
}

impl JordanAutRecord {
    pub fn from_aut(tau: &JordanAut) -> Self {
        JordanAutRecord {
            alpha: coeff_string(tau.alpha()),
            p: poly_strings(tau.p()),
        }
    }

    pub fn to_aut(&self, spec: FieldSpec) -> Result<JordanAut> {
        JordanAut::new(parse_coeff(spec, &self.alpha)?, poly_from_strings(spec, &self.p)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanTermRecord {
    pub i: u32,
    pub j: u32,
    pub coeff: String,
}

pub fn abstract_jordan_records(u: &AbstractJordan) -> Vec<JordanTermRecord> {
    u.terms()
        .map(|(&(i, j), c)| JordanTermRecord {
            i,
            j,
            coeff: coeff_string(c),
        })
        .collect()
}

pub fn abstract_jordan_from_records(spec: FieldSpec, records: &[JordanTermRecord]) -> Result<AbstractJordan> {
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        terms.push(((r.i, r.j), parse_coeff(spec, &r.coeff)?));
    }
    Ok(AbstractJordan::from_terms(spec, terms))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub p: ElementRecord,
    pub q: ElementRecord,
    pub r: ElementRecord,
    pub s: ElementRecord,
}

impl DecompositionRecord {
    pub fn from_decomposition(d: &SuperDecomposition) -> Self {
        DecompositionRecord {
            p: ElementRecord::from_element(d.p.as_element()),
            q: ElementRecord::from_element(d.q.as_element()),
            r: ElementRecord::from_element(d.r.as_element()),
            s: ElementRecord::from_element(d.s.as_element()),
        }
    }
}

/// `{field, degree, basis}` for solver output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub field: String,
    pub degree: u32,
    pub basis: Vec<ElementRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRecord {
    pub field: String,
    pub value: String,
}

/// An element of `L`, coefficients of `eta_L^i` from `i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LElementRecord {
    pub field: String,
    pub eta_l: Vec<String>,
}

impl LElementRecord {
    pub fn from_l(u: &LElement) -> Self {
        LElementRecord {
            field: u.poly().spec().label(),
            eta_l: poly_strings(u.poly()),
        }
    }

    pub fn to_l(&self) -> Result<LElement> {
        let spec = FieldSpec::from_label(&self.field)?;
        Ok(LElement::new(poly_from_strings(spec, &self.eta_l)?))
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records always serialize")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}
