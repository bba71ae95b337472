//! Braided Hopf structure: the `Z`-action, braiding, braided tensor products,
//! coproduct and counit, primitives, the Nichols quotient and the projection to `L`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::null_space;
use crate::maps::SuperAut;
use crate::poly::Poly;

/// Action of `g^n`, where `g = sigma(1, -1)`: `g.x = -x`, `g.y = -y + x`.
pub fn g_action(n: i64, u: &Element) -> Element {
    if n == 0 {
        return u.clone();
    }
    SuperAut::g(u.spec()).pow(n).apply(u)
}

/// A basis tensor `m1 (x) m2 (x) ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorKey(Vec<Monomial>);

impl TensorKey {
    pub fn new(factors: Vec<Monomial>) -> Self {
        TensorKey(factors)
    }

    pub fn factors(&self) -> &[Monomial] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(Monomial::degree).sum()
    }

    fn merged(&self) -> (u32, u32, u32) {
        self.0
            .iter()
            .fold((0, 0, 0), |(a, b, c), m| (a + m.a() as u32, b + m.b(), c + m.c()))
    }
}

// Total degree, then the merged exponents, then factor by factor with larger
// factors first. Gives `z(x)1 + 1(x)z + x(x)x`.
impl Ord for TensorKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.merged().cmp(&other.merged()))
            .then_with(|| {
                for (l, r) in self.0.iter().zip(&other.0) {
                    let ord = r.cmp(l);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                self.0.len().cmp(&other.0.len())
            })
    }
}

impl PartialOrd for TensorKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Monomial::to_string).collect();
        f.write_str(&parts.join("(x)"))
    }
}

/// An element of the braided tensor square (rank 2) or cube (rank 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    spec: FieldSpec,
    rank: usize,
    terms: BTreeMap<TensorKey, FieldElement>,
}

impl TensorElement {
    pub fn zero(spec: FieldSpec, rank: usize) -> Self {
        assert!(rank == 2 || rank == 3, "tensor rank must be 2 or 3");
        TensorElement {
            spec,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        spec: FieldSpec,
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<Monomial>, FieldElement)>,
    ) -> Result<Self> {
        let mut out = Self::zero(spec, rank);
        for (factors, c) in terms {
            if factors.len() != rank {
                return Err(Error::RankMismatch(rank, factors.len()));
            }
            out.add_term(TensorKey(factors), c);
        }
        Ok(out)
    }

    /// `a (x) b (x) ...` expanded bilinearly.
    pub fn pure(factors: &[&Element]) -> Self {
        let spec = factors[0].spec();
        let mut acc: Vec<(Vec<Monomial>, FieldElement)> = vec![(Vec::new(), spec.one())];
        for f in factors {
            acc = acc
                .iter()
                .flat_map(|(ms, c)| {
                    f.terms().map(move |(m, k)| {
                        let mut ms = ms.clone();
                        ms.push(*m);
                        (ms, c * k)
                    })
                })
                .collect();
        }
        Self::from_terms(spec, factors.len(), acc).expect("rank matches")
    }

    fn add_term(&mut self, key: TensorKey, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(|| self.spec.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add_scaled_pure(&mut self, factors: &[&Element], c: &FieldElement) {
        for (k, v) in Self::pure(factors).terms {
            self.add_term(k, &v * c);
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[Monomial]) -> FieldElement {
        self.terms
            .get(&TensorKey(factors.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    /// Number of nonzero terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec.label(), other.spec.label()));
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("compatible tensors")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.spec.one()))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.spec, self.rank);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Apply one linear map per factor.
    pub fn map_factors(&self, maps: &[&dyn Fn(&Element) -> Element]) -> Self {
        assert_eq!(maps.len(), self.rank);
        let mut out = Self::zero(self.spec, self.rank);
        for (k, c) in &self.terms {
            let images: Vec<Element> =
                k.0.iter()
                    .zip(maps)
                    .map(|(m, f)| f(&Element::monomial(self.spec, *m)))
                    .collect();
            let refs: Vec<&Element> = images.iter().collect();
            out.add_scaled_pure(&refs, c);
        }
        out
    }

    /// Product in the braided tensor square or cube.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let spec = self.spec;
        let mut cache: HashMap<(i64, Monomial), Element> = HashMap::new();
        let mut act = |n: i64, m: Monomial| {
            cache
                .entry((n, m))
                .or_insert_with(|| g_action(n, &Element::monomial(spec, m)))
                .clone()
        };
        let mut out = Self::zero(spec, self.rank);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let l = &k1.0;
                let r = &k2.0;
                let coeff = c1 * c2;
                if self.rank == 2 {
                    // (a (x) b)(c (x) d) = a (g^|b| c) (x) b d
                    let left = &Element::monomial(spec, l[0]) * &act(l[1].degree() as i64, r[0]);
                    let right = &Element::monomial(spec, l[1]) * &Element::monomial(spec, r[1]);
                    out.add_scaled_pure(&[&left, &right], &coeff);
                } else {
                    let (db, de) = (l[1].degree() as i64, l[2].degree() as i64);
                    let first = &Element::monomial(spec, l[0]) * &act(db + de, r[0]);
                    let second = &Element::monomial(spec, l[1]) * &act(de, r[1]);
                    let third = &Element::monomial(spec, l[2]) * &Element::monomial(spec, r[2]);
                    out.add_scaled_pure(&[&first, &second, &third], &coeff);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("compatible tensors")
    }

    pub fn one(spec: FieldSpec, rank: usize) -> Self {
        let one = Element::one(spec);
        Self::pure(&vec![&one; rank])
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.spec, self.rank);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::join_terms(
            self.terms.iter().map(|(k, c)| (c.clone(), k.to_string())),
        ))
    }
}

/// `c(u (x) v) = (g^|u| . v) (x) u` for graded `u`.
pub fn braiding(u: &Element, v: &Element) -> Result<TensorElement> {
    if u.is_zero() {
        return Ok(TensorElement::zero(u.spec(), 2));
    }
    let n = u
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(u.to_string()))?;
    Ok(TensorElement::pure(&[&g_action(n as i64, v), u]))
}

fn braid_pair(spec: FieldSpec, a: Monomial, b: Monomial) -> Element {
    g_action(a.degree() as i64, &Element::monomial(spec, b))
}

/// The braiding applied to a rank-2 tensor.
pub fn braid(t: &TensorElement) -> TensorElement {
    assert_eq!(t.rank, 2);
    let spec = t.spec;
    let mut out = TensorElement::zero(spec, 2);
    for (k, c) in &t.terms {
        let (a, b) = (k.0[0], k.0[1]);
        out.add_scaled_pure(&[&braid_pair(spec, a, b), &Element::monomial(spec, a)], c);
    }
    out
}

/// `c (x) id` on a rank-3 tensor.
pub fn braid_12(t: &TensorElement) -> TensorElement {
    braid_at(t, 0)
}

/// `id (x) c` on a rank-3 tensor.
pub fn braid_23(t: &TensorElement) -> TensorElement {
    braid_at(t, 1)
}

fn braid_at(t: &TensorElement, i: usize) -> TensorElement {
    assert_eq!(t.rank, 3);
    let spec = t.spec;
    let mut out = TensorElement::zero(spec, 3);
    for (k, c) in &t.terms {
        let mut factors: Vec<Element> = k.0.iter().map(|m| Element::monomial(spec, *m)).collect();
        let (a, b) = (k.0[i], k.0[i + 1]);
        factors[i] = braid_pair(spec, a, b);
        factors[i + 1] = Element::monomial(spec, a);
        let refs: Vec<&Element> = factors.iter().collect();
        out.add_scaled_pure(&refs, c);
    }
    out
}

fn primitive_tensor(u: &Element) -> TensorElement {
    let one = Element::one(u.spec());
    TensorElement::pure(&[u, &one]).add(&TensorElement::pure(&[&one, u]))
}

/// `z (x) 1 + 1 (x) z + x (x) x`
pub fn expected_delta_z(spec: FieldSpec) -> TensorElement {
    let (x, z) = (Element::x(spec), Element::z(spec));
    primitive_tensor(&z).add(&TensorElement::pure(&[&x, &x]))
}

/// Coproduct on generators, with `delta(z)` derived from `delta(x)`, `delta(y)`.
struct CoproductTable {
    dx: TensorElement,
    dy: TensorElement,
    dz: TensorElement,
}

impl CoproductTable {
    fn new(spec: FieldSpec) -> Self {
        let dx = primitive_tensor(&Element::x(spec));
        let dy = primitive_tensor(&Element::y(spec));
        let dz = dx.mul(&dy).add(&dy.mul(&dx));
        assert_eq!(dz, expected_delta_z(spec), "derived coproduct of z");
        CoproductTable { dx, dy, dz }
    }
}

/// The braided coproduct, `delta(x)^a delta(z)^b delta(y)^c` on monomials.
pub fn coproduct(u: &Element) -> TensorElement {
    let spec = u.spec();
    let table = CoproductTable::new(spec);
    let mut z_pows = vec![TensorElement::one(spec, 2)];
    let mut y_pows = vec![TensorElement::one(spec, 2)];
    let mut out = TensorElement::zero(spec, 2);
    for (m, c) in u.terms() {
        while z_pows.len() <= m.b() as usize {
            let next = z_pows.last().unwrap().mul(&table.dz);
            z_pows.push(next);
        }
        while y_pows.len() <= m.c() as usize {
            let next = y_pows.last().unwrap().mul(&table.dy);
            y_pows.push(next);
        }
        let head = if m.a() == 1 {
            table.dx.clone()
        } else {
            TensorElement::one(spec, 2)
        };
        let value = head.mul(&z_pows[m.b() as usize]).mul(&y_pows[m.c() as usize]);
        out = out.add(&value.scale(c));
    }
    out
}

/// Coefficient of the unit monomial.
pub fn counit(u: &Element) -> FieldElement {
    u.coeff(&Monomial::ONE)
}

fn expand_factor(t: &TensorElement, i: usize) -> TensorElement {
    assert_eq!(t.rank, 2);
    let spec = t.spec;
    let mut cache: HashMap<Monomial, TensorElement> = HashMap::new();
    let mut out = TensorElement::zero(spec, 3);
    for (k, c) in &t.terms {
        let d = cache
            .entry(k.0[i])
            .or_insert_with(|| coproduct(&Element::monomial(spec, k.0[i])))
            .clone();
        let other = k.0[1 - i];
        for (dk, dc) in &d.terms {
            let factors = if i == 0 {
                vec![dk.0[0], dk.0[1], other]
            } else {
                vec![other, dk.0[0], dk.0[1]]
            };
            out.add_term(TensorKey(factors), dc * c);
        }
    }
    out
}

/// `(delta (x) id)` on a rank-2 tensor.
pub fn delta_tensor_id(t: &TensorElement) -> TensorElement {
    expand_factor(t, 0)
}

/// `(id (x) delta)` on a rank-2 tensor.
pub fn id_tensor_delta(t: &TensorElement) -> TensorElement {
    expand_factor(t, 1)
}

/// `(counit (x) id)` on a rank-2 tensor.
pub fn counit_left(t: &TensorElement) -> Element {
    contract(t, 0)
}

/// `(id (x) counit)` on a rank-2 tensor.
pub fn counit_right(t: &TensorElement) -> Element {
    contract(t, 1)
}

fn contract(t: &TensorElement, i: usize) -> Element {
    let terms = t
        .terms
        .iter()
        .filter(|(k, _)| k.0[i] == Monomial::ONE)
        .map(|(k, c)| (k.0[1 - i], c.clone()));
    Element::from_terms(t.spec, terms)
}

/// Basis of the primitive elements of degree `n`.
pub fn primitive_space(n: u32, spec: FieldSpec) -> Vec<Element> {
    let basis = Monomial::of_degree(n);
    let columns: Vec<BTreeMap<TensorKey, FieldElement>> = basis
        .iter()
        .map(|m| {
            let e = Element::monomial(spec, *m);
            coproduct(&e).sub(&primitive_tensor(&e)).terms.into_iter().collect()
        })
        .collect();
    null_space(spec, &columns)
        .into_iter()
        .map(|v| Element::from_terms(spec, basis.iter().copied().zip(v)))
        .collect()
}

/// Whether `delta(u) = u (x) 1 + 1 (x) u`.
pub fn is_primitive(u: &Element) -> bool {
    coproduct(u) == primitive_tensor(u)
}

/// Reduce modulo `<y^(2p), z^p>`: drop monomials with `b >= p` or `c >= 2p`.
pub fn nichols_reduce(u: &Element) -> Result<Element> {
    let p = u.spec().modulus().ok_or(Error::RequiresPrimeField)?;
    Ok(u.filter(|m| (m.b() as u64) < p && (m.c() as u64) < 2 * p))
}

/// An element of `L = k[eta_L]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LElement(Poly);

impl LElement {
    pub fn new(p: Poly) -> Self {
        LElement(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        LElement(self.0.mul(&other.0))
    }

    /// Coproduct in the braided square of `L`, where `c(eta (x) eta) = -eta (x) eta`.
    pub fn coproduct(&self) -> LTensor {
        let spec = self.0.spec();
        let mut out = LTensor::zero(spec);
        let eta = LTensor::from_terms(spec, [((1, 0), spec.one()), ((0, 1), spec.one())]);
        let mut power = LTensor::from_terms(spec, [((0, 0), spec.one())]);
        for c in self.0.coeffs() {
            out = out.add(&power.scale(c));
            power = power.mul(&eta);
        }
        out
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with("eta_L"))
    }
}

/// An element of the braided square `L (x) L`, keyed by exponent pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LTensor {
    spec: FieldSpec,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl LTensor {
    pub fn zero(spec: FieldSpec) -> Self {
        LTensor {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(spec: FieldSpec, terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>) -> Self {
        let mut out = Self::zero(spec);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: (u32, u32), c: FieldElement) {
        let entry = self.terms.entry(k).or_insert_with(|| self.spec.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_terms(self.spec, self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// `(a (x) b)(c (x) d) = (-1)^(|b||c|) ac (x) bd`
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.spec);
        for (&(i, j), c1) in &self.terms {
            for (&(k, l), c2) in &other.terms {
                let c = c1 * c2;
                let c = if (j * k) % 2 == 1 { -c } else { c };
                out.add_term((i + k, j + l), c);
            }
        }
        out
    }
}

/// `pi(x) = 0`, `pi(y) = eta_L`: keeps the monomials `y^c`.
pub fn project_l(u: &Element) -> LElement {
    let spec = u.spec();
    let mut coeffs = Vec::new();
    for (m, c) in u.terms().filter(|(m, _)| m.a() == 0 && m.b() == 0) {
        let i = m.c() as usize;
        if coeffs.len() <= i {
            coeffs.resize(i + 1, spec.zero());
        }
        coeffs[i] = c.clone();
    }
    LElement(Poly::from_coeffs(spec, coeffs))
}

/// `(pi (x) pi)` on a rank-2 tensor.
pub fn project_l_tensor(t: &TensorElement) -> LTensor {
    let kept = t
        .terms
        .iter()
        .filter(|(k, _)| k.0.iter().all(|m| m.a() == 0 && m.b() == 0));
    LTensor::from_terms(t.spec, kept.map(|(k, c)| ((k.0[0].c(), k.0[1].c()), c.clone())))
}

/// Checks `delta(sigma(m)) = (sigma (x) sigma)(delta(m))` for every basis monomial of degree at most `bound`.
pub fn is_hopf_automorphism(sigma: &SuperAut, bound: u32) -> bool {
    let spec = sigma.spec();
    let apply = |e: &Element| sigma.apply(e);
    Monomial::up_to_degree(bound).into_iter().all(|m| {
        let e = Element::monomial(spec, m);
        coproduct(&sigma.apply(&e)) == coproduct(&e).map_factors(&[&apply, &apply])
    })
}
