//! Exact coefficient arithmetic.
//!
//! Two kinds of coefficient field are supported: the rationals, backed by
//! arbitrary-precision integers, and prime fields `F_p` for odd primes that
//! fit in a machine word. Both sit behind [`FieldElement`], which carries its
//! [`FieldSpec`]; operations on mismatched fields fail.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rationals,
    Prime(u64),
}

/// Descriptor of a coefficient field: `Q` or `F_p` with `p` an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    pub fn new(kind: FieldKind, p: Option<u64>) -> Result<Self> {
        match kind {
            FieldKind::Rationals => Ok(Self::rationals()),
            FieldKind::PrimeField => Self::prime(p.ok_or(Error::MissingPrime)?),
        }
    }

    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// The prime field `F_p`. Rejects `p = 2` and composite `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    pub fn kind(&self) -> FieldKind {
        match self.0 {
            Kind::Rationals => FieldKind::Rationals,
            Kind::Prime(_) => FieldKind::PrimeField,
        }
    }

    /// The modulus for a prime field, `None` over `Q`.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    pub fn zero(&self) -> FieldElement {
        self.int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        let value = match self.0 {
            Kind::Rationals => Value::Rat(BigRational::from_integer(BigInt::from(n))),
            Kind::Prime(p) => Value::Res(reduce_i128(n as i128, p)),
        };
        FieldElement { spec: *self, value }
    }

    /// The scalar `n / d`. Over `F_p` this is `n * d^{-1}`.
    pub fn ratio(&self, n: i64, d: i64) -> Result<FieldElement> {
        self.int(n).checked_div(&self.int(d))
    }

    /// Parse `"n"` or `"n/d"` (optionally signed) into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<FieldElement> {
        let bad = || Error::BadCoefficient(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text.trim(), None),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        self.element_from_ratio(num, den)
    }

    fn element_from_ratio(&self, num: BigInt, den: BigInt) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Rationals => Ok(FieldElement {
                spec: *self,
                value: Value::Rat(BigRational::new(num, den)),
            }),
            Kind::Prime(p) => {
                let n = FieldElement {
                    spec: *self,
                    value: Value::Res(reduce_big(&num, p)),
                };
                let d = FieldElement {
                    spec: *self,
                    value: Value::Res(reduce_big(&den, p)),
                };
                n.checked_div(&d)
            }
        }
    }

    /// Short label used in serialized output: `q` or `fp:<p>`.
    pub fn label(&self) -> String {
        match self.0 {
            Kind::Rationals => "q".to_string(),
            Kind::Prime(p) => format!("fp:{p}"),
        }
    }

    /// Inverse of [`FieldSpec::label`].
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        if label.eq_ignore_ascii_case("q") {
            return Ok(Self::rationals());
        }
        let p = label
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Schema(format!("unknown field {label:?}")))?;
        Self::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    Res(u64),
}

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Uniform entry point over the field operations; unary operations ignore `b`.
pub fn field_arith(op: ArithOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
    let rhs = || b.ok_or_else(|| Error::BadCoefficient("missing second operand".into()));
    match op {
        ArithOp::Add => a.checked_add(rhs()?),
        ArithOp::Sub => a.checked_sub(rhs()?),
        ArithOp::Mul => a.checked_mul(rhs()?),
        ArithOp::Div => a.checked_div(rhs()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
    }
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Res(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_one(),
            Value::Res(v) => *v == 1,
        }
    }

    /// `true` only for negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(&self.value, Value::Rat(r) if r.is_negative())
    }

    /// `true` when the value is an integer (always for residues).
    pub fn is_integral(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_integer(),
            Value::Res(_) => true,
        }
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Res(v) => Some(v),
            Value::Rat(_) => None,
        }
    }

    /// Numerator and denominator for rational elements.
    pub fn as_ratio(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.value {
            Value::Rat(r) => Some((r.numer(), r.denom())),
            Value::Res(_) => None,
        }
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.spec.label(), other.spec.label()))
        }
    }

    fn modulus(&self) -> u64 {
        self.spec.modulus().expect("residue without modulus")
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Res(a), Value::Res(b)) => Value::Res(add_mod(*a, *b, self.modulus())),
            _ => unreachable!(),
        };
        Ok(FieldElement { spec: self.spec, value })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Res(a), Value::Res(b)) => Value::Res(mul_mod(*a, *b, self.modulus())),
            _ => unreachable!(),
        };
        Ok(FieldElement { spec: self.spec, value })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rat(r) => Value::Rat(r.recip()),
            Value::Res(v) => {
                let p = self.modulus();
                Value::Res(pow_mod(*v, p - 2, p))
            }
        };
        Ok(FieldElement { spec: self.spec, value })
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Value::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Res(v) => write!(f, "{v}"),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let value = match &self.value {
            Value::Rat(r) => Value::Rat(-r),
            Value::Res(v) => {
                let p = self.modulus();
                Value::Res(if *v == 0 { 0 } else { p - v })
            }
        };
        FieldElement { spec: self.spec, value }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

// The operator impls panic on mixed fields; the `checked_*` methods report it.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field operation on mismatched fields")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order (for sorting only; not a field order).
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.spec
            .cmp(&other.spec)
            .then_with(|| match (&self.value, &other.value) {
                (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
                (Value::Res(a), Value::Res(b)) => a.cmp(b),
                _ => unreachable!(),
            })
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn reduce_big(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced residue fits")
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'outer: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_field_cases() {
        assert_eq!(FieldSpec::new(FieldKind::Rationals, None).unwrap().characteristic(), 0);
        assert_eq!(
            FieldSpec::new(FieldKind::PrimeField, Some(5)).unwrap().modulus(),
            Some(5)
        );
        let err = FieldSpec::new(FieldKind::PrimeField, Some(2)).unwrap_err();
        assert_eq!(err.to_string(), "characteristic 2 excluded");
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::new(FieldKind::PrimeField, None), Err(Error::MissingPrime));
        assert!(FieldSpec::prime(18_446_744_073_709_551_557).is_ok());
        assert!(FieldSpec::prime(3_215_031_751).is_err()); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn arithmetic_examples() {
        let q = FieldSpec::rationals();
        let half = q.ratio(1, 2).unwrap();
        let third = q.ratio(1, 3).unwrap();
        let sum = field_arith(ArithOp::Add, &half, Some(&third)).unwrap();
        assert_eq!(sum, q.ratio(5, 6).unwrap());
        assert_eq!(sum.to_string(), "5/6");

        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(field_arith(ArithOp::Inv, &f5.int(2), None).unwrap(), f5.int(3));
        assert_eq!(f5.int(-1).residue(), Some(4));
        assert_eq!(field_arith(ArithOp::Inv, &q.zero(), None), Err(Error::DivisionByZero));
        assert_eq!(f5.int(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let q = FieldSpec::rationals();
        let f5 = FieldSpec::prime(5).unwrap();
        let err = field_arith(ArithOp::Mul, &q.one(), Some(&f5.one())).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch(..)));
    }

    #[test]
    fn two_is_invertible_in_odd_characteristic() {
        for p in [3u64, 5, 7, 11, 101] {
            let f = FieldSpec::prime(p).unwrap();
            let half = f.int(2).inv().unwrap();
            assert!((&half * &f.int(2)).is_one());
        }
    }

    #[test]
    fn scalar_parsing() {
        let q = FieldSpec::rationals();
        assert_eq!(q.parse_scalar("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse_scalar("7").unwrap(), q.int(7));
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("abc").is_err());
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse_scalar("10").unwrap().to_string(), "3");
        assert_eq!(f7.parse_scalar("1/2").unwrap(), f7.int(4));
        assert_eq!(FieldSpec::from_label("fp:7").unwrap(), f7);
        assert_eq!(FieldSpec::from_label(&q.label()).unwrap(), q);
    }

    #[test]
    fn fermat_in_prime_field() {
        let f = FieldSpec::prime(13).unwrap();
        for a in 1..13 {
            assert!(f.int(a).pow(12).is_one());
        }
    }
}
