//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! The variable is `z` everywhere except in [`crate::hopf::LElement`], which
//! reuses this type for polynomials in the generator of `L`.

use std::fmt;

use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    spec: FieldSpec,
    // coeffs[i] is the coefficient of z^i; no trailing zeros.
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero(spec: FieldSpec) -> Self {
        Poly {
            spec,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_coeffs(c.spec(), vec![c])
    }

    /// `c * z^deg`
    pub fn monomial(c: FieldElement, deg: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![spec.zero(); deg];
        coeffs.push(c);
        Self::from_coeffs(spec, coeffs)
    }

    pub fn from_coeffs(spec: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.spec() == spec));
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { spec, coeffs }
    }

    pub fn from_ints(spec: FieldSpec, coeffs: &[i64]) -> Self {
        Self::from_coeffs(spec, coeffs.iter().map(|&c| spec.int(c)).collect())
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Self::from_coeffs(self.spec, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Self::from_coeffs(self.spec, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(self.spec, coeffs)
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.spec.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            spec: self.spec,
            coeffs,
        }
    }

    /// The Euler derivative `z d/dz`.
    pub fn euler_d(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| &self.spec.int(i as i64) * c)
            .collect();
        Self::from_coeffs(self.spec, coeffs)
    }

    /// `p(lambda * z)`
    pub fn rescale(&self, lambda: &FieldElement) -> Poly {
        let mut power = self.spec.one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power = &power * lambda;
        }
        Self::from_coeffs(self.spec, coeffs)
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.spec.zero(), |acc, c| &(&acc * at) + c)
    }

    /// Render with the given variable name, lowest degree first.
    pub fn display_with(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                (c.clone(), mono)
            });
        crate::expr::join_terms(terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_derivative() {
        let q = FieldSpec::rationals();
        let z3 = Poly::monomial(q.one(), 3);
        assert_eq!(z3.euler_d(), Poly::monomial(q.int(3), 3));
        assert!(Poly::constant(q.one()).euler_d().is_zero());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(Poly::monomial(f3.one(), 3).euler_d().is_zero());
    }

    #[test]
    fn euler_kernel_is_polynomials_in_z_to_the_p() {
        let f5 = FieldSpec::prime(5).unwrap();
        for k in 0..16 {
            let zero = Poly::monomial(f5.one(), k).euler_d().is_zero();
            assert_eq!(zero, k % 5 == 0, "z^{k}");
        }
    }

    #[test]
    fn ring_basics() {
        let q = FieldSpec::rationals();
        let a = Poly::from_ints(q, &[1, 1]);
        let b = Poly::from_ints(q, &[-1, 1]);
        assert_eq!(a.mul(&b), Poly::from_ints(q, &[-1, 0, 1]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.rescale(&q.int(3)), Poly::from_ints(q, &[1, 3]));
        assert_eq!(a.shift(2), Poly::from_ints(q, &[0, 0, 1, 1]));
        assert_eq!(Poly::from_ints(q, &[2, 3]).to_string(), "2 + 3*z");
        assert_eq!(Poly::from_ints(q, &[0, -1, 0, 1]).eval(&q.int(2)), q.int(6));
    }
}
