use std::cmp::Ordering;
use std::fmt;

/// A PBW basis monomial `x^a z^b y^c` with `a` in `{0, 1}`.
///
/// Ordered by total degree, then lexicographically on `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    a: u8,
    b: u32,
    c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };
    pub const X: Monomial = Monomial { a: 1, b: 0, c: 0 };
    pub const Y: Monomial = Monomial { a: 0, b: 0, c: 1 };
    pub const Z: Monomial = Monomial { a: 0, b: 1, c: 0 };

    /// Panics if `a > 1`.
    pub fn new(a: u8, b: u32, c: u32) -> Self {
        Self::try_new(a, b, c).expect("exponent of x must be 0 or 1")
    }

    pub fn try_new(a: u8, b: u32, c: u32) -> Option<Self> {
        (a <= 1).then_some(Monomial { a, b, c })
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// Total degree `a + 2b + c`.
    pub fn degree(&self) -> u32 {
        self.a as u32 + 2 * self.b + self.c
    }

    /// `0` for even, `1` for odd.
    pub fn parity(&self) -> u32 {
        (self.a as u32 + self.c) % 2
    }

    /// All monomials of degree `n`, in order.
    pub fn of_degree(n: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..=1u8.min(n as u8) {
            let rest = n - a as u32;
            for b in 0..=rest / 2 {
                out.push(Monomial { a, b, c: rest - 2 * b });
            }
        }
        out.sort();
        out
    }

    /// All monomials of degree at most `n`, in order.
    pub fn up_to_degree(n: u32) -> Vec<Monomial> {
        (0..=n).flat_map(Monomial::of_degree).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.a == 1 {
            parts.push("x".to_string());
        }
        match self.b {
            0 => {}
            1 => parts.push("z".into()),
            b => parts.push(format!("z^{b}")),
        }
        match self.c {
            0 => {}
            1 => parts.push("y".into()),
            c => parts.push(format!("y^{c}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_parity() {
        let m = Monomial::new(1, 2, 3);
        assert_eq!(m.degree(), 8);
        assert_eq!(m.parity(), 0);
        assert_eq!(Monomial::X.parity(), 1);
        assert!(Monomial::try_new(2, 0, 0).is_none());
    }

    #[test]
    fn ordering_is_graded_then_lex() {
        assert!(Monomial::Z < Monomial::new(1, 0, 1));
        assert!(Monomial::Y < Monomial::X);
        assert!(Monomial::X < Monomial::Z);
        assert_eq!(
            Monomial::of_degree(2),
            vec![Monomial::new(0, 0, 2), Monomial::Z, Monomial::new(1, 0, 1)]
        );
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new(1, 2, 5).to_string(), "x*z^2*y^5");
        assert_eq!(Monomial::new(0, 1, 1).to_string(), "z*y");
    }
}
