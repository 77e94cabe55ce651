use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first, without trailing zeros.
///
/// As an f-polynomial, `f_P(t) = Σ_{i=-1}^{dim} f_i t^{i+1}`: the constant
/// term counts the empty face and the leading term the polytope itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FPolynomial {
    coeffs: Vec<BigInt>,
}

impl FPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = FPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        FPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 + t`, the f-polynomial of a point.
    pub fn point() -> Self {
        Self::from_i64(&[1, 1])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        FPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `f_i`, the number of `i`-dimensional faces.
    pub fn faces_of_dim(&self, i: i64) -> BigInt {
        usize::try_from(i + 1)
            .map(|k| self.coeff(k))
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Dimension of the polytope this counts: degree minus one.
    pub fn dim(&self) -> Option<i64> {
        self.degree().map(|d| d as i64 - 1)
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        FPolynomial { coeffs }
    }

    pub fn scale(&self, factor: i64) -> Self {
        let f = BigInt::from(factor);
        Self::new(self.coeffs.iter().map(|c| c * &f).collect())
    }

    /// `scale · t^shift · self`.
    pub fn scale_shift(&self, factor: i64, shift: usize) -> Self {
        self.scale(factor).shift(shift)
    }

    /// Constant term 1, leading coefficient 1, no negative coefficients.
    pub fn check_f_vector(&self) -> Result<()> {
        if let Some(k) = self.coeffs.iter().position(Signed::is_negative) {
            return Err(Error::NegativeCoefficient(k));
        }
        if self.coeffs.first() != Some(&BigInt::one()) {
            return Err(Error::InvalidPolynomial("constant term is not 1".into()));
        }
        if self.coeffs.last() != Some(&BigInt::one()) {
            return Err(Error::InvalidPolynomial(
                "leading coefficient is not 1".into(),
            ));
        }
        Ok(())
    }

    /// Euler relation `f(-1) = 0`; holds for every nonempty polytope.
    pub fn satisfies_euler(&self) -> bool {
        self.eval(-1).is_zero()
    }

    /// Coefficients as decimal strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Add for &FPolynomial {
    type Output = FPolynomial;

    fn add(self, rhs: &FPolynomial) -> FPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &FPolynomial {
    type Output = FPolynomial;

    fn sub(self, rhs: &FPolynomial) -> FPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &FPolynomial {
    type Output = FPolynomial;

    fn mul(self, rhs: &FPolynomial) -> FPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return FPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        FPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FPolynomial {
            type Output = FPolynomial;
            fn $m(self, rhs: FPolynomial) -> FPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for FPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> FPolynomial {
        FPolynomial::from_i64(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&FPolynomial::point() * &FPolynomial::point(), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 2]) * &p(&[1, 3, 3, 1]), p(&[1, 5, 9, 7, 2]));
        assert_eq!(p(&[1, 2, 1]).shift(2), p(&[0, 0, 1, 2, 1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), FPolynomial::zero());
        assert_eq!(p(&[1, 1]).scale_shift(3, 1), p(&[0, 3, 3]));
    }

    #[test]
    fn evaluation_and_checks() {
        let tri = p(&[1, 3, 3, 1]);
        assert_eq!(tri.eval(1), BigInt::from(8));
        assert!(tri.satisfies_euler());
        assert!(tri.check_f_vector().is_ok());
        assert_eq!(tri.dim(), Some(2));
        assert_eq!(tri.faces_of_dim(0), BigInt::from(3));
        assert_eq!(tri.faces_of_dim(-1), BigInt::from(1));
        assert_eq!(tri.faces_of_dim(7), BigInt::from(0));
        assert!(matches!(
            p(&[1, -1, 1]).check_f_vector(),
            Err(Error::NegativeCoefficient(1))
        ));
        assert!(p(&[1, 2]).check_f_vector().is_err());
        assert!(!FPolynomial::one().satisfies_euler());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 3, 3, 1]).to_string(), "1 + 3t + 3t^2 + t^3");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "-2t + t^3");
        assert_eq!(FPolynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = FPolynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|c| FPolynomial::from_i64(&c))
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), t in -3i64..4) {
            prop_assert_eq!((&a * &b).eval(t), a.eval(t) * b.eval(t));
            prop_assert_eq!((&a + &b).eval(t), a.eval(t) + b.eval(t));
            prop_assert_eq!((&a - &b).eval(t), a.eval(t) - b.eval(t));
        }
    }
}
