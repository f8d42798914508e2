use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial in `u` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `u^i`. Trailing zeros are always
/// trimmed, so two equal polynomials compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::new(vec![c])
    }

    /// `c * u^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        PolyQ::new(coeffs)
    }

    /// Build from small integer ratios, e.g. `[(-1, 6), (0, 1), (1, 2)]`.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Self {
        PolyQ::new(
            ratios
                .iter()
                .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * u + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(c * u)`
    pub fn compose_scale(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        PolyQ::new(out)
    }

    /// Exact quotient `p(u) / (u - root)`; fails unless `p(root) = 0`.
    pub fn deflate(&self, root: &Rational) -> Result<Self> {
        if self.is_zero() {
            return Ok(PolyQ::zero());
        }
        // synthetic division, highest degree first
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                if !value.is_zero() {
                    return Err(Error::InexactDeflation {
                        root: root.to_string(),
                    });
                }
            } else {
                quotient[i - 1] = value.clone();
            }
            carry = value;
        }
        Ok(PolyQ::new(quotient))
    }

    /// Coefficients rounded to `f64` for fast evaluation at quadrature nodes.
    pub fn to_f64(&self) -> PolyF64 {
        PolyF64 {
            coeffs: self.coeffs.iter().map(rational_to_f64).collect(),
        }
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
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
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*u")?,
                _ => write!(f, "{a}*u^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: PolyQ) -> PolyQ {
        &self + &rhs
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: PolyQ) -> PolyQ {
        &self - &rhs
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: PolyQ) -> PolyQ {
        &self * &rhs
    }
}

/// Floating-point image of a [`PolyQ`], evaluated with Horner's rule.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyF64 {
    coeffs: Vec<f64>,
}

impl PolyF64 {
    pub fn eval(&self, u: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = PolyQ::new(vec![q(1, 2), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(PolyQ::new(vec![q(0, 1)]).is_zero());
        assert_eq!(PolyQ::zero().degree(), None);
    }

    #[test]
    fn exact_evaluation() {
        // u^2 - u + 1/6 at u = 1/2 is -1/12
        let p = PolyQ::from_ratios(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(p.eval(&q(1, 2)), q(-1, 12));
    }

    #[test]
    fn compose_with_scalar() {
        let p = PolyQ::from_ratios(&[(1, 6), (-1, 1), (1, 1)]);
        let half = p.compose_scale(&q(1, 2));
        assert_eq!(half, PolyQ::from_ratios(&[(1, 6), (-1, 2), (1, 4)]));
    }

    #[test]
    fn deflation_requires_a_root() {
        // u - u^3 = u (1 - u)(1 + u)
        let p = PolyQ::from_ratios(&[(0, 1), (1, 1), (0, 1), (-1, 1)]);
        let d = p.deflate(&q(1, 1)).unwrap();
        assert_eq!(d, PolyQ::from_ratios(&[(0, 1), (-1, 1), (-1, 1)]));
        assert_eq!(&d * &PolyQ::from_ratios(&[(-1, 1), (1, 1)]), p);
        assert!(matches!(
            p.deflate(&q(2, 1)),
            Err(Error::InexactDeflation { .. })
        ));
    }

    #[test]
    fn display_is_readable() {
        let p = PolyQ::from_ratios(&[(-1, 6), (0, 1), (1, 2)]);
        assert_eq!(p.to_string(), "-1/6 + 1/2*u^2");
    }
}
