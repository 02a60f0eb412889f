use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::QuadScalar;

/// Univariate polynomial, coefficients in ascending degree. The coefficient
/// vector never ends in a zero, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<QuadScalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<QuadScalar>) -> Self {
        while coeffs.last().is_some_and(QuadScalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: QuadScalar) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: QuadScalar, k: usize) -> Self {
        let mut coeffs = vec![QuadScalar::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[QuadScalar] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> QuadScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&QuadScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &QuadScalar) -> QuadScalar {
        self.coeffs.iter().rev().fold(QuadScalar::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * QuadScalar::from(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficient-wise conjugation `a + b√d ↦ a - b√d`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.coeffs.iter().map(QuadScalar::conjugate).collect())
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayUni { poly: self, var }
    }
}

struct DisplayUni<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for DisplayUni<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mixed = !c.is_rational() && !c.rat().is_zero();
            let negative = !mixed && c.signum() < 0;
            let mag = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let coef = if mixed { format!("({mag})") } else { mag.to_string() };
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![QuadScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| QuadScalar::from(c)).collect())
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(up(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(up(&[0, 0]).degree(), None);
        assert!(up(&[0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = up(&[1, 1]);
        let sq = &a * &a;
        assert_eq!(sq, up(&[1, 2, 1]));
        assert_eq!(&sq - &sq, UniPoly::zero());
        assert_eq!(sq.derivative(), up(&[2, 2]));
        assert_eq!(sq.eval(&QuadScalar::from(3)), QuadScalar::from(16));
    }

    #[test]
    fn display() {
        assert_eq!(up(&[0, 1]).to_string(), "t");
        assert_eq!(up(&[-1]).to_string(), "-1");
        assert_eq!(up(&[0, 3, -1]).to_string(), "-t^2 + 3*t");
        assert_eq!(up(&[1, -2, 1]).display_with("x").to_string(), "x^2 - 2*x + 1");
        let s = UniPoly::monomial(QuadScalar::sqrt_d(2).unwrap(), 1);
        assert_eq!(s.to_string(), "sqrt(2)*t");
        assert_eq!(s.scale(&QuadScalar::from(-1)).to_string(), "-sqrt(2)*t");
        let mixed = UniPoly::constant(QuadScalar::one() + QuadScalar::sqrt_d(2).unwrap());
        assert_eq!((&mixed * &up(&[0, 1])).to_string(), "(1+sqrt(2))*t");
    }
}
