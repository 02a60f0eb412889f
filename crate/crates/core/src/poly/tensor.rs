//! Dense polynomials with a per-variable degree bound.
//!
//! A `TensorPoly` in `n` variables with bound `m` stores all `(m+1)^n`
//! coefficients of the space of polynomials of degree at most `m` in each
//! variable separately. Memory grows as `(m+1)^n`; this is intended for the
//! small `n` and `m` of grid interpolation, not for general algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::QuadScalar;

#[derive(Clone)]
pub struct TensorPoly {
    nvars: usize,
    maxdeg: usize,
    // row-major: the first variable's exponent is the most significant digit
    coeffs: Vec<QuadScalar>,
}

/// `constant + Σ linear[j]·t_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub constant: QuadScalar,
    pub linear: Vec<QuadScalar>,
}

impl AffineForm {
    pub fn new(constant: QuadScalar, linear: Vec<QuadScalar>) -> Self {
        AffineForm { constant, linear }
    }

    pub fn eval(&self, t: &[QuadScalar]) -> QuadScalar {
        self.linear.iter().zip(t).fold(self.constant.clone(), |acc, (c, x)| acc + c * x)
    }

    fn to_poly(&self) -> TensorPoly {
        let mut p = TensorPoly::zero(self.linear.len(), 1);
        p.coeffs[0] = self.constant.clone();
        for (j, c) in self.linear.iter().enumerate() {
            let mut e = vec![0; self.linear.len()];
            e[j] = 1;
            let idx = p.index_of(&e);
            p.coeffs[idx] = c.clone();
        }
        p
    }
}

impl TensorPoly {
    /// Panics if `nvars == 0`.
    pub fn zero(nvars: usize, maxdeg: usize) -> Self {
        assert!(nvars >= 1, "a TensorPoly needs at least one variable");
        let len = (maxdeg + 1).pow(nvars as u32);
        TensorPoly { nvars, maxdeg, coeffs: vec![QuadScalar::zero(); len] }
    }

    pub fn constant(nvars: usize, c: QuadScalar) -> Self {
        let mut p = Self::zero(nvars, 0);
        p.coeffs[0] = c;
        p
    }

    /// The variable `t_k` (0-based).
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut linear = vec![QuadScalar::zero(); nvars];
        linear[k] = QuadScalar::one();
        AffineForm::new(QuadScalar::zero(), linear).to_poly()
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeats. The degree bound is the largest exponent present.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, QuadScalar)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let mut maxdeg = 0;
        for (e, _) in &terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            maxdeg = maxdeg.max(e.iter().copied().max().unwrap_or(0));
        }
        let mut p = Self::zero(nvars, maxdeg);
        for (e, c) in terms {
            let idx = p.index_of(&e);
            p.coeffs[idx] += &c;
        }
        Ok(p)
    }

    /// Coefficients in row-major order, `(maxdeg+1)^nvars` of them.
    pub fn from_dense(nvars: usize, maxdeg: usize, coeffs: Vec<QuadScalar>) -> Result<Self> {
        let len = (maxdeg + 1).pow(nvars as u32);
        if nvars == 0 || coeffs.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: coeffs.len() });
        }
        Ok(TensorPoly { nvars, maxdeg, coeffs })
    }

    /// Embeds `u(t_k)` into `nvars` variables.
    pub fn from_uni(u: &UniPoly, nvars: usize, k: usize) -> Self {
        let maxdeg = u.degree().unwrap_or(0);
        let mut p = Self::zero(nvars, maxdeg);
        for (j, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[k] = j;
            let idx = p.index_of(&e);
            p.coeffs[idx] = c.clone();
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn dense_coeffs(&self) -> &[QuadScalar] {
        &self.coeffs
    }

    fn index_of(&self, e: &[usize]) -> usize {
        e.iter().fold(0, |acc, &x| acc * (self.maxdeg + 1) + x)
    }

    fn exponents_of(&self, mut idx: usize) -> Vec<usize> {
        let base = self.maxdeg + 1;
        let mut e = vec![0; self.nvars];
        for slot in e.iter_mut().rev() {
            *slot = idx % base;
            idx /= base;
        }
        e
    }

    /// Coefficient of `t^e`; zero outside the stored range.
    pub fn coeff(&self, e: &[usize]) -> QuadScalar {
        if e.len() != self.nvars || e.iter().any(|&x| x > self.maxdeg) {
            return QuadScalar::zero();
        }
        self.coeffs[self.index_of(e)].clone()
    }

    /// Nonzero terms in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &QuadScalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponents_of(i), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QuadScalar::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().skip(1).all(QuadScalar::is_zero)
    }

    /// Degree in `t_k`; `None` for the zero polynomial.
    pub fn degree_in(&self, k: usize) -> Option<usize> {
        self.terms().map(|(e, _)| e[k]).max()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(e, _)| e.iter().sum()).max()
    }

    /// Same polynomial with degree bound `maxdeg`. Fails when a term would
    /// not fit.
    pub fn with_maxdeg(&self, maxdeg: usize) -> Result<Self> {
        if maxdeg == self.maxdeg {
            return Ok(self.clone());
        }
        let mut out = Self::zero(self.nvars, maxdeg);
        for (e, c) in self.terms() {
            if e.iter().any(|&x| x > maxdeg) {
                return Err(Error::InvalidInput(format!(
                    "term of degree {} does not fit bound {maxdeg}",
                    e.iter().max().unwrap()
                )));
            }
            let idx = out.index_of(&e);
            out.coeffs[idx] = c.clone();
        }
        Ok(out)
    }

    /// Shrinks the degree bound to the largest exponent present.
    pub fn trimmed(&self) -> Self {
        let tight = self.terms().flat_map(|(e, _)| e).max().unwrap_or(0);
        self.with_maxdeg(tight).expect("tight bound fits")
    }

    fn check_var(&self, k: usize) -> Result<()> {
        if k >= self.nvars {
            return Err(Error::IndexOutOfRange { index: k, len: self.nvars });
        }
        Ok(())
    }

    /// Nested Horner evaluation, innermost variable last.
    pub fn eval(&self, t: &[QuadScalar]) -> Result<QuadScalar> {
        if t.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: t.len() });
        }
        let base = self.maxdeg + 1;
        let horner = |block: &[QuadScalar], x: &QuadScalar| {
            block.iter().rev().fold(QuadScalar::zero(), |acc, c| acc * x + c)
        };
        let mut level: Vec<QuadScalar> =
            self.coeffs.chunks(base).map(|b| horner(b, &t[self.nvars - 1])).collect();
        for x in t[..self.nvars - 1].iter().rev() {
            level = level.chunks(base).map(|b| horner(b, x)).collect();
        }
        Ok(level.pop().expect("one value remains"))
    }

    /// Formal `∂/∂t_k` (0-based); keeps the degree bound.
    pub fn partial_derivative(&self, k: usize) -> Result<Self> {
        self.check_var(k)?;
        let mut out = Self::zero(self.nvars, self.maxdeg);
        for (mut e, c) in self.terms() {
            if e[k] == 0 {
                continue;
            }
            let factor = QuadScalar::from(e[k] as i64);
            e[k] -= 1;
            let idx = out.index_of(&e);
            out.coeffs[idx] = c * &factor;
        }
        Ok(out)
    }

    /// Replaces `t_k` by an affine form in the same variables and expands.
    /// The form may mention `t_k` itself, which then plays the role of a
    /// new variable in slot `k`. The result carries the tightest bound.
    pub fn substitute_affine(&self, k: usize, form: &AffineForm) -> Result<Self> {
        self.check_var(k)?;
        if form.linear.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: form.linear.len() });
        }
        // group terms by their power of t_k
        let mut slices = vec![Self::zero(self.nvars, self.maxdeg); self.maxdeg + 1];
        for (mut e, c) in self.terms() {
            let p = e[k];
            e[k] = 0;
            let idx = slices[p].index_of(&e);
            slices[p].coeffs[idx] = c.clone();
        }
        let linear = form.to_poly();
        let mut power = Self::constant(self.nvars, QuadScalar::one());
        let mut out = Self::zero(self.nvars, 0);
        for (p, slice) in slices.iter().enumerate() {
            if p > 0 {
                power = &power * &linear;
            }
            if !slice.is_zero() {
                out = &out + &(slice * &power);
            }
        }
        Ok(out.trimmed())
    }

    /// Fixes the variables with `Some(value)` and returns a polynomial in the
    /// remaining ones, in their original order.
    pub fn partial_eval(&self, assignment: &[Option<QuadScalar>]) -> Result<Self> {
        if assignment.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: assignment.len() });
        }
        let free: Vec<usize> = (0..self.nvars).filter(|&k| assignment[k].is_none()).collect();
        if free.is_empty() {
            return Err(Error::InvalidInput("partial evaluation must leave a variable free".into()));
        }
        let mut out = Self::zero(free.len(), self.maxdeg);
        for (e, c) in self.terms() {
            let mut value = c.clone();
            for (k, a) in assignment.iter().enumerate() {
                if let Some(x) = a {
                    value = value * x.pow(e[k] as u32);
                }
            }
            let reduced: Vec<usize> = free.iter().map(|&k| e[k]).collect();
            let idx = out.index_of(&reduced);
            out.coeffs[idx] += &value;
        }
        Ok(out)
    }

    /// Reads `self` as a polynomial in `t_k` alone; fails if another
    /// variable appears.
    pub fn to_uni(&self, k: usize) -> Result<UniPoly> {
        self.check_var(k)?;
        let mut coeffs = vec![QuadScalar::zero(); self.maxdeg + 1];
        for (e, c) in self.terms() {
            if e.iter().enumerate().any(|(j, &x)| j != k && x != 0) {
                return Err(Error::InvalidInput(format!("polynomial depends on variables other than t{}", k + 1)));
            }
            coeffs[e[k]] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        TensorPoly { nvars: self.nvars, maxdeg: self.maxdeg, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&QuadScalar, &QuadScalar) -> QuadScalar) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different numbers of variables");
        let maxdeg = self.maxdeg.max(rhs.maxdeg);
        let a = self.with_maxdeg(maxdeg).expect("widening never fails");
        let b = rhs.with_maxdeg(maxdeg).expect("widening never fails");
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| op(x, y)).collect();
        TensorPoly { nvars: self.nvars, maxdeg, coeffs }
    }
}

/// Exact coefficient comparison after aligning degree bounds.
pub fn poly_equal(p: &TensorPoly, q: &TensorPoly) -> bool {
    p == q
}

impl PartialEq for TensorPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        if self.maxdeg == other.maxdeg {
            return self.coeffs == other.coeffs;
        }
        let maxdeg = self.maxdeg.max(other.maxdeg);
        let a = self.with_maxdeg(maxdeg).expect("widening never fails");
        let b = other.with_maxdeg(maxdeg).expect("widening never fails");
        a.coeffs == b.coeffs
    }
}

impl Eq for TensorPoly {}

impl Add<&TensorPoly> for &TensorPoly {
    type Output = TensorPoly;
    fn add(self, rhs: &TensorPoly) -> TensorPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&TensorPoly> for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &TensorPoly) -> TensorPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;
    fn neg(self) -> TensorPoly {
        self.scale(&QuadScalar::from(-1))
    }
}

/// The product is returned with its tightest degree bound.
impl Mul<&TensorPoly> for &TensorPoly {
    type Output = TensorPoly;
    fn mul(self, rhs: &TensorPoly) -> TensorPoly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different numbers of variables");
        let mut out = TensorPoly::zero(self.nvars, self.maxdeg + rhs.maxdeg);
        let rterms: Vec<_> = rhs.terms().collect();
        for (ea, ca) in self.terms() {
            for (eb, cb) in &rterms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let idx = out.index_of(&e);
                out.coeffs[idx] += &(ca * *cb);
            }
        }
        out.trimmed()
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &QuadScalar) -> fmt::Result {
    if !c.is_rational() && !c.rat().is_zero() {
        write!(f, "({c})")
    } else {
        write!(f, "{c}")
    }
}

/// Canonical text: monomials `c * t1^e1 * ... * tn^en` in lexicographic
/// exponent order joined by ` + `, factors with zero exponent omitted.
impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write_coeff(f, c)?;
            for (k, &x) in e.iter().enumerate() {
                if x > 0 {
                    write!(f, " * t{}^{x}", k + 1)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly[n={}, m={}]({self})", self.nvars, self.maxdeg)
    }
}
