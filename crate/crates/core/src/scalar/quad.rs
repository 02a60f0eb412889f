//! Elements `a + b√d` of a real quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::Rational;
use crate::error::{Error, Result};

/// Field parameter used when none is given.
pub const DEFAULT_D: u32 = 2;

/// `true` when `d >= 2` has no repeated prime factor.
pub fn is_squarefree(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Filtration parameter of `Q(√d)`: the largest of the four canonical
/// integers `|num(a)|, den(a), |num(b)|, den(b)` of `a + b√d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Height(BigUint);

impl Height {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn at_most(&self, bound: u64) -> bool {
        self.0 <= BigUint::from(bound)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element `rat + surd·√d` of `Q(√d)`.
///
/// `d` only matters while the surd part is nonzero. Purely rational values
/// are canonically stored with `d = DEFAULT_D` and combine with elements of
/// any field; mixing two irrational elements of different fields panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    rat: Rational,
    surd: Rational,
    d: u32,
}

impl QuadScalar {
    /// Validates that `d` is square-free and at least 2.
    pub fn new(rat: Rational, surd: Rational, d: u32) -> Result<Self> {
        if !is_squarefree(d as u64) {
            return Err(Error::InvalidField(d as u64));
        }
        Ok(Self::make(rat, surd, d))
    }

    pub(crate) fn make(rat: Rational, surd: Rational, d: u32) -> Self {
        let d = if surd.is_zero() { DEFAULT_D } else { d };
        QuadScalar { rat, surd, d }
    }

    pub fn rational(q: impl Into<Rational>) -> Self {
        QuadScalar { rat: q.into(), surd: Rational::zero(), d: DEFAULT_D }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u32) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    /// Coefficient of `√d`.
    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Self::make(self.rat.clone(), -&self.surd, self.d)
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(self.d as i64);
        &self.rat * &self.rat - &d * &self.surd * &self.surd
    }

    /// Field of the combination of `self` and `other`.
    pub fn common_field(&self, other: &Self) -> Result<u32> {
        if self.surd.is_zero() {
            Ok(other.d)
        } else if other.surd.is_zero() || self.d == other.d {
            Ok(self.d)
        } else {
            Err(Error::FieldMismatch(self.d, other.d))
        }
    }

    fn join(&self, other: &Self) -> u32 {
        match self.common_field(other) {
            Ok(d) => d,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn checked_recip(&self) -> Option<Self> {
        if self.surd.is_zero() {
            return self.rat.checked_recip().map(Self::rational);
        }
        let n = self.norm().recip();
        Some(Self::make(&self.rat * &n, -(&self.surd * &n), self.d))
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of the real number, decided exactly.
    pub fn signum(&self) -> i32 {
        sign_of(&self.rat, &self.surd, self.d)
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn height(&self) -> Height {
        Height(self.rat.height().max(self.surd.height()))
    }

    /// Compares against a rational without building a `QuadScalar`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match sign_of(&(&self.rat - r), &self.surd, self.d) {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Largest integer not exceeding the real value.
    pub fn floor(&self) -> BigInt {
        if self.surd.is_zero() {
            return self.rat.floor();
        }
        let approx = self.to_f64().floor();
        let mut g = if approx.is_finite() && approx.abs() < 9.0e15 {
            BigInt::from(approx as i64)
        } else {
            self.rat.floor() + (&self.surd * &Rational::from_integer(isqrt(self.d as u64) as i64)).floor()
        };
        let one = BigInt::from(1);
        while self.cmp_rational(&Rational::from(g.clone())) == Ordering::Less {
            g -= &one;
        }
        while self.cmp_rational(&Rational::from(&g + &one)) != Ordering::Less {
            g += &one;
        }
        g
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64() + self.surd.to_f64() * (self.d as f64).sqrt()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let d = self.join(rhs);
        Self::make(&self.rat + &rhs.rat, &self.surd + &rhs.surd, d)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let d = self.join(rhs);
        Self::make(&self.rat - &rhs.rat, &self.surd - &rhs.surd, d)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let d = self.join(rhs);
        if rhs.surd.is_zero() {
            return Self::make(&self.rat * &rhs.rat, &self.surd * &rhs.rat, d);
        }
        if self.surd.is_zero() {
            return Self::make(&self.rat * &rhs.rat, &self.rat * &rhs.surd, d);
        }
        let dd = Rational::from_integer(d as i64);
        let rat = &self.rat * &rhs.rat + &self.surd * &rhs.surd * &dd;
        let surd = &self.rat * &rhs.surd + &self.surd * &rhs.rat;
        Self::make(rat, surd, d)
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        if rhs.surd.is_zero() {
            let d = self.join(rhs);
            return Self::make(&self.rat / &rhs.rat, &self.surd / &rhs.rat, d);
        }
        self.mul_ref(&rhs.recip())
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Sign of `x + y√d`: agreeing signs decide directly, otherwise `x²` is
/// compared with `d·y²`.
fn sign_of(x: &Rational, y: &Rational, d: u32) -> i32 {
    let sx = x.signum();
    let sy = y.signum();
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    let lhs = x * x;
    let rhs = y * y * Rational::from_integer(d as i64);
    match lhs.cmp(&rhs) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => unreachable!("d is not a perfect square"),
    }
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for QuadScalar {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.join(other);
        sign_of(&(&self.rat - &other.rat), &(&self.surd - &other.surd), d).cmp(&0)
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::make(-&self.rat, -&self.surd, self.d)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$imp(rhs)
            }
        }
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$imp(&rhs)
            }
        }
        impl $tr<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$imp(rhs)
            }
        }
        impl $tr<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, rhs: &QuadScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, rhs: &QuadScalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&QuadScalar> for QuadScalar {
    fn mul_assign(&mut self, rhs: &QuadScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for QuadScalar {
    fn sum<I: Iterator<Item = QuadScalar>>(iter: I) -> Self {
        iter.fold(QuadScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a QuadScalar> for QuadScalar {
    fn sum<I: Iterator<Item = &'a QuadScalar>>(iter: I) -> Self {
        iter.fold(QuadScalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QuadScalar {
    fn product<I: Iterator<Item = QuadScalar>>(iter: I) -> Self {
        iter.fold(QuadScalar::one(), |acc, x| acc * x)
    }
}

/// Canonical text: `3/2`, `5/7*sqrt(2)`, `-sqrt(3)`, `3/2-5/7*sqrt(2)`.
impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if !self.rat.is_zero() {
            write!(f, "{}", self.rat)?;
            if self.surd.signum() > 0 {
                write!(f, "+")?;
            }
        }
        if self.surd.is_one() {
            write!(f, "sqrt({})", self.d)
        } else if (-&self.surd).is_one() {
            write!(f, "-sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.surd, self.d)
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, c: i64, e: i64) -> QuadScalar {
        QuadScalar::new(Rational::new(a, b), Rational::new(c, e), 2).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(q(3, 1, 2, 1).conjugate(), q(3, 1, -2, 1));
        assert_eq!(QuadScalar::from(5).conjugate(), QuadScalar::from(5));
        let prod = q(1, 1, 1, 1) * q(1, 1, -1, 1);
        assert_eq!(prod, QuadScalar::from(-1));
        assert_eq!(prod.conjugate(), q(1, 1, 1, 1).conjugate() * q(1, 1, -1, 1).conjugate());
    }

    #[test]
    fn surd_part_examples() {
        assert_eq!(q(3, 2, 5, 7).surd_part(), &Rational::new(5, 7));
        assert_eq!(QuadScalar::from(4).surd_part(), &Rational::zero());
        let z = QuadScalar::from(2) * q(1, 1, 1, 1) + QuadScalar::from(3) * q(1, 1, -1, 1);
        assert_eq!(z.surd_part(), &Rational::from_integer(-1));
    }

    #[test]
    fn field_validation() {
        assert!(QuadScalar::sqrt_d(4).is_err());
        assert!(QuadScalar::sqrt_d(12).is_err());
        assert!(QuadScalar::sqrt_d(1).is_err());
        assert!(QuadScalar::sqrt_d(30).is_ok());
    }

    #[test]
    fn rational_elements_mix_with_any_field() {
        let r3 = QuadScalar::sqrt_d(3).unwrap();
        let x = QuadScalar::from(2) + &r3;
        assert_eq!(x.d(), 3);
        assert_eq!(&r3 * &r3, QuadScalar::from(3));
        assert_eq!((&r3 * &r3).d(), DEFAULT_D);
        assert!(r3.common_field(&QuadScalar::sqrt_d(2).unwrap()).is_err());
    }

    #[test]
    #[should_panic(expected = "cannot mix")]
    fn mixing_fields_panics() {
        let _ = QuadScalar::sqrt_d(3).unwrap() + QuadScalar::sqrt_d(2).unwrap();
    }

    #[test]
    fn ordering_is_exact() {
        // 140/99 < √2 < 99/70, both within 1e-4
        assert!(QuadScalar::from(Rational::new(99, 70)) > QuadScalar::sqrt_d(2).unwrap());
        assert!(QuadScalar::from(Rational::new(140, 99)) < QuadScalar::sqrt_d(2).unwrap());
        // 10√2 − 14 ≈ 0.1421
        let w = q(-14, 1, 10, 1);
        assert!(w > QuadScalar::from(Rational::new(142, 1000)));
        assert!(w < QuadScalar::from(Rational::new(143, 1000)));
        assert_eq!(w.floor(), BigInt::from(0));
        assert_eq!((-w).floor(), BigInt::from(-1));
    }

    #[test]
    fn height_and_display() {
        assert_eq!(QuadScalar::zero().height().value(), &BigUint::from(1u32));
        assert_eq!(q(3, 2, -5, 7).height().value(), &BigUint::from(7u32));
        assert_eq!(q(3, 2, -5, 7).to_string(), "3/2-5/7*sqrt(2)");
        assert_eq!(q(0, 1, -1, 1).to_string(), "-sqrt(2)");
        assert_eq!(q(-1, 1, 1, 2).to_string(), "-1+1/2*sqrt(2)");
    }

    fn arb_quad() -> impl Strategy<Value = QuadScalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, e)| q(a, b, c, e))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x - &x, QuadScalar::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip(), QuadScalar::one());
                prop_assert_eq!(&(&y / &x) * &x, y.clone());
            }
        }

        #[test]
        fn conjugation_is_a_field_automorphism(x in arb_quad(), y in arb_quad()) {
            prop_assert_eq!(x.conjugate().conjugate(), x.clone());
            prop_assert_eq!((&x + &y).conjugate(), x.conjugate() + y.conjugate());
            prop_assert_eq!((&x * &y).conjugate(), x.conjugate() * y.conjugate());
            let c = x.conjugate();
            prop_assert_eq!(c.surd_part(), &-x.surd_part());
        }

        #[test]
        fn surd_part_is_q_linear(x in arb_quad(), y in arb_quad(), a in -20i64..20, b in -20i64..20) {
            let (qa, qb) = (Rational::from_integer(a), Rational::from_integer(b));
            let lhs = QuadScalar::from(qa.clone()) * &x + QuadScalar::from(qb.clone()) * &y;
            prop_assert_eq!(lhs.surd_part(), &(&qa * x.surd_part() + &qb * y.surd_part()));
        }

        #[test]
        fn ordering_matches_floats_when_well_separated(x in arb_quad(), y in arb_quad()) {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x < y, fx < fy);
            }
            prop_assert_eq!(x.cmp(&y), (&x - &y).signum().cmp(&0));
        }

        #[test]
        fn floor_brackets_value(x in arb_quad()) {
            let f = QuadScalar::from(Rational::from(x.floor()));
            prop_assert!(f <= x);
            prop_assert!(x < f + QuadScalar::one());
        }
    }
}
