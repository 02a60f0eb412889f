//! Parsing of polynomial and scalar expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*        division by constants only
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := number | variable | 'sqrt' '(' integer ')' | '(' expr ')'
//! ```
//!
//! Variables are `t1, t2, ...`; `x, y, z` and `u, v` are aliases for the
//! first variables and a bare `t` means `t1`. The canonical output of
//! `TensorPoly`'s `Display` is accepted.

use std::collections::BTreeMap;

use super::TensorPoly;
use crate::error::{Error, Result};
use crate::scalar::{QuadScalar, Rational};

// exponent vectors have no trailing zeros
type Sparse = BTreeMap<Vec<usize>, QuadScalar>;

fn normalize(mut e: Vec<usize>) -> Vec<usize> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn constant(c: QuadScalar) -> Sparse {
    let mut s = Sparse::new();
    if !c.is_zero() {
        s.insert(Vec::new(), c);
    }
    s
}

fn add(mut a: Sparse, b: Sparse, sign: i64) -> Sparse {
    let sign = QuadScalar::from(sign);
    for (e, c) in b {
        let entry = a.entry(e).or_insert_with(QuadScalar::zero);
        *entry = &*entry + &(&c * &sign);
    }
    a.retain(|_, c| !c.is_zero());
    a
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let n = ea.len().max(eb.len());
            let e: Vec<usize> =
                (0..n).map(|k| ea.get(k).copied().unwrap_or(0) + eb.get(k).copied().unwrap_or(0)).collect();
            let entry = out.entry(normalize(e)).or_insert_with(QuadScalar::zero);
            *entry = &*entry + &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn as_constant(s: &Sparse) -> Option<QuadScalar> {
    match s.len() {
        0 => Some(QuadScalar::zero()),
        1 => s.get(&Vec::new()).cloned(),
        _ => None,
    }
}

/// `sqrt(n)` as an element of `Q(√d)` with `d` the square-free part of `n`.
pub fn sqrt_of_integer(n: u64) -> Result<QuadScalar> {
    let mut k = 1u64;
    let mut d = n;
    let mut p = 2u64;
    while p * p <= d {
        while d.is_multiple_of(p * p) {
            d /= p * p;
            k *= p;
        }
        p += 1;
    }
    let k = Rational::from_integer(k as i64);
    if d == 1 || n == 0 {
        let v = if n == 0 { Rational::zero() } else { k };
        return Ok(QuadScalar::rational(v));
    }
    let d = u32::try_from(d).map_err(|_| Error::InvalidField(d))?;
    QuadScalar::new(Rational::zero(), k, d)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        if text.is_empty() {
            return self.err("expected an integer");
        }
        match text.parse() {
            Ok(n) => Ok(n),
            Err(_) => self.err("integer out of range"),
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = add(acc, rhs, 1);
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = add(acc, rhs, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = mul(&acc, &rhs);
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                match as_constant(&rhs) {
                    Some(c) if !c.is_zero() => acc = mul(&acc, &constant(c.recip())),
                    Some(_) => return Err(Error::Parse { pos: at, msg: "division by zero".into() }),
                    None => return Err(Error::Parse { pos: at, msg: "division by a non-constant".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Sparse> {
        if self.eat(b'-') {
            let inner = self.unary()?;
            return Ok(add(Sparse::new(), inner, -1));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.integer()?;
            if k > 64 {
                return self.err("exponent too large");
            }
            let mut acc = constant(QuadScalar::one());
            for _ in 0..k {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<Sparse> {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match text.parse::<Rational>() {
            Ok(r) => Ok(constant(QuadScalar::rational(r))),
            Err(_) => Err(Error::Parse { pos: start, msg: format!("bad number {text:?}") }),
        }
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() || b == b'.' => self.number(),
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == "sqrt" {
                    self.expect(b'(')?;
                    let n = self.integer()?;
                    self.expect(b')')?;
                    return Ok(constant(sqrt_of_integer(n)?));
                }
                let var = match name {
                    "x" | "u" | "t" => 0,
                    "y" | "v" => 1,
                    "z" => 2,
                    _ => match name.strip_prefix('t').and_then(|k| k.parse::<usize>().ok()) {
                        Some(k) if k >= 1 => k - 1,
                        _ => return Err(Error::Parse { pos: start, msg: format!("unknown name {name:?}") }),
                    },
                };
                let mut e = vec![0; var + 1];
                e[var] = 1;
                let mut s = Sparse::new();
                s.insert(e, QuadScalar::one());
                Ok(s)
            }
            Some(b) => self.err(format!("unexpected character '{}'", b as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn parse_all(mut self) -> Result<Sparse> {
        let s = self.expr()?;
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(s)
    }
}

fn parse_sparse(text: &str) -> Result<Sparse> {
    Parser { src: text.as_bytes(), pos: 0 }.parse_all()
}

/// Parses a polynomial. With `nvars = None` the number of variables is the
/// highest variable index used (at least one).
pub fn parse_poly(text: &str, nvars: Option<usize>) -> Result<TensorPoly> {
    let sparse = parse_sparse(text)?;
    let used = sparse.keys().map(Vec::len).max().unwrap_or(0);
    let n = nvars.unwrap_or(used.max(1));
    if n == 0 || used > n {
        return Err(Error::Parse { pos: 0, msg: format!("expression uses {used} variables but {n} were declared") });
    }
    TensorPoly::from_terms(
        n,
        sparse.into_iter().map(|(mut e, c)| {
            e.resize(n, 0);
            (e, c)
        }),
    )
}

/// Parses a constant expression such as `3/2`, `-sqrt(2)` or `1+sqrt(8)/4`.
pub fn parse_scalar(text: &str) -> Result<QuadScalar> {
    let sparse = parse_sparse(text)?;
    as_constant(&sparse).ok_or_else(|| Error::Parse { pos: 0, msg: format!("{text:?} is not a constant") })
}

/// Parses a comma-separated list of constants.
pub fn parse_scalar_list(text: &str) -> Result<Vec<QuadScalar>> {
    text.split(',').map(parse_scalar).collect()
}
