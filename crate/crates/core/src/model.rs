//! Computable polynomial functions on `Q(√d)^n`, built from ordinary
//! polynomials and the discontinuous additive map `surd_part`.

use std::fmt;

use crate::diff::Evaluate;
use crate::error::{Error, Result};
use crate::poly::{parse_poly, parse_scalar, TensorPoly};
use crate::scalar::QuadScalar;

/// A node of a model tree. Variable indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    /// An ordinary polynomial in the first `p.nvars()` coordinates.
    Ordinary(TensorPoly),
    /// `x ↦ surd_part(x_j)`.
    SurdPart(usize),
    Sum(Vec<Node>),
    Product(Vec<Node>),
    Scale(QuadScalar, Box<Node>),
    Pow(Box<Node>, u32),
}

impl Node {
    fn arity(&self) -> usize {
        match self {
            Node::Ordinary(p) => p.nvars(),
            Node::SurdPart(j) => j + 1,
            Node::Sum(cs) | Node::Product(cs) => cs.iter().map(Node::arity).max().unwrap_or(0),
            Node::Scale(_, c) | Node::Pow(c, _) => c.arity(),
        }
    }

    fn eval(&self, x: &[QuadScalar]) -> Result<QuadScalar> {
        match self {
            Node::Ordinary(p) => p.eval(&x[..p.nvars()]),
            Node::SurdPart(j) => Ok(QuadScalar::from(x[*j].surd_part().clone())),
            Node::Sum(cs) => cs.iter().try_fold(QuadScalar::zero(), |acc, c| Ok(acc + c.eval(x)?)),
            Node::Product(cs) => cs.iter().try_fold(QuadScalar::one(), |acc, c| Ok(acc * c.eval(x)?)),
            Node::Scale(k, c) => Ok(k * &c.eval(x)?),
            Node::Pow(c, e) => Ok(c.eval(x)?.pow(*e)),
        }
    }

    fn order(&self) -> usize {
        match self {
            Node::Ordinary(p) => p.total_degree().unwrap_or(0),
            Node::SurdPart(_) => 1,
            Node::Sum(cs) => cs.iter().map(Node::order).max().unwrap_or(0),
            Node::Product(cs) => cs.iter().map(Node::order).sum(),
            Node::Scale(_, c) => c.order(),
            Node::Pow(c, e) => c.order() * *e as usize,
        }
    }

    fn has_surd(&self) -> bool {
        match self {
            Node::Ordinary(_) => false,
            Node::SurdPart(_) => true,
            Node::Sum(cs) | Node::Product(cs) => cs.iter().any(Node::has_surd),
            Node::Scale(_, c) | Node::Pow(c, _) => c.has_surd(),
        }
    }

    fn as_poly(&self, nvars: usize) -> Option<TensorPoly> {
        match self {
            Node::Ordinary(p) => Some(widen(p, nvars)),
            _ => None,
        }
    }

    /// Splits `c·base` into its coefficient and base.
    fn split_scale(self) -> (QuadScalar, Node) {
        match self {
            Node::Scale(c, b) => (c, *b),
            other => (QuadScalar::one(), other),
        }
    }

    fn simplify(self, nvars: usize) -> Node {
        match self {
            Node::Ordinary(p) => Node::Ordinary(widen(&p, nvars).trimmed()),
            Node::SurdPart(j) => Node::SurdPart(j),
            Node::Scale(c, child) => {
                let (k, base) = child.simplify(nvars).split_scale();
                scaled(&c * &k, base, nvars)
            }
            Node::Pow(child, e) => match (child.simplify(nvars), e) {
                (_, 0) => ordinary_constant(nvars, QuadScalar::one()),
                (c, 1) => c,
                (Node::Ordinary(p), e) => Node::Ordinary(poly_pow(&p, e)),
                (Node::Pow(c, f), e) => Node::Pow(c, f * e),
                (Node::Scale(k, c), e) => scaled(k.pow(e), Node::Pow(c, e).simplify(nvars), nvars),
                (c, e) => Node::Pow(Box::new(c), e),
            },
            Node::Sum(cs) => simplify_sum(cs, nvars),
            Node::Product(cs) => simplify_product(cs, nvars),
        }
    }

    fn restrict(&self, axis: usize, fixed: &[Option<QuadScalar>]) -> Result<Node> {
        Ok(match self {
            Node::Ordinary(p) => {
                let mut assignment: Vec<Option<QuadScalar>> = fixed[..p.nvars()].to_vec();
                if axis >= p.nvars() {
                    assignment.push(None);
                    let widened = widen(p, p.nvars() + 1);
                    return Ok(Node::Ordinary(widened.partial_eval(&assignment)?));
                }
                Node::Ordinary(p.partial_eval(&assignment)?)
            }
            Node::SurdPart(j) if *j == axis => Node::SurdPart(0),
            Node::SurdPart(j) => {
                let a = fixed[*j].as_ref().expect("fixed coordinate");
                ordinary_constant(1, QuadScalar::from(a.surd_part().clone()))
            }
            Node::Sum(cs) => Node::Sum(cs.iter().map(|c| c.restrict(axis, fixed)).collect::<Result<_>>()?),
            Node::Product(cs) => Node::Product(cs.iter().map(|c| c.restrict(axis, fixed)).collect::<Result<_>>()?),
            Node::Scale(k, c) => Node::Scale(k.clone(), Box::new(c.restrict(axis, fixed)?)),
            Node::Pow(c, e) => Node::Pow(Box::new(c.restrict(axis, fixed)?), *e),
        })
    }
}

fn ordinary_constant(nvars: usize, c: QuadScalar) -> Node {
    Node::Ordinary(TensorPoly::constant(nvars, c))
}

/// Re-expresses `p` as a polynomial in `nvars ≥ p.nvars()` variables.
fn widen(p: &TensorPoly, nvars: usize) -> TensorPoly {
    if p.nvars() == nvars {
        return p.clone();
    }
    let terms = p.terms().map(|(mut e, c)| {
        e.resize(nvars, 0);
        (e, c.clone())
    });
    TensorPoly::from_terms(nvars, terms.collect::<Vec<_>>()).expect("widened terms are valid")
}

fn poly_pow(p: &TensorPoly, e: u32) -> TensorPoly {
    let mut acc = TensorPoly::constant(p.nvars(), QuadScalar::one());
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

fn scaled(c: QuadScalar, base: Node, nvars: usize) -> Node {
    if c.is_zero() {
        return ordinary_constant(nvars, QuadScalar::zero());
    }
    match base {
        Node::Ordinary(p) => Node::Ordinary(p.scale(&c)),
        Node::Scale(k, b) => scaled(&c * &k, *b, nvars),
        b if c.is_one() => b,
        b => Node::Scale(c, Box::new(b)),
    }
}

fn simplify_sum(cs: Vec<Node>, nvars: usize) -> Node {
    let mut poly = TensorPoly::zero(nvars, 0);
    let mut terms: Vec<(QuadScalar, Node)> = Vec::new();
    let mut pending: Vec<Node> = cs.into_iter().map(|c| c.simplify(nvars)).collect();
    while let Some(c) = pending.pop() {
        if let Some(p) = c.as_poly(nvars) {
            poly = &poly + &p;
            continue;
        }
        match c.split_scale() {
            (k, Node::Sum(inner)) => pending.extend(inner.into_iter().map(|n| scaled(k.clone(), n, nvars))),
            (k, base) => match terms.iter_mut().find(|(_, b)| *b == base) {
                Some((acc, _)) => *acc += &k,
                None => terms.push((k, base)),
            },
        }
    }
    let mut out: Vec<Node> = Vec::new();
    // `pending` was consumed back to front; restore the written order.
    terms.reverse();
    for (k, base) in terms {
        if !k.is_zero() {
            out.push(scaled(k, base, nvars));
        }
    }
    let poly = poly.trimmed();
    if !poly.is_zero() || out.is_empty() {
        out.push(Node::Ordinary(poly));
    }
    if out.len() == 1 {
        out.pop().expect("one term")
    } else {
        Node::Sum(out)
    }
}

fn simplify_product(cs: Vec<Node>, nvars: usize) -> Node {
    let mut coef = QuadScalar::one();
    let mut poly = TensorPoly::constant(nvars, QuadScalar::one());
    let mut factors: Vec<Node> = Vec::new();
    let mut pending: Vec<Node> = cs.into_iter().rev().map(|c| c.simplify(nvars)).collect();
    while let Some(c) = pending.pop() {
        if let Some(p) = c.as_poly(nvars) {
            poly = &poly * &p;
            continue;
        }
        let (k, base) = c.split_scale();
        coef *= &k;
        match base {
            Node::Product(inner) => pending.extend(inner.into_iter().rev()),
            b => factors.push(b),
        }
    }
    let poly = poly.trimmed();
    if poly.is_zero() || coef.is_zero() {
        return ordinary_constant(nvars, QuadScalar::zero());
    }
    if poly.is_constant() {
        coef *= &poly.coeff(&vec![0; nvars]);
    } else {
        factors.insert(0, Node::Ordinary(poly));
    }
    let base = match factors.len() {
        0 => return ordinary_constant(nvars, coef),
        1 => factors.pop().expect("one factor"),
        _ => Node::Product(factors),
    };
    scaled(coef, base, nvars)
}

/// A polynomial function of `nvars` variables described by a [`Node`] tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessModel {
    nvars: usize,
    root: Node,
}

/// Freezes every coordinate but `axis` (0-based). `fixed` lists the other
/// `n - 1` coordinates in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSpec {
    pub axis: usize,
    pub fixed: Vec<QuadScalar>,
}

impl WitnessModel {
    /// Uses the smallest arity that covers every node.
    pub fn new(root: Node) -> Self {
        let nvars = root.arity().max(1);
        WitnessModel { nvars, root }
    }

    pub fn with_nvars(root: Node, nvars: usize) -> Result<Self> {
        let need = root.arity();
        if nvars == 0 || nvars < need {
            return Err(Error::DimensionMismatch { expected: need.max(1), found: nvars });
        }
        Ok(WitnessModel { nvars, root })
    }

    pub fn ordinary(p: TensorPoly) -> Self {
        Self::new(Node::Ordinary(p))
    }

    /// `surd_part(x_j)` as a function of `nvars` variables.
    pub fn surd_part(j: usize, nvars: usize) -> Result<Self> {
        Self::with_nvars(Node::SurdPart(j), nvars)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn eval(&self, x: &[QuadScalar]) -> Result<QuadScalar> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: x.len() });
        }
        self.root.eval(x)
    }

    /// Structural `m` with `Δ_h^{m+1} f = 0`: total degree for polynomials,
    /// 1 for `surd_part`, max over sums, sum over products.
    pub fn declared_order(&self) -> usize {
        self.root.order()
    }

    /// Flattens sums and products, folds scalars and polynomial parts, and
    /// cancels identical subtrees.
    pub fn simplify(&self) -> Self {
        WitnessModel { nvars: self.nvars, root: self.root.clone().simplify(self.nvars) }
    }

    pub fn is_structurally_polynomial(&self) -> bool {
        !self.simplify().root.has_surd()
    }

    /// The ordinary polynomial this model reduces to, if any.
    pub fn as_polynomial(&self) -> Option<TensorPoly> {
        self.simplify().root.as_poly(self.nvars)
    }

    /// `x ↦ f(a_1, ..., a_{s-1}, x, a_{s+1}, ..., a_n)` as a one-variable model.
    pub fn restrict_section(&self, sec: &SectionSpec) -> Result<Self> {
        if sec.axis >= self.nvars {
            return Err(Error::IndexOutOfRange { index: sec.axis, len: self.nvars });
        }
        if sec.fixed.len() + 1 != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars - 1, found: sec.fixed.len() });
        }
        let mut fixed: Vec<Option<QuadScalar>> = sec.fixed.iter().cloned().map(Some).collect();
        fixed.insert(sec.axis, None);
        let root = self.root.restrict(sec.axis, &fixed)?;
        Ok(WitnessModel { nvars: 1, root })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = SexpParser { src: text, pos: 0 };
        let model = p.model()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.err("trailing input"));
        }
        Ok(model)
    }
}

impl Evaluate for WitnessModel {
    fn eval_at(&self, x: &[QuadScalar]) -> Result<QuadScalar> {
        self.eval(x)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Ordinary(p) => write!(f, "(poly {} \"{}\")", p.nvars(), p),
            Node::SurdPart(j) => write!(f, "(surd {})", j + 1),
            Node::Sum(cs) | Node::Product(cs) => {
                write!(f, "({}", if matches!(self, Node::Sum(_)) { "sum" } else { "prod" })?;
                for c in cs {
                    write!(f, " {c}")?;
                }
                write!(f, ")")
            }
            Node::Scale(k, c) => write!(f, "(scale \"{k}\" {c})"),
            Node::Pow(c, e) => write!(f, "(pow {c} {e})"),
        }
    }
}

/// S-expression text. The arity is implicit unless it exceeds what the
/// nodes need, in which case the tree is wrapped as `(model n ...)`.
impl fmt::Display for WitnessModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nvars == self.root.arity().max(1) {
            write!(f, "{}", self.root)
        } else {
            write!(f, "(model {} {})", self.nvars, self.root)
        }
    }
}

impl std::str::FromStr for WitnessModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct SexpParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SexpParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn peek_close(&mut self) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(')')
    }

    fn atom(&mut self) -> Result<&str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == '"').unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected an atom"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        let a = self.atom()?;
        a.parse().map_err(|_| Error::Parse { pos: start, msg: format!("expected a non-negative integer, found '{a}'") })
    }

    fn string(&mut self) -> Result<(usize, &str)> {
        self.expect('"')?;
        let start = self.pos;
        let len = self.src[start..].find('"').ok_or_else(|| self.err("unterminated string"))?;
        self.pos = start + len + 1;
        Ok((start, &self.src[start..start + len]))
    }

    fn model(&mut self) -> Result<WitnessModel> {
        self.skip_ws();
        let save = self.pos;
        self.expect('(')?;
        if self.atom()? == "model" {
            let at = self.pos;
            let n = self.integer()?;
            let root = self.node()?;
            self.expect(')')?;
            return WitnessModel::with_nvars(root, n).map_err(|e| Error::Parse { pos: at, msg: e.to_string() });
        }
        self.pos = save;
        Ok(WitnessModel::new(self.node()?))
    }

    fn node(&mut self) -> Result<Node> {
        self.expect('(')?;
        let head_pos = self.pos;
        let head = self.atom()?.to_string();
        let node = match head.as_str() {
            "surd" => {
                let at = self.pos;
                match self.integer()? {
                    0 => return Err(Error::Parse { pos: at, msg: "variables are numbered from 1".into() }),
                    j => Node::SurdPart(j - 1),
                }
            }
            "poly" => {
                let n = self.integer()?;
                let (at, text) = self.string()?;
                let p = parse_poly(text, Some(n)).map_err(|e| shift(e, at))?;
                Node::Ordinary(p)
            }
            "scale" => {
                let (at, text) = self.string()?;
                let c = parse_scalar(text).map_err(|e| shift(e, at))?;
                Node::Scale(c, Box::new(self.node()?))
            }
            "pow" => {
                let child = self.node()?;
                let at = self.pos;
                let e = self.integer()?;
                let e = u32::try_from(e).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
                Node::Pow(Box::new(child), e)
            }
            "sum" | "prod" => {
                let mut cs = Vec::new();
                while !self.peek_close() {
                    cs.push(self.node()?);
                }
                if head == "sum" {
                    Node::Sum(cs)
                } else {
                    Node::Product(cs)
                }
            }
            other => return Err(Error::Parse { pos: head_pos, msg: format!("unknown node '{other}'") }),
        };
        self.expect(')')?;
        Ok(node)
    }
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::{check_frechet, fixed_step_diff};
    use crate::sample::Lcg;
    use crate::scalar::Rational;

    fn q(n: i64) -> QuadScalar {
        QuadScalar::from(n)
    }

    fn m(text: &str) -> WitnessModel {
        WitnessModel::parse(text).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let x = QuadScalar::new(Rational::new(3, 2), Rational::new(5, 7), 2).unwrap();
        assert_eq!(m("(surd 1)").eval(&[x]).unwrap(), QuadScalar::from(Rational::new(5, 7)));
        let s2 = QuadScalar::sqrt_d(2).unwrap();
        assert_eq!(m("(prod (surd 1) (surd 1))").eval(&[q(1) + &s2]).unwrap(), q(1));
        assert_eq!(m("(sum (poly 1 \"x^2\") (surd 1))").eval(std::slice::from_ref(&s2)).unwrap(), q(3));
        assert!(matches!(m("(surd 1)").eval(&[q(1), q(2)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn declared_orders() {
        assert_eq!(m("(surd 1)").declared_order(), 1);
        assert_eq!(m("(prod (surd 1) (surd 1))").declared_order(), 2);
        assert_eq!(m("(poly 1 \"x^3 - x\")").declared_order(), 3);
        assert_eq!(m("(pow (sum (surd 1) (poly 2 \"y\")) 3)").declared_order(), 3);
        assert_eq!(m("(scale \"-2\" (poly 2 \"x*y^2\"))").declared_order(), 3);
    }

    #[test]
    fn product_of_surds_has_tight_order_two() {
        let f = m("(prod (surd 1) (surd 1))");
        let mut rng = Lcg::new(7);
        let pairs = rng.frechet_pairs(100, 1, 6, 2);
        assert!(check_frechet(&f, 2, &pairs).unwrap().passed());
        assert!(!check_frechet(&f, 1, &pairs).unwrap().passed());
        let s2 = QuadScalar::sqrt_d(2).unwrap();
        assert_eq!(fixed_step_diff(&f, &[q(0)], &[s2], 2).unwrap(), q(2));
    }

    #[test]
    fn restriction_examples() {
        let f = m("(poly 2 \"x*y\")");
        let g = f.restrict_section(&SectionSpec { axis: 0, fixed: vec![q(2)] }).unwrap();
        assert_eq!(g.as_polynomial().unwrap(), parse_poly("2*x", Some(1)).unwrap());

        let f = m("(surd 2)");
        let a2 = QuadScalar::new(Rational::new(1, 3), Rational::new(-4, 5), 2).unwrap();
        let g = f.restrict_section(&SectionSpec { axis: 0, fixed: vec![a2] }).unwrap();
        assert_eq!(g.as_polynomial().unwrap(), TensorPoly::constant(1, QuadScalar::from(Rational::new(-4, 5))));

        let f = m("(sum (surd 1) (poly 2 \"y^2\"))");
        let g = f.restrict_section(&SectionSpec { axis: 0, fixed: vec![q(0)] }).unwrap();
        assert_eq!(g.simplify().root(), &Node::SurdPart(0));
        assert!(!g.is_structurally_polynomial());

        assert!(f.restrict_section(&SectionSpec { axis: 2, fixed: vec![q(0), q(0)] }).is_err());
        assert!(f.restrict_section(&SectionSpec { axis: 1, fixed: vec![] }).is_err());
    }

    #[test]
    fn restriction_commutes_with_evaluation() {
        let f = m("(sum (prod (surd 2) (poly 3 \"x + z^2\")) (pow (surd 3) 2) (scale \"sqrt(2)\" (surd 1)))");
        let mut rng = Lcg::new(11);
        for _ in 0..30 {
            let x = rng.point(3, 5, 2);
            for axis in 0..3 {
                let mut fixed = x.clone();
                let t = fixed.remove(axis);
                let g = f.restrict_section(&SectionSpec { axis, fixed }).unwrap();
                assert_eq!(g.eval(&[t]).unwrap(), f.eval(&x).unwrap());
            }
        }
    }

    #[test]
    fn structural_classification() {
        assert!(m("(poly 1 \"x^2\")").is_structurally_polynomial());
        assert!(!m("(surd 1)").is_structurally_polynomial());
        assert!(m("(sum (surd 1) (scale \"-1\" (surd 1)))").is_structurally_polynomial());
        assert!(m("(sum (prod (surd 1) (surd 2)) (scale \"-1\" (prod (surd 1) (surd 2))))").is_structurally_polynomial());
        assert!(m("(prod (poly 1 \"0\") (surd 1))").is_structurally_polynomial());
        assert!(!m("(sum (surd 1) (scale \"-1\" (surd 2)))").is_structurally_polynomial());
    }

    #[test]
    fn simplification_preserves_values() {
        let f = m("(sum (scale \"2\" (sum (surd 1) (poly 2 \"y\"))) (prod (scale \"3\" (surd 2)) (prod (poly 2 \"x\") (surd 2))) (pow (scale \"-1\" (surd 1)) 2) (scale \"-2\" (surd 1)))");
        let g = f.simplify();
        let mut rng = Lcg::new(3);
        for _ in 0..50 {
            let x = rng.point(2, 6, 2);
            assert_eq!(f.eval(&x).unwrap(), g.eval(&x).unwrap());
        }
        assert_eq!(g.simplify(), g);
    }

    #[test]
    fn text_round_trip() {
        for text in [
            "(surd 1)",
            "(sum (pow (surd 1) 2) (poly 1 \"-3 + 1 * t1^2\"))",
            "(scale \"3/2-5/7*sqrt(2)\" (prod (surd 2) (surd 1)))",
            "(model 3 (surd 1))",
        ] {
            let f = m(text);
            assert_eq!(f.to_string(), text);
            assert_eq!(m(&f.to_string()), f);
        }
        assert_eq!(m(" ( sum ( surd 2 ) ) ").nvars(), 2);
        assert_eq!(m("(model 3 (surd 1))").nvars(), 3);
    }

    #[test]
    fn parse_errors() {
        for bad in ["(surd 0)", "(surd)", "(frob 1)", "(surd 1", "(surd 1) x", "(poly 1 \"x +\")", "(model 1 (surd 2))", "(scale \"a\" (surd 1))"] {
            assert!(matches!(WitnessModel::parse(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
