//! The shear decomposition `P(x, y) = Σ_i A_i(x + y) x^i` of a bivariate
//! polynomial, its anti-diagonal slices, and the Jacobian determinants of
//! the maps `t ↦ (a + Σ t_k v_k, P(t))`.

use num_complex::Complex64;

use crate::diff::Evaluate;
use crate::error::{Error, Result};
use crate::interp::{build_interpolant, GridSpec};
use crate::poly::{AffineForm, TensorPoly, UniPoly};
use crate::scalar::{QuadScalar, Rational};

/// Coefficients `A_0..A_{2m}` of `P(x, y) = Σ A_i(x + y) x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearDecomposition {
    m: usize,
    coeffs: Vec<UniPoly>,
}

impl ShearDecomposition {
    /// The degree bound `m`; there are `2m + 1` coefficients.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Largest `N` with `A_N ≠ 0`; `None` for the zero polynomial.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|a| !a.is_zero())
    }

    /// `A_N`, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&UniPoly> {
        self.leading_index().map(|n| &self.coeffs[n])
    }

    /// `N ≥ 1`: the source is not a function of `x + y` alone.
    pub fn is_strict(&self) -> bool {
        self.leading_index().is_some_and(|n| n >= 1)
    }

    /// `Σ A_i(x + y) x^i`, expanded binomially.
    pub fn recompose(&self) -> TensorPoly {
        let x = TensorPoly::var(2, 0);
        let mut out = TensorPoly::zero(2, 0);
        let mut x_pow = TensorPoly::constant(2, QuadScalar::one());
        for a in &self.coeffs {
            if !a.is_zero() {
                out = &out + &(&of_sum(a) * &x_pow);
            }
            x_pow = &x_pow * &x;
        }
        out.trimmed()
    }
}

/// `u(x + y)` by binomial expansion of each power.
fn of_sum(u: &UniPoly) -> TensorPoly {
    let mut terms = Vec::new();
    for (j, c) in u.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut binom = Rational::one();
        for i in 0..=j {
            terms.push((vec![i, j - i], c * &QuadScalar::from(binom.clone())));
            binom = &binom * &Rational::new((j - i) as i64, (i + 1) as i64);
        }
    }
    TensorPoly::from_terms(2, terms).expect("bivariate terms")
}

/// Decomposes `P ∈ Π²_{m,max}` by substituting `y ← t - x` and collecting
/// powers of `x`. Every `A_i` has degree at most `m`.
pub fn shear_decompose(p: &TensorPoly, m: usize) -> Result<ShearDecomposition> {
    if p.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: p.nvars() });
    }
    if p.trimmed().maxdeg() > m {
        return Err(Error::InvalidInput(format!("polynomial has per-variable degree above {m}")));
    }
    // Variable 1 becomes t: P(x, t - x).
    let form = AffineForm::new(QuadScalar::zero(), vec![-QuadScalar::one(), QuadScalar::one()]);
    let sheared = p.substitute_affine(1, &form)?;
    let mut cols = vec![vec![QuadScalar::zero(); m + 1]; 2 * m + 1];
    for (e, c) in sheared.terms() {
        let (i, j) = (e[0], e[1]);
        if i > 2 * m || j > m {
            return Err(Error::Inconsistency(format!("sheared term x^{i} t^{j} exceeds the degree bound")));
        }
        cols[i][j] = c.clone();
    }
    Ok(ShearDecomposition { m, coeffs: cols.into_iter().map(UniPoly::new).collect() })
}

/// `m_α(x) = Σ A_i(α) x^i = P(x, α - x)`.
pub fn slice_polynomial(dec: &ShearDecomposition, alpha: &QuadScalar) -> UniPoly {
    UniPoly::new(dec.coeffs.iter().map(|a| a.eval(alpha)).collect())
}

/// `P_y - P_x`, computed from the partials and from `-Σ k A_k(x + y) x^{k-1}`.
/// The two must agree exactly.
pub fn bivariate_jacobian(p: &TensorPoly, dec: &ShearDecomposition) -> Result<TensorPoly> {
    if p.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: p.nvars() });
    }
    let direct = (&p.partial_derivative(1)? - &p.partial_derivative(0)?).trimmed();
    let x = TensorPoly::var(2, 0);
    let mut formula = TensorPoly::zero(2, 0);
    let mut x_pow = TensorPoly::constant(2, QuadScalar::one());
    for (k, a) in dec.coeffs.iter().enumerate().skip(1) {
        if !a.is_zero() {
            let term = &of_sum(a) * &x_pow;
            formula = &formula - &term.scale(&QuadScalar::from(k as i64));
        }
        x_pow = &x_pow * &x;
    }
    let formula = formula.trimmed();
    if direct != formula {
        return Err(Error::Inconsistency(format!("P_y - P_x = {direct} but the shear formula gives {formula}")));
    }
    Ok(direct)
}

/// `ξ = ∂P/∂t_{n+1} - ∂P/∂t_s` for `P` in `n + 1` variables, 0-based `s < n`.
pub fn xi_determinant(p: &TensorPoly, s: usize) -> Result<TensorPoly> {
    let last = p.nvars() - 1;
    if s >= last {
        return Err(Error::IndexOutOfRange { index: s, len: last });
    }
    Ok((&p.partial_derivative(last)? - &p.partial_derivative(s)?).trimmed())
}

/// `(t_s, t_{n+1}) ↦ P(0, ..., t_s, ..., 0, t_{n+1})`.
pub fn restrict_to_plane(p: &TensorPoly, s: usize) -> Result<TensorPoly> {
    let last = p.nvars() - 1;
    if s >= last {
        return Err(Error::IndexOutOfRange { index: s, len: last });
    }
    let assignment: Vec<Option<QuadScalar>> =
        (0..=last).map(|k| if k == s || k == last { None } else { Some(QuadScalar::zero()) }).collect();
    p.partial_eval(&assignment)
}

/// The roots of `A_N` that lie in `Q(√d)`, ascending. Empty for the zero
/// polynomial.
///
/// Degrees up to two are solved in closed form. Above that, real roots of
/// `A_N` and of its conjugate are located numerically, each pair `(r, s)`
/// proposes `(r + s)/2 + (r - s)/(2√d)·√d` through continued-fraction
/// approximation, and only candidates that are exact roots are kept. Roots
/// whose parts need denominators beyond `10^9` may be missed.
pub fn forbidden_alphas(dec: &ShearDecomposition, d: u32) -> Result<Vec<QuadScalar>> {
    let Some(lead) = dec.leading() else {
        return Ok(Vec::new());
    };
    field_roots(lead, d)
}

/// Roots of `u` in `Q(√d)`, ascending and without repetition.
pub fn field_roots(u: &UniPoly, d: u32) -> Result<Vec<QuadScalar>> {
    let sqrt_d = QuadScalar::sqrt_d(d)?;
    for c in u.coeffs() {
        c.common_field(&sqrt_d)?;
    }
    let mut roots: Vec<QuadScalar> = Vec::new();
    let mut rest = u.clone();
    loop {
        match rest.degree() {
            None | Some(0) => break,
            Some(1) | Some(2) => {
                roots.extend(low_degree_roots(&rest, d));
                break;
            }
            Some(_) => {
                let found = numeric_candidates(&rest, d).into_iter().find(|z| rest.eval(z).is_zero());
                match found {
                    Some(z) => {
                        while rest.eval(&z).is_zero() {
                            rest = deflate(&rest, &z);
                        }
                        roots.push(z);
                    }
                    None => break,
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Quotient of `u` by `t - z`, assuming `u(z) = 0`.
fn deflate(u: &UniPoly, z: &QuadScalar) -> UniPoly {
    let c = u.coeffs();
    let n = c.len() - 1;
    let mut q = vec![QuadScalar::zero(); n];
    let mut carry = QuadScalar::zero();
    for k in (1..=n).rev() {
        carry = &c[k] + &(&carry * z);
        q[k - 1] = carry.clone();
    }
    UniPoly::new(q)
}

fn low_degree_roots(u: &UniPoly, d: u32) -> Vec<QuadScalar> {
    let c = u.coeffs();
    if c.len() == 2 {
        return vec![-(&c[0] * &c[1].recip())];
    }
    let disc = &c[1] * &c[1] - QuadScalar::from(4) * &c[2] * &c[0];
    let Some(s) = field_sqrt(&disc, d) else {
        return Vec::new();
    };
    let inv = (QuadScalar::from(2) * &c[2]).recip();
    vec![(-&c[1] + &s) * &inv, (-&c[1] - &s) * &inv]
}

/// A square root of `z` inside `Q(√d)`, if one exists.
pub fn field_sqrt(z: &QuadScalar, d: u32) -> Option<QuadScalar> {
    let (x, y) = (z.rat(), z.surd_part());
    let dr = Rational::from(d as i64);
    if y.is_zero() {
        if let Some(r) = x.sqrt_exact() {
            return Some(QuadScalar::from(r));
        }
        let q = (x * &dr.recip()).sqrt_exact()?;
        return QuadScalar::new(Rational::zero(), q, d).ok();
    }
    // (p + q√d)² = z needs p² + d q² = x and 2pq = y.
    let n = (x * x - &dr * y * y).sqrt_exact()?;
    let two = Rational::from(2);
    for p2 in [(x + &n) * two.recip(), (x - &n) * two.recip()] {
        if let Some(p) = p2.sqrt_exact().filter(|p| !p.is_zero()) {
            let q = y * &(&two * &p).recip();
            let cand = QuadScalar::new(p, q, d).ok()?;
            if &(&cand * &cand) == z {
                return Some(cand);
            }
        }
    }
    None
}

fn numeric_candidates(u: &UniPoly, d: u32) -> Vec<QuadScalar> {
    let re = |p: &UniPoly| -> Vec<f64> { p.coeffs().iter().map(QuadScalar::to_f64).collect() };
    let own = real_roots(&re(u));
    let conj = real_roots(&re(&u.conjugate()));
    let sd = (d as f64).sqrt();
    let mut out = Vec::new();
    for r in &own {
        for s in &conj {
            let a = (r + s) / 2.0;
            let b = (r - s) / (2.0 * sd);
            for pa in convergents(a) {
                for pb in convergents(b) {
                    if let Ok(z) = QuadScalar::new(pa.clone(), pb, d) {
                        out.push(z);
                    }
                }
            }
        }
    }
    out
}

/// Continued-fraction convergents of `x` with denominators up to `10^9`,
/// most accurate last.
fn convergents(x: f64) -> Vec<Rational> {
    const MAX_DEN: i128 = 1_000_000_000;
    let mut out = Vec::new();
    if !x.is_finite() || x.abs() > 1e15 {
        return out;
    }
    let (mut h0, mut h1) = (1i128, x.floor() as i128);
    let (mut k0, mut k1) = (0i128, 1i128);
    let mut frac = x - x.floor();
    out.push(Rational::new(h1 as i64, 1));
    while frac.abs() > 1e-12 && out.len() < 40 {
        let inv = 1.0 / frac;
        let a = inv.floor() as i128;
        frac = inv - inv.floor();
        let (h2, k2) = (a * h1 + h0, a * k1 + k0);
        if k2 > MAX_DEN || h2.abs() > i64::MAX as i128 {
            break;
        }
        out.push(Rational::new(h2 as i64, k2 as i64));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    out.into_iter().rev().take(4).collect()
}

/// Real roots (to double precision) of the polynomial with ascending
/// coefficients `c`, by Durand–Kerner iteration.
fn real_roots(c: &[f64]) -> Vec<f64> {
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    let eval = |x: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if delta < 1e-15 {
            break;
        }
    }
    z.into_iter().filter(|r| r.im.abs() <= 1e-6 * (1.0 + r.re.abs())).map(|r| r.re).collect()
}

/// A grid `(x_0, h_1, h_2)` whose bivariate interpolant has `N ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictFrame {
    pub x0: QuadScalar,
    pub h1: QuadScalar,
    pub h2: QuadScalar,
    pub interpolant: TensorPoly,
    pub decomposition: ShearDecomposition,
}

/// Searches `(x_0, h_1, h_2)` over `candidates` for a frame where the
/// interpolant of the univariate `f` on `x_0 + i h_1 + j h_2` has `N ≥ 1`.
///
/// Triples are visited by increasing largest candidate index, then
/// lexicographically, so earlier candidates are preferred. Zero steps are
/// skipped. Gives up after `budget` interpolations.
pub fn find_strict_frame<F: Evaluate + ?Sized>(
    f: &F,
    m: usize,
    candidates: &[QuadScalar],
    budget: usize,
) -> Result<StrictFrame> {
    let mut tried = 0;
    let one = QuadScalar::one();
    for top in 0..candidates.len() {
        for i in 0..=top {
            for j in 0..=top {
                let ks = if i < top && j < top { top..=top } else { 0..=top };
                for k in ks {
                    let (x0, h1, h2) = (&candidates[i], &candidates[j], &candidates[k]);
                    if h1.is_zero() || h2.is_zero() {
                        continue;
                    }
                    if tried == budget {
                        return Err(Error::SearchExhausted { tried });
                    }
                    tried += 1;
                    let g = GridSpec::new(vec![x0.clone()], vec![h1.clone(), h2.clone()], vec![vec![one.clone()], vec![one.clone()]], m)?;
                    let p = build_interpolant(f, &g)?;
                    let dec = shear_decompose(&p, m)?;
                    if dec.is_strict() {
                        return Ok(StrictFrame {
                            x0: x0.clone(),
                            h1: h1.clone(),
                            h2: h2.clone(),
                            interpolant: p,
                            decomposition: dec,
                        });
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted { tried })
}

/// Elements `a + b√d` with `a, b` of height at most `height`, ordered by
/// height and then by value.
pub fn candidates_by_height(height: u32, d: u32) -> Result<Vec<QuadScalar>> {
    let h = height as i64;
    let mut rats = Vec::new();
    for den in 1..=h {
        for num in -h..=h {
            if num_integer::gcd(num, den) == 1 {
                rats.push(Rational::new(num, den));
            }
        }
    }
    let mut out = Vec::with_capacity(rats.len() * rats.len());
    for a in &rats {
        for b in &rats {
            out.push(QuadScalar::new(a.clone(), b.clone(), d)?);
        }
    }
    out.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::WitnessModel;
    use crate::poly::parse_poly;
    use crate::sample::Lcg;
    use crate::scalar::DEFAULT_D;

    fn q(n: i64) -> QuadScalar {
        QuadScalar::from(n)
    }

    fn s2() -> QuadScalar {
        QuadScalar::sqrt_d(2).unwrap()
    }

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| q(c)).collect())
    }

    fn p2(text: &str) -> TensorPoly {
        parse_poly(text, Some(2)).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let d = shear_decompose(&p2("x*y"), 1).unwrap();
        assert_eq!(d.coeffs(), &[UniPoly::zero(), up(&[0, 1]), up(&[-1])]);
        assert_eq!(d.leading_index(), Some(2));

        let d = shear_decompose(&p2("(x+y)^3"), 3).unwrap();
        assert_eq!(d.coeffs()[0], up(&[0, 0, 0, 1]));
        assert!(d.coeffs()[1..].iter().all(UniPoly::is_zero));
        assert_eq!(d.leading_index(), Some(0));
        assert!(!d.is_strict());

        // x^2 (t - x)^2 = t^2 x^2 - 2t x^3 + x^4.
        let d = shear_decompose(&p2("x^2*y^2"), 2).unwrap();
        assert_eq!(d.coeffs()[2], up(&[0, 0, 1]));
        assert_eq!(d.coeffs()[3], up(&[0, -2]));
        assert_eq!(d.coeffs()[4], up(&[1]));
        assert_eq!(d.leading_index(), Some(4));

        assert_eq!(shear_decompose(&TensorPoly::zero(2, 1), 1).unwrap().leading_index(), None);
        assert!(shear_decompose(&p2("x^3"), 2).is_err());
    }

    #[test]
    fn round_trip_on_random_polynomials() {
        let mut rng = Lcg::new(17);
        for m in 1..=4 {
            for _ in 0..10 {
                let coeffs = (0..(m + 1) * (m + 1)).map(|_| rng.quad(10, DEFAULT_D)).collect();
                let p = TensorPoly::from_dense(2, m, coeffs).unwrap();
                let d = shear_decompose(&p, m).unwrap();
                assert!(d.coeffs().iter().all(|a| a.degree().is_none_or(|k| k <= m)));
                assert_eq!(d.recompose(), p);
                let alpha = rng.quad(5, DEFAULT_D);
                let x = rng.quad(5, DEFAULT_D);
                assert_eq!(slice_polynomial(&d, &alpha).eval(&x), p.eval(&[x.clone(), &alpha - &x]).unwrap());
                bivariate_jacobian(&p, &d).unwrap();
            }
        }
    }

    #[test]
    fn slices() {
        let d = shear_decompose(&p2("x*y"), 1).unwrap();
        assert_eq!(slice_polynomial(&d, &q(3)), up(&[0, 3, -1]));
        let d = shear_decompose(&p2("(x+y)^3"), 3).unwrap();
        assert_eq!(slice_polynomial(&d, &q(2)), up(&[8]));
        let w = p2("sqrt(2)/2*u");
        let d = shear_decompose(&w, 1).unwrap();
        let half_s2 = s2() * QuadScalar::from(Rational::new(1, 2));
        assert_eq!(d.coeffs()[0], UniPoly::zero());
        assert_eq!(d.coeffs()[1], UniPoly::constant(half_s2.clone()));
        assert_eq!(d.leading_index(), Some(1));
        assert_eq!(slice_polynomial(&d, &q(7)), UniPoly::monomial(half_s2, 1));
    }

    fn dec_with_leading(a: UniPoly) -> ShearDecomposition {
        ShearDecomposition { m: 2, coeffs: vec![UniPoly::zero(), a, UniPoly::zero(), UniPoly::zero(), UniPoly::zero()] }
    }

    #[test]
    fn forbidden_alpha_examples() {
        assert_eq!(forbidden_alphas(&dec_with_leading(up(&[-1, 1])), 2).unwrap(), vec![q(1)]);
        assert_eq!(forbidden_alphas(&dec_with_leading(up(&[-2, 0, 1])), 2).unwrap(), vec![-s2(), s2()]);
        assert!(forbidden_alphas(&dec_with_leading(up(&[1])), 2).unwrap().is_empty());
        assert!(forbidden_alphas(&dec_with_leading(up(&[-3, 0, 1])), 2).unwrap().is_empty());
        assert!(forbidden_alphas(&dec_with_leading(up(&[1, 0, 1])), 2).unwrap().is_empty());
        let zero = ShearDecomposition { m: 1, coeffs: vec![UniPoly::zero(); 3] };
        assert!(forbidden_alphas(&zero, 2).unwrap().is_empty());
    }

    #[test]
    fn field_roots_of_higher_degree() {
        // (t - 1/3)(t - 2 - √2)(t + √2/5)(t^2 + 1) with a double root at 1/3.
        let lin = |z: QuadScalar| UniPoly::new(vec![-z, q(1)]);
        let third = QuadScalar::from(Rational::new(1, 3));
        let r2 = q(2) + s2();
        let r3 = -(s2() * QuadScalar::from(Rational::new(1, 5)));
        let u = [lin(third.clone()), lin(third.clone()), lin(r2.clone()), lin(r3.clone()), up(&[1, 0, 1])]
            .iter()
            .fold(up(&[7]), |acc, f| &acc * f);
        let mut expect = vec![third, r2, r3];
        expect.sort();
        assert_eq!(field_roots(&u, 2).unwrap(), expect);
        // An irrational quadratic over the field: t^2 - (3 + 2√2) = (t - (1 + √2))(t + 1 + √2).
        let v = UniPoly::new(vec![-(q(3) + q(2) * s2()), q(0), q(1)]);
        assert_eq!(field_roots(&v, 2).unwrap(), vec![-(q(1) + s2()), q(1) + s2()]);
        assert!(matches!(field_roots(&v, 3), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn jacobian_examples() {
        let cases = [("x*y", 1, "x - y"), ("(x+y)^3", 3, "0"), ("x^2*y^2", 2, "2*x^2*y - 2*x*y^2")];
        for (src, m, want) in cases {
            let p = p2(src);
            let d = shear_decompose(&p, m).unwrap();
            assert_eq!(bivariate_jacobian(&p, &d).unwrap(), p2(want), "{src}");
        }
        let p = p2("x*y");
        let wrong = shear_decompose(&p2("x^2*y"), 2).unwrap();
        assert!(matches!(bivariate_jacobian(&p, &wrong), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn xi_examples() {
        let p = parse_poly("t2*t3", Some(3)).unwrap();
        assert_eq!(xi_determinant(&p, 1).unwrap(), parse_poly("t2 - t3", Some(3)).unwrap());
        let p = parse_poly("t2^2 + 5", Some(3)).unwrap();
        assert!(xi_determinant(&p, 0).unwrap().is_zero());
        assert!(matches!(xi_determinant(&p, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn restriction_identity_for_multivariate_witness() {
        let f = WitnessModel::parse("(sum (prod (surd 1) (surd 2)) (poly 2 \"x*y\") (surd 2))").unwrap();
        let m = f.declared_order();
        let a = vec![QuadScalar::from(Rational::new(1, 2)), s2()];
        let steps = vec![q(1), s2(), q(2) - s2()];
        for s in 0..2 {
            let g = GridSpec::coordinate_frame(a.clone(), steps.clone(), s, m).unwrap();
            let big = build_interpolant(&f, &g).unwrap();
            let mut fixed = a.clone();
            let a_s = fixed.remove(s);
            let section = f.restrict_section(&crate::model::SectionSpec { axis: s, fixed }).unwrap();
            let g2 = GridSpec::new(vec![a_s], vec![steps[s].clone(), steps[2].clone()], vec![vec![q(1)], vec![q(1)]], m).unwrap();
            let small = build_interpolant(&section, &g2).unwrap();
            assert_eq!(restrict_to_plane(&big, s).unwrap(), small);

            let xi = xi_determinant(&big, s).unwrap();
            let d = shear_decompose(&small, m).unwrap();
            assert_eq!(restrict_to_plane(&xi, s).unwrap(), bivariate_jacobian(&small, &d).unwrap());
        }
    }

    #[test]
    fn strict_frame_search() {
        let f = WitnessModel::parse("(surd 1)").unwrap();
        let cands = candidates_by_height(1, 2).unwrap();
        assert_eq!(cands.len(), 9);
        let frame = find_strict_frame(&f, 1, &cands, 1000).unwrap();
        assert!(frame.decomposition.is_strict());
        assert!(!frame.h1.is_rational() || !frame.h2.is_rational());

        let poly = WitnessModel::parse("(poly 1 \"x^2\")").unwrap();
        assert!(matches!(find_strict_frame(&poly, 2, &cands, 50), Err(Error::SearchExhausted { tried: 50 })));
    }

    #[test]
    fn candidate_order() {
        let c = candidates_by_height(2, 2).unwrap();
        assert!(c.windows(2).all(|w| (w[0].height(), &w[0]) < (w[1].height(), &w[1])));
        assert_eq!(c.len(), 49);
    }
}
