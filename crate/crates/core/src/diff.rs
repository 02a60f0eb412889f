//! Difference operators and a sampled checker for `Δ_h^{m+1} f = 0`.

use crate::error::{Error, Result};
use crate::poly::TensorPoly;
use crate::scalar::{QuadScalar, Rational};

/// A function `Q(√d)^n → Q(√d)` that can be evaluated exactly.
pub trait Evaluate {
    fn eval_at(&self, x: &[QuadScalar]) -> Result<QuadScalar>;
}

impl<F> Evaluate for F
where
    F: Fn(&[QuadScalar]) -> Result<QuadScalar>,
{
    fn eval_at(&self, x: &[QuadScalar]) -> Result<QuadScalar> {
        self(x)
    }
}

impl Evaluate for TensorPoly {
    fn eval_at(&self, x: &[QuadScalar]) -> Result<QuadScalar> {
        self.eval(x)
    }
}

/// `x + c·h`, coordinate-wise.
pub(crate) fn shifted(x: &[QuadScalar], c: &QuadScalar, h: &[QuadScalar]) -> Vec<QuadScalar> {
    x.iter().zip(h).map(|(a, b)| a + c * b).collect()
}

fn check_same_len(x: &[QuadScalar], h: &[QuadScalar]) -> Result<()> {
    if x.len() != h.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: h.len() });
    }
    Ok(())
}

fn binomials(k: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for j in 0..k {
        let next = &row[j] * &Rational::new((k - j) as i64, (j + 1) as i64);
        row.push(next);
    }
    row
}

/// `Δ_h^k f(x) = Σ_{j=0}^{k} C(k,j) (-1)^{k-j} f(x + j·h)`.
pub fn fixed_step_diff<F: Evaluate + ?Sized>(f: &F, x: &[QuadScalar], h: &[QuadScalar], k: usize) -> Result<QuadScalar> {
    check_same_len(x, h)?;
    let mut acc = QuadScalar::zero();
    for (j, c) in binomials(k).into_iter().enumerate() {
        let value = f.eval_at(&shifted(x, &QuadScalar::from(j as i64), h))?;
        let term = value * QuadScalar::from(c);
        if (k - j).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// `Δ_h^k f(x)` by applying `Δ_h^1` `k` times to the samples
/// `f(x), f(x+h), ..., f(x+k·h)`.
pub fn iterated_diff<F: Evaluate + ?Sized>(f: &F, x: &[QuadScalar], h: &[QuadScalar], k: usize) -> Result<QuadScalar> {
    check_same_len(x, h)?;
    let mut row = (0..=k)
        .map(|j| f.eval_at(&shifted(x, &QuadScalar::from(j as i64), h)))
        .collect::<Result<Vec<_>>>()?;
    for _ in 0..k {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(row.pop().expect("one entry remains"))
}

/// `Δ_{h_1}(Δ_{h_2 ... h_k} f)(x)`.
pub fn variable_step_diff<F: Evaluate + ?Sized>(f: &F, x: &[QuadScalar], steps: &[Vec<QuadScalar>]) -> Result<QuadScalar> {
    match steps.split_first() {
        None => f.eval_at(x),
        Some((h, rest)) => {
            check_same_len(x, h)?;
            let ahead = variable_step_diff(f, &shifted(x, &QuadScalar::one(), h), rest)?;
            let here = variable_step_diff(f, x, rest)?;
            Ok(ahead - here)
        }
    }
}

/// The first nonzero difference found by a checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Position in the caller's sample.
    pub index: usize,
    pub x: Vec<QuadScalar>,
    /// One step for the fixed-step form, `order` steps for the variable form.
    pub steps: Vec<Vec<QuadScalar>>,
    pub value: QuadScalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrechetReport {
    /// `m + 1`.
    pub order: usize,
    pub tested_pairs: usize,
    pub first_violation: Option<Violation>,
}

impl FrechetReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Evaluates `Δ_h^{m+1} f(x)` on every sampled `(x, h)` and reports the
/// first pair (in sample order) where it does not vanish.
pub fn check_frechet<F: Evaluate + ?Sized>(f: &F, m: usize, sample: &[(Vec<QuadScalar>, Vec<QuadScalar>)]) -> Result<FrechetReport> {
    if sample.is_empty() {
        return Err(Error::InvalidInput("empty sample".into()));
    }
    for (index, (x, h)) in sample.iter().enumerate() {
        let value = fixed_step_diff(f, x, h, m + 1)?;
        if !value.is_zero() {
            return Ok(FrechetReport {
                order: m + 1,
                tested_pairs: index + 1,
                first_violation: Some(Violation { index, x: x.clone(), steps: vec![h.clone()], value }),
            });
        }
    }
    Ok(FrechetReport { order: m + 1, tested_pairs: sample.len(), first_violation: None })
}

/// Variable-step form: `Δ_{h_1 ... h_{m+1}} f(x)` on every sampled tuple.
pub fn check_frechet_variable<F: Evaluate + ?Sized>(
    f: &F,
    m: usize,
    sample: &[(Vec<QuadScalar>, Vec<Vec<QuadScalar>>)],
) -> Result<FrechetReport> {
    if sample.is_empty() {
        return Err(Error::InvalidInput("empty sample".into()));
    }
    for (index, (x, steps)) in sample.iter().enumerate() {
        if steps.len() != m + 1 {
            return Err(Error::DimensionMismatch { expected: m + 1, found: steps.len() });
        }
        let value = variable_step_diff(f, x, steps)?;
        if !value.is_zero() {
            return Ok(FrechetReport {
                order: m + 1,
                tested_pairs: index + 1,
                first_violation: Some(Violation { index, x: x.clone(), steps: steps.clone(), value }),
            });
        }
    }
    Ok(FrechetReport { order: m + 1, tested_pairs: sample.len(), first_violation: None })
}
