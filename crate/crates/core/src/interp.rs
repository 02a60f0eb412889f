//! Tensor-product interpolation on affine grids `a + Σ i_k h_k v_k` and
//! checks that the interpolant extends to integer and rational indices.

use crate::diff::Evaluate;
use crate::error::{Error, Result};
use crate::poly::{TensorPoly, UniPoly};
use crate::scalar::QuadScalar;

/// Grid data: base point `a ∈ Q(√d)^n`, steps `h_1..h_{n+1}`, directions
/// `v_1..v_{n+1} ∈ Q(√d)^n` and the per-variable degree bound `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    a: Vec<QuadScalar>,
    steps: Vec<QuadScalar>,
    dirs: Vec<Vec<QuadScalar>>,
    m: usize,
}

impl GridSpec {
    /// Requires `n ≥ 1`, `n + 1` nonzero steps and `n + 1` nonzero
    /// directions of length `n`.
    pub fn new(a: Vec<QuadScalar>, steps: Vec<QuadScalar>, dirs: Vec<Vec<QuadScalar>>, m: usize) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidGrid("base point has no coordinates".into()));
        }
        if steps.len() != n + 1 {
            return Err(Error::InvalidGrid(format!("expected {} steps, found {}", n + 1, steps.len())));
        }
        if dirs.len() != n + 1 {
            return Err(Error::InvalidGrid(format!("expected {} directions, found {}", n + 1, dirs.len())));
        }
        if let Some(k) = steps.iter().position(QuadScalar::is_zero) {
            return Err(Error::InvalidGrid(format!("step {} is zero", k + 1)));
        }
        for (k, v) in dirs.iter().enumerate() {
            if v.len() != n {
                return Err(Error::InvalidGrid(format!("direction {} has {} coordinates, expected {n}", k + 1, v.len())));
            }
            if v.iter().all(QuadScalar::is_zero) {
                return Err(Error::InvalidGrid(format!("direction {} is zero", k + 1)));
            }
        }
        Ok(GridSpec { a, steps, dirs, m })
    }

    /// `v_k = e_k` for `k ≤ n` and `v_{n+1} = e_s` (0-based `s`).
    pub fn coordinate_frame(a: Vec<QuadScalar>, steps: Vec<QuadScalar>, s: usize, m: usize) -> Result<Self> {
        let n = a.len();
        if s >= n {
            return Err(Error::IndexOutOfRange { index: s, len: n });
        }
        let unit = |j: usize| (0..n).map(|i| if i == j { QuadScalar::one() } else { QuadScalar::zero() }).collect();
        let mut dirs: Vec<Vec<QuadScalar>> = (0..n).map(unit).collect();
        dirs.push(unit(s));
        Self::new(a, steps, dirs, m)
    }

    /// Dimension `n` of the domain.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[QuadScalar] {
        &self.a
    }

    pub fn steps(&self) -> &[QuadScalar] {
        &self.steps
    }

    pub fn dirs(&self) -> &[Vec<QuadScalar>] {
        &self.dirs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `a + Σ t_k v_k`.
    pub fn position(&self, t: &[QuadScalar]) -> Result<Vec<QuadScalar>> {
        if t.len() != self.steps.len() {
            return Err(Error::DimensionMismatch { expected: self.steps.len(), found: t.len() });
        }
        let mut x = self.a.clone();
        for (tk, v) in t.iter().zip(&self.dirs) {
            if tk.is_zero() {
                continue;
            }
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &(tk * vi);
            }
        }
        Ok(x)
    }

    /// Parameter point `(i_1 h_1, ..., i_{n+1} h_{n+1})`.
    pub fn parameter(&self, index: &[i64]) -> Vec<QuadScalar> {
        index.iter().zip(&self.steps).map(|(&i, h)| QuadScalar::from(i) * h).collect()
    }

    /// Grid node `a + Σ i_k h_k v_k`.
    pub fn node(&self, index: &[i64]) -> Result<Vec<QuadScalar>> {
        self.position(&self.parameter(index))
    }

    /// Same base and directions with steps `h_k / p_k`.
    pub fn refined(&self, denominators: &[i64]) -> Result<Self> {
        if denominators.len() != self.steps.len() {
            return Err(Error::DimensionMismatch { expected: self.steps.len(), found: denominators.len() });
        }
        if denominators.contains(&0) {
            return Err(Error::InvalidInput("denominators must be nonzero".into()));
        }
        let steps = self
            .steps
            .iter()
            .zip(denominators)
            .map(|(h, &p)| h * &QuadScalar::from(p).recip())
            .collect();
        Ok(GridSpec { steps, ..self.clone() })
    }
}

/// Values `f_{i_1..i_k}` for `0 ≤ i_j ≤ m`, row-major with the first index
/// most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleTensor {
    naxes: usize,
    m: usize,
    values: Vec<QuadScalar>,
}

impl SampleTensor {
    pub fn new(naxes: usize, m: usize, values: Vec<QuadScalar>) -> Result<Self> {
        let expected = (m + 1).checked_pow(naxes as u32).ok_or_else(|| Error::InvalidInput("tensor too large".into()))?;
        if naxes == 0 || values.len() != expected {
            return Err(Error::InvalidInput(format!("expected {expected} samples for {naxes} axes, found {}", values.len())));
        }
        Ok(SampleTensor { naxes, m, values })
    }

    /// Samples `f` at every grid node.
    pub fn from_grid<F: Evaluate + ?Sized>(f: &F, g: &GridSpec) -> Result<Self> {
        let naxes = g.steps.len();
        let values = MultiIndex::new(vec![(0, g.m as i64); naxes])
            .map(|i| f.eval_at(&g.node(&i)?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(naxes, g.m, values)
    }

    pub fn naxes(&self) -> usize {
        self.naxes
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[QuadScalar] {
        &self.values
    }
}

/// Lexicographic odometer over a box of integer multi-indices.
pub(crate) struct MultiIndex {
    ranges: Vec<(i64, i64)>,
    next: Option<Vec<i64>>,
}

impl MultiIndex {
    pub(crate) fn new(ranges: Vec<(i64, i64)>) -> Self {
        let next = if ranges.iter().all(|(lo, hi)| lo <= hi) {
            Some(ranges.iter().map(|r| r.0).collect())
        } else {
            None
        };
        MultiIndex { ranges, next }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for k in (0..succ.len()).rev() {
            if succ[k] < self.ranges[k].1 {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.ranges[k].0;
        }
        Some(current)
    }
}

/// Monomial coefficients of the interpolant of `y_j` at nodes `j·h`,
/// `j = 0..=m`, via forward differences and the Newton form.
fn fit_equispaced(y: &[QuadScalar], h: &QuadScalar) -> Vec<QuadScalar> {
    let m = y.len() - 1;
    let mut diffs = y.to_vec();
    let mut newton = Vec::with_capacity(m + 1);
    let h_inv = h.recip();
    let mut scale = QuadScalar::one();
    for j in 0..=m {
        // `Δ^j y_0 / (j! h^j)`.
        newton.push(&diffs[0] * &scale);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        scale = &scale * &h_inv * QuadScalar::from((j + 1) as i64).recip();
    }
    let mut poly = UniPoly::constant(newton[m].clone());
    for j in (0..m).rev() {
        let factor = UniPoly::new(vec![-(QuadScalar::from(j as i64) * h), QuadScalar::one()]);
        poly = &(&poly * &factor) + &UniPoly::constant(newton[j].clone());
    }
    let mut coeffs = poly.coeffs().to_vec();
    coeffs.resize(m + 1, QuadScalar::zero());
    coeffs
}

/// The unique `P ∈ Π^k_{m,max}` with `P(i_1 h_1, ..., i_k h_k) = f_{i_1..i_k}`.
pub fn fit_tensor_grid(samples: &SampleTensor, steps: &[QuadScalar], m: usize) -> Result<TensorPoly> {
    let order: Vec<usize> = (0..samples.naxes).collect();
    fit_tensor_grid_in_order(samples, steps, m, &order)
}

/// As [`fit_tensor_grid`], fitting the axes in the given order.
pub fn fit_tensor_grid_in_order(samples: &SampleTensor, steps: &[QuadScalar], m: usize, order: &[usize]) -> Result<TensorPoly> {
    let k = samples.naxes;
    if samples.m != m {
        return Err(Error::InvalidInput(format!("tensor holds degree {} samples, expected {m}", samples.m)));
    }
    if steps.len() != k {
        return Err(Error::InvalidInput(format!("expected {k} steps, found {}", steps.len())));
    }
    if let Some(j) = steps.iter().position(QuadScalar::is_zero) {
        return Err(Error::InvalidGrid(format!("step {} is zero", j + 1)));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return Err(Error::InvalidInput("axis order must be a permutation".into()));
    }
    let side = m + 1;
    let mut data = samples.values.clone();
    let mut fiber = Vec::with_capacity(side);
    for &axis in order {
        let stride = side.pow((k - 1 - axis) as u32);
        for base in 0..data.len() {
            if !(base / stride).is_multiple_of(side) {
                continue;
            }
            fiber.clear();
            fiber.extend((0..side).map(|j| data[base + j * stride].clone()));
            for (j, c) in fit_equispaced(&fiber, &steps[axis]).into_iter().enumerate() {
                data[base + j * stride] = c;
            }
        }
    }
    TensorPoly::from_dense(k, m, data)
}

/// `P_{a,h,γ}`: samples `f` on the grid and fits.
pub fn build_interpolant<F: Evaluate + ?Sized>(f: &F, g: &GridSpec) -> Result<TensorPoly> {
    fit_tensor_grid(&SampleTensor::from_grid(f, g)?, &g.steps, g.m)
}

/// `[-b, m + b]` on each of the `n + 1` axes.
pub fn default_box(g: &GridSpec, b: i64) -> Vec<(i64, i64)> {
    vec![(-b, g.m as i64 + b); g.steps.len()]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub checked: usize,
    /// Lexicographically smallest failing multi-index.
    pub counterexample: Option<Vec<i64>>,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Tests `P(i_1 h_1, ..., i_{n+1} h_{n+1}) = f(a + Σ i_k h_k v_k)` at every
/// integer multi-index of the box.
pub fn check_integer_extension<F: Evaluate + ?Sized>(
    p: &TensorPoly,
    f: &F,
    g: &GridSpec,
    bounds: &[(i64, i64)],
) -> Result<ExtensionReport> {
    if bounds.len() != g.steps.len() || p.nvars() != g.steps.len() {
        return Err(Error::DimensionMismatch { expected: g.steps.len(), found: bounds.len().min(p.nvars()) });
    }
    let mut checked = 0;
    for index in MultiIndex::new(bounds.to_vec()) {
        let t = g.parameter(&index);
        checked += 1;
        if p.eval(&t)? != f.eval_at(&g.position(&t)?)? {
            return Ok(ExtensionReport { checked, counterexample: Some(index) });
        }
    }
    Ok(ExtensionReport { checked, counterexample: None })
}

/// Builds the interpolant on steps `h_k / p_k` and compares it with the one
/// on steps `h_k`.
pub fn check_rational_refinement<F: Evaluate + ?Sized>(f: &F, g: &GridSpec, denominators: &[i64]) -> Result<bool> {
    let coarse = build_interpolant(f, g)?;
    let fine = build_interpolant(f, &g.refined(denominators)?)?;
    Ok(coarse == fine)
}

/// `φ_γ(t) = (a + Σ t_k v_k, P(t))`.
pub fn phi_gamma_eval(p: &TensorPoly, g: &GridSpec, t: &[QuadScalar]) -> Result<Vec<QuadScalar>> {
    let mut out = g.position(t)?;
    out.push(p.eval(t)?);
    Ok(out)
}
