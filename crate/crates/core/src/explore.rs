//! Finite views of graphs `{(x, f(x))}`: height-filtered samples, growth of
//! `sup |f|` over a window, and occupancy of a rectangle at fixed
//! resolution.

use std::slice;

use num_traits::ToPrimitive;

use crate::diff::Evaluate;
use crate::error::{Error, Result};
use crate::interp::{phi_gamma_eval, GridSpec, MultiIndex};
use crate::poly::TensorPoly;
use crate::scalar::{enumerate_by_height, visit_window, Interval, QuadScalar, RationalTable};
use crate::shear::xi_determinant;

/// Exact points of a common dimension, in deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCloud {
    pub dim: usize,
    pub points: Vec<Vec<QuadScalar>>,
    /// How the points were produced, e.g. model text and parameters.
    pub provenance: String,
}

/// Decimal text with 17 significant digits.
pub fn render_decimal(z: &QuadScalar) -> String {
    format!("{:.16e}", z.to_f64())
}

fn check_arity(windows: &[Interval], nvars: Option<usize>) -> Result<()> {
    if windows.is_empty() {
        return Err(Error::InvalidInput("no window given".into()));
    }
    if let Some(n) = nvars {
        if n != windows.len() {
            return Err(Error::DimensionMismatch { expected: n, found: windows.len() });
        }
    }
    Ok(())
}

/// Visits every domain point of height at most `height` in the product of
/// `windows`, with the point's height (largest coordinate height).
///
/// One axis is streamed in `(surd part, rational part)` order; several axes
/// are enumerated per axis and visited lexicographically.
pub fn visit_domain<V>(windows: &[Interval], height: u64, d: u32, mut visit: V) -> Result<()>
where
    V: FnMut(&[QuadScalar], u64) -> Result<()>,
{
    check_arity(windows, None)?;
    if height == 0 {
        return Err(Error::InvalidInput("height bound must be at least 1".into()));
    }
    let table = RationalTable::new(height);
    if let [w] = windows {
        let mut status = Ok(());
        visit_window(&table, w, d, |z, h| {
            if status.is_ok() {
                status = visit(slice::from_ref(&z), h);
            }
        })?;
        return status;
    }
    let mut axes: Vec<Vec<(QuadScalar, u64)>> = Vec::with_capacity(windows.len());
    for w in windows {
        let mut pts = Vec::new();
        visit_window(&table, w, d, |z, h| pts.push((z, h)))?;
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        axes.push(pts);
    }
    let ranges = axes.iter().map(|a| (0, a.len() as i64 - 1)).collect();
    let mut x = Vec::with_capacity(axes.len());
    for index in MultiIndex::new(ranges) {
        x.clear();
        let mut h = 0;
        for (axis, &i) in axes.iter().zip(&index) {
            let (z, hz) = &axis[i as usize];
            x.push(z.clone());
            h = h.max(*hz);
        }
        visit(&x, h)?;
    }
    Ok(())
}

/// `(x, f(x))` for all `x` of height at most `height` in the product of
/// windows, ascending lexicographically in `x`.
pub fn sample_graph<F: Evaluate + ?Sized>(f: &F, windows: &[Interval], height: u64, d: u32) -> Result<PointCloud> {
    check_arity(windows, None)?;
    let mut axes = Vec::with_capacity(windows.len());
    for w in windows {
        axes.push(enumerate_by_height(height, w, d)?);
    }
    let ranges: Vec<(i64, i64)> = axes.iter().map(|a| (0, a.len() as i64 - 1)).collect();
    let mut points = Vec::new();
    for index in MultiIndex::new(ranges) {
        let mut p: Vec<QuadScalar> = axes.iter().zip(&index).map(|(a, &i)| a[i as usize].clone()).collect();
        let y = f.eval_at(&p)?;
        p.push(y);
        points.push(p);
    }
    let provenance = format!(
        "graph sample, height <= {height}, window {}",
        windows.iter().map(|w| format!("[{}, {}]", w.lo(), w.hi())).collect::<Vec<_>>().join(" x ")
    );
    Ok(PointCloud { dim: windows.len() + 1, points, provenance })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub height: u64,
    /// `sup |f|` over the samples; `None` when there are none.
    pub sup: Option<QuadScalar>,
    /// First sample (in visiting order) attaining the supremum.
    pub argmax: Option<Vec<QuadScalar>>,
    pub samples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    /// Suprema over nested sample sets never decrease.
    pub fn is_monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].sup <= w[1].sup)
    }
}

fn check_heights(heights: &[u64]) -> Result<()> {
    if heights.is_empty() || heights[0] == 0 || heights.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("heights must be positive and strictly increasing".into()));
    }
    Ok(())
}

/// `sup |f|` over the height-`H` samples of the window for each `H`,
/// computed in a single pass at the largest height.
pub fn growth_table<F: Evaluate + ?Sized>(f: &F, windows: &[Interval], heights: &[u64], d: u32) -> Result<GrowthTable> {
    check_heights(heights)?;
    let top = *heights.last().expect("nonempty");
    let levels = top as usize + 1;
    let mut best: Vec<Option<(QuadScalar, Vec<QuadScalar>)>> = vec![None; levels];
    let mut counts = vec![0u64; levels];
    visit_domain(windows, top, d, |x, h| {
        let v = f.eval_at(x)?.abs();
        counts[h as usize] += 1;
        let slot = &mut best[h as usize];
        if slot.as_ref().is_none_or(|(b, _)| v > *b) {
            *slot = Some((v, x.to_vec()));
        }
        Ok(())
    })?;
    let mut rows = Vec::with_capacity(heights.len());
    let mut running: Option<(QuadScalar, Vec<QuadScalar>)> = None;
    let mut samples = 0u64;
    let mut level = 0usize;
    for &h in heights {
        while level <= h as usize {
            samples += counts[level];
            if let Some((v, x)) = best[level].take() {
                if running.as_ref().is_none_or(|(b, _)| v > *b) {
                    running = Some((v, x));
                }
            }
            level += 1;
        }
        rows.push(GrowthRow {
            height: h,
            sup: running.as_ref().map(|r| r.0.clone()),
            argmax: running.as_ref().map(|r| r.1.clone()),
            samples,
        });
    }
    Ok(GrowthTable { rows })
}

/// A closed rectangle `x × y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub x: Interval,
    pub y: Interval,
}

/// Occupancy of the `r × r` cells of a rectangle. Cells are half-open
/// except along the top and right edges, which belong to the last cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageGrid {
    rect: Rect,
    r: usize,
    cells: Vec<bool>,
    occupied: usize,
}

impl CoverageGrid {
    pub fn new(rect: Rect, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidInput("resolution must be at least 2".into()));
        }
        Ok(CoverageGrid { rect, r, cells: vec![false; r * r], occupied: 0 })
    }

    pub fn rect(&self) -> &Rect {
        &self.rect
    }

    pub fn resolution(&self) -> usize {
        self.r
    }

    pub fn occupied(&self) -> usize {
        self.occupied
    }

    /// `occupied / r²`.
    pub fn fraction(&self) -> f64 {
        self.occupied as f64 / (self.r * self.r) as f64
    }

    /// Row-major from the bottom-left cell.
    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// Cell `(column, row)` containing `(x, y)`, or `None` outside the rectangle.
    pub fn cell_of(&self, x: &QuadScalar, y: &QuadScalar) -> Option<(usize, usize)> {
        Some((axis_cell(&self.rect.x, self.r, x)?, axis_cell(&self.rect.y, self.r, y)?))
    }

    /// Marks the cell containing `(x, y)`; returns whether it was newly occupied.
    pub fn insert(&mut self, x: &QuadScalar, y: &QuadScalar) -> bool {
        match self.cell_of(x, y) {
            Some((i, j)) => self.mark(j * self.r + i),
            None => false,
        }
    }

    fn mark(&mut self, k: usize) -> bool {
        if self.cells[k] {
            return false;
        }
        self.cells[k] = true;
        self.occupied += 1;
        true
    }
}

/// `⌊r (z - lo) / (hi - lo)⌋`, clamped to `r - 1` at `z = hi`.
fn axis_cell(w: &Interval, r: usize, z: &QuadScalar) -> Option<usize> {
    if !w.contains(z) {
        return None;
    }
    let (lo, hi) = (w.lo().to_f64(), w.hi().to_f64());
    let approx = (z.to_f64() - lo) / (hi - lo) * r as f64;
    let near = approx.round();
    let k = if (approx - near).abs() > 1e-6 && approx.is_finite() {
        approx.floor() as i64
    } else {
        let scaled = (z - w.lo()) * QuadScalar::from(r as i64) * w.width().recip();
        scaled.floor().to_i64()?
    };
    Some((k.clamp(0, r as i64 - 1)) as usize)
}

/// Occupancy of `rect` by the points of a two-dimensional cloud.
pub fn coverage_fraction(cloud: &PointCloud, rect: &Rect, r: usize) -> Result<CoverageGrid> {
    if cloud.dim != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: cloud.dim });
    }
    let mut grid = CoverageGrid::new(rect.clone(), r)?;
    for p in &cloud.points {
        grid.insert(&p[0], &p[1]);
    }
    Ok(grid)
}

/// Coverage of `rect` by the graph of a univariate `f` sampled at each
/// height, computed in a single pass at the largest height. The domain
/// window is the rectangle's `x` side.
pub fn coverage_by_height<F: Evaluate + ?Sized>(
    f: &F,
    rect: &Rect,
    r: usize,
    heights: &[u64],
    d: u32,
) -> Result<Vec<CoverageGrid>> {
    check_heights(heights)?;
    let top = *heights.last().expect("nonempty");
    let probe = CoverageGrid::new(rect.clone(), r)?;
    // Lowest height at which each cell is hit.
    let mut first: Vec<u64> = vec![u64::MAX; r * r];
    visit_domain(slice::from_ref(&rect.x), top, d, |x, h| {
        let y = f.eval_at(x)?;
        if let Some((i, j)) = probe.cell_of(&x[0], &y) {
            let slot = &mut first[j * r + i];
            *slot = (*slot).min(h);
        }
        Ok(())
    })?;
    Ok(heights
        .iter()
        .map(|&h| {
            let mut g = probe.clone();
            for (k, &lvl) in first.iter().enumerate() {
                if lvl <= h {
                    g.mark(k);
                }
            }
            g
        })
        .collect())
}

/// Images `φ_γ(t)` of the parameter samples off the variety `ξ(t) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageCloud {
    pub cloud: PointCloud,
    /// Samples with `ξ(t) = 0`, detected exactly.
    pub skipped: usize,
}

pub fn image_cloud(p: &TensorPoly, g: &GridSpec, s: usize, samples: &[Vec<QuadScalar>]) -> Result<ImageCloud> {
    let xi = xi_determinant(p, s)?;
    let mut points = Vec::new();
    let mut skipped = 0;
    for t in samples {
        if xi.eval(t)?.is_zero() {
            skipped += 1;
            continue;
        }
        points.push(phi_gamma_eval(p, g, t)?);
    }
    Ok(ImageCloud {
        cloud: PointCloud { dim: g.n() + 1, points, provenance: format!("image of {} parameter samples, axis {}", samples.len(), s + 1) },
        skipped,
    })
}

/// All points of `Q(√d)^k` whose coordinates lie in `window` and have
/// height at most `height`, lexicographically ascending.
pub fn parameter_samples(k: usize, window: &Interval, height: u64, d: u32) -> Result<Vec<Vec<QuadScalar>>> {
    let axis = enumerate_by_height(height, window, d)?;
    let ranges = vec![(0, axis.len() as i64 - 1); k];
    Ok(MultiIndex::new(ranges).map(|i| i.iter().map(|&j| axis[j as usize].clone()).collect()).collect())
}
