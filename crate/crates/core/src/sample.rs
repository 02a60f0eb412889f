//! Seeded, platform-independent sampling of exact points.

use crate::scalar::{QuadScalar, Rational};

/// 64-bit linear congruential generator (Knuth's MMIX constants). Each
/// draw advances the state once and returns its high 32 bits.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

const MUL: u64 = 6_364_136_223_846_793_005;
const INC: u64 = 1_442_695_040_888_963_407;

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MUL).wrapping_add(INC);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in `0..n` by reduction modulo `n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0, "empty range");
        self.next_u32() % n
    }

    /// In `lo..=hi`. Panics if the range is empty or wider than `u32`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let width = u32::try_from(hi - lo + 1).expect("range fits in u32");
        lo + self.below(width) as i64
    }

    /// `p/q` with `|p| ≤ height` and `1 ≤ q ≤ height`.
    pub fn rational(&mut self, height: u32) -> Rational {
        let h = height.max(1) as i64;
        let p = self.range(-h, h);
        let q = self.range(1, h);
        Rational::new(p, q)
    }

    /// `a + b√d` with both parts drawn by [`Lcg::rational`].
    pub fn quad(&mut self, height: u32, d: u32) -> QuadScalar {
        let a = self.rational(height);
        let b = self.rational(height);
        QuadScalar::new(a, b, d).expect("caller passes a valid field")
    }

    pub fn nonzero_quad(&mut self, height: u32, d: u32) -> QuadScalar {
        loop {
            let z = self.quad(height, d);
            if !z.is_zero() {
                return z;
            }
        }
    }

    pub fn point(&mut self, n: usize, height: u32, d: u32) -> Vec<QuadScalar> {
        (0..n).map(|_| self.quad(height, d)).collect()
    }

    /// A point with at least one nonzero coordinate.
    pub fn nonzero_point(&mut self, n: usize, height: u32, d: u32) -> Vec<QuadScalar> {
        loop {
            let v = self.point(n, height, d);
            if v.iter().any(|z| !z.is_zero()) {
                return v;
            }
        }
    }

    /// `count` pairs `(x, h)` in `Q(√d)^n` with `h ≠ 0`.
    pub fn frechet_pairs(&mut self, count: usize, n: usize, height: u32, d: u32) -> Vec<(Vec<QuadScalar>, Vec<QuadScalar>)> {
        (0..count).map(|_| (self.point(n, height, d), self.nonzero_point(n, height, d))).collect()
    }

    /// `count` tuples `(x, [h_1, ..., h_k])` with pairwise distinct nonzero steps.
    pub fn step_tuples(
        &mut self,
        count: usize,
        n: usize,
        k: usize,
        height: u32,
        d: u32,
    ) -> Vec<(Vec<QuadScalar>, Vec<Vec<QuadScalar>>)> {
        (0..count)
            .map(|_| {
                let x = self.point(n, height, d);
                let mut steps: Vec<Vec<QuadScalar>> = Vec::with_capacity(k);
                while steps.len() < k {
                    let h = self.nonzero_point(n, height, d);
                    if !steps.contains(&h) {
                        steps.push(h);
                    }
                }
                (x, steps)
            })
            .collect()
    }
}
