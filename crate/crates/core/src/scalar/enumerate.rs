//! Exhaustive enumeration of `Q(√d)` by height.

use std::cmp::Ordering;

use num_integer::Integer;

use super::{is_squarefree, QuadScalar, Rational};
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: QuadScalar,
    hi: QuadScalar,
}

impl Interval {
    pub fn new(lo: QuadScalar, hi: QuadScalar) -> Result<Self> {
        lo.common_field(&hi)?;
        if lo >= hi {
            return Err(Error::InvalidWindow { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &QuadScalar {
        &self.lo
    }

    pub fn hi(&self) -> &QuadScalar {
        &self.hi
    }

    pub fn contains(&self, x: &QuadScalar) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> QuadScalar {
        &self.hi - &self.lo
    }
}

/// Every rational of height at most `H`, sorted by value, with its height.
#[derive(Debug, Clone)]
pub struct RationalTable {
    bound: u64,
    entries: Vec<(Rational, u64)>,
}

impl RationalTable {
    pub fn new(bound: u64) -> Self {
        let h = bound as i64;
        let mut entries = Vec::new();
        for den in 1..=h {
            for num in -h..=h {
                if num.unsigned_abs().gcd(&(den as u64)) == 1 {
                    entries.push((Rational::new(num, den), num.unsigned_abs().max(den as u64)));
                }
            }
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        RationalTable { bound, entries }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn entries(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index range of the entries `r` with `lo <= r <= hi`.
    fn range_between(&self, lo: &QuadScalar, hi: &QuadScalar) -> std::ops::Range<usize> {
        let start = self.entries.partition_point(|(r, _)| lo.cmp_rational(r) == Ordering::Greater);
        let end = self.entries.partition_point(|(r, _)| hi.cmp_rational(r) != Ordering::Less);
        start..end.max(start)
    }
}

fn check_window_field(window: &Interval, d: u32) -> Result<()> {
    if !is_squarefree(d as u64) {
        return Err(Error::InvalidField(d as u64));
    }
    for b in [&window.lo, &window.hi] {
        if !b.is_rational() && b.d() != d {
            return Err(Error::FieldMismatch(b.d(), d));
        }
    }
    Ok(())
}

/// Calls `visit(z, height(z))` for every `z = p + q√d` with both `p` and `q`
/// in `table` and `z` inside `window`. Order: ascending `q`, then ascending
/// `p` (deterministic but not sorted by value).
pub fn visit_window<F>(table: &RationalTable, window: &Interval, d: u32, mut visit: F) -> Result<()>
where
    F: FnMut(QuadScalar, u64),
{
    check_window_field(window, d)?;
    for (q, hq) in &table.entries {
        let shift = QuadScalar::make(Rational::zero(), q.clone(), d);
        let lo = &window.lo - &shift;
        let hi = &window.hi - &shift;
        for (p, hp) in &table.entries[table.range_between(&lo, &hi)] {
            visit(QuadScalar::make(p.clone(), q.clone(), d), (*hp).max(*hq));
        }
    }
    Ok(())
}

/// All `z ∈ Q(√d)` with height at most `height` lying in `window`, sorted by
/// real value.
pub fn enumerate_by_height(height: u64, window: &Interval, d: u32) -> Result<Vec<QuadScalar>> {
    if height == 0 {
        return Err(Error::InvalidInput("height bound must be at least 1".into()));
    }
    let table = RationalTable::new(height);
    let mut out = Vec::new();
    visit_window(&table, window, d, |z, _| out.push(z))?;
    out.sort();
    Ok(out)
}
