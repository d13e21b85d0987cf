//! Incremental B_h[g] membership with exact undo, the workhorse behind the
//! census backtracker.
//!
//! The checker owns one dense table per fold order `j <= h` holding
//! `r_{A,j}(m)` for the current set. Pushing a new maximal element `a` adds,
//! for each `j` and each multiplicity `c >= 1` of `a`, the (j-c)-fold table
//! shifted by `c*a`; popping subtracts the same contributions. That makes
//! push/pop cost proportional to the table sizes instead of recomputing the
//! whole representation function, and keeps a running count of sums whose
//! representation count exceeds `g`.

use crate::error::CoreError;
use crate::rep::is_bhg;
use crate::set::IntegerSet;

/// Hard cap on total table entries (roughly 1 GiB of counts).
const MAX_TABLE_ENTRIES: u64 = 1 << 27;

/// Mutable B_h[g] membership state over `{1, ..., n}` with `push`/`pop`.
///
/// Elements must be pushed in strictly increasing order; `pop` exactly undoes
/// the most recent push. At every moment [`IncrementalChecker::holds`] equals
/// [`is_bhg`] on the current element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncrementalChecker {
    universe: u64,
    h: u32,
    g: u64,
    elements: Vec<u64>,
    // tables[j][m] = r_{A,j}(m) for the current A; tables[0] = [1].
    tables: Vec<Vec<u64>>,
    // number of m with tables[h][m] > g
    violations: u64,
}

impl IncrementalChecker {
    pub fn new(universe: u64, h: u32, g: u64) -> Result<Self, CoreError> {
        if h == 0 {
            return Err(CoreError::ZeroFold);
        }
        if g == 0 {
            return Err(CoreError::ZeroBound);
        }
        u64::from(h)
            .checked_mul(universe)
            .ok_or(CoreError::SumOverflow { h, n: universe })?;
        let entries: u64 = (1..=u64::from(h)).map(|j| j * universe + 1).sum();
        if entries > MAX_TABLE_ENTRIES {
            return Err(CoreError::SumOverflow { h, n: universe });
        }
        let mut tables = Vec::with_capacity(h as usize + 1);
        tables.push(vec![1u64]);
        for j in 1..=u64::from(h) {
            tables.push(vec![0u64; (j * universe + 1) as usize]);
        }
        Ok(Self { universe, h, g, elements: Vec::new(), tables, violations: 0 })
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn fold(&self) -> u32 {
        self.h
    }

    pub fn bound(&self) -> u64 {
        self.g
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the current set is a B_h[g]-set.
    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    /// Add `a`, which must exceed every element pushed so far and lie in
    /// `[1, n]`. Returns the updated verdict.
    pub fn push(&mut self, a: u64) -> Result<bool, CoreError> {
        if a < 1 || a > self.universe {
            return Err(CoreError::ElementOutOfRange { element: a, universe: self.universe });
        }
        if let Some(&last) = self.elements.last() {
            if a <= last {
                return Err(CoreError::NonIncreasingPush { element: a, current_max: last });
            }
        }
        // top-down so every tables[j-c] read is still the pre-push table
        for j in (1..=self.h as usize).rev() {
            let (lower, upper) = self.tables.split_at_mut(j);
            let table_j = &mut upper[0];
            for c in 1..=j {
                let shift = (c as u64 * a) as usize;
                let source = &lower[j - c];
                for (m, &v) in source.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    let slot = &mut table_j[m + shift];
                    let updated = slot
                        .checked_add(v)
                        .expect("representation count overflowed u64");
                    if j == self.h as usize && *slot <= self.g && updated > self.g {
                        self.violations += 1;
                    }
                    *slot = updated;
                }
            }
        }
        self.elements.push(a);
        Ok(self.holds())
    }

    /// Undo the most recent push.
    pub fn pop(&mut self) -> Result<(), CoreError> {
        let a = self.elements.pop().ok_or(CoreError::EmptyPop)?;
        // bottom-up so every tables[j-c] read is already restored
        for j in 1..=self.h as usize {
            let (lower, upper) = self.tables.split_at_mut(j);
            let table_j = &mut upper[0];
            for c in 1..=j {
                let shift = (c as u64 * a) as usize;
                let source = &lower[j - c];
                for (m, &v) in source.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    let slot = &mut table_j[m + shift];
                    let updated = *slot - v;
                    if j == self.h as usize && *slot > self.g && updated <= self.g {
                        self.violations -= 1;
                    }
                    *slot = updated;
                }
            }
        }
        Ok(())
    }

    /// The current elements as an [`IntegerSet`].
    pub fn to_set(&self) -> IntegerSet {
        IntegerSet::new(self.elements.clone(), self.universe)
            .expect("push keeps elements increasing and in range")
    }

    /// Recompute the verdict from scratch; used as a self-check in tests.
    pub fn recheck(&self) -> Result<bool, CoreError> {
        is_bhg(&self.to_set(), self.h, self.g)
    }
}
