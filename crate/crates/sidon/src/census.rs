//! Exact counting and enumeration of B_h[g]-sets of cardinality `k` in
//! `{1, ..., n}`.
//!
//! [`count_exact`] runs a depth-first backtracker that extends prefixes in
//! increasing order and prunes as soon as the incremental checker rejects a
//! prefix (supersets only gain representations, so a rejected prefix can
//! never recover) or the remaining slots outnumber the remaining elements.
//! [`count_oracle`] is the independent verification path: it walks every
//! k-subset in lexicographic order and applies the naive membership test,
//! sharing no code with the backtracker beyond [`IntegerSet`] itself.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{b2g_lower_bound, bh_defect_scaling, binomial};
use crate::checker::IncrementalChecker;
use crate::error::CoreError;
use crate::rep::is_bhg;
use crate::set::IntegerSet;

/// How many prefix levels may fan out into parallel subtree tasks.
const SPLIT_DEPTH: u32 = 2;

/// Which code path produced a census count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Backtrack,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Backtrack => "backtrack",
            Method::Oracle => "oracle",
        })
    }
}

/// One exact census result: the number of B_h[g]-sets of size `k` in
/// `{1, ..., n}`, with its density ratio against C(n, k).
#[derive(Debug, Clone, PartialEq)]
pub struct CensusRecord {
    pub n: u64,
    pub k: u64,
    pub h: u32,
    pub g: u64,
    pub count: BigUint,
    pub method: Method,
    pub elapsed: Duration,
    /// `count / C(n, k)`, exact and reduced.
    pub ratio: BigRational,
}

/// Resource limits for census runs.
#[derive(Debug, Clone)]
pub struct CensusConfig {
    /// Maximum number of visited prefixes before a backtracking run refuses.
    pub max_nodes: u64,
    /// Maximum C(n, k) the oracle will enumerate.
    pub oracle_max_subsets: u64,
    /// Split the top of the search tree across rayon workers.
    pub parallel: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { max_nodes: 1_000_000_000, oracle_max_subsets: 100_000_000, parallel: true }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("census requires 1 <= k <= n, got k={k}, n={n}")]
    InvalidRange { k: u64, n: u64 },
    #[error("too large: backtracking visited more than {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("too large: oracle would enumerate C({n},{k}) = {subsets} > {budget} subsets")]
    OracleTooLarge { n: u64, k: u64, subsets: BigUint, budget: u64 },
    #[error(transparent)]
    Core(#[from] CoreError),
}

struct NodeBudget {
    visited: AtomicU64,
    limit: u64,
}

impl NodeBudget {
    fn new(limit: u64) -> Self {
        Self { visited: AtomicU64::new(0), limit }
    }

    fn visit(&self) -> Result<(), CensusError> {
        let seen = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.limit {
            Err(CensusError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

fn validate(n: u64, k: u64) -> Result<(), CensusError> {
    if k < 1 || k > n {
        return Err(CensusError::InvalidRange { k, n });
    }
    Ok(())
}

/// Extend the checker's prefix by every admissible element `>= start`,
/// invoking `found` once per completed k-set, in lexicographic order.
fn walk(
    checker: &mut IncrementalChecker,
    start: u64,
    slots: u64,
    nodes: &NodeBudget,
    found: &mut impl FnMut(&[u64]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, CensusError> {
    let last_start = checker.universe() - slots + 1;
    for a in start..=last_start {
        nodes.visit()?;
        let viable = checker.push(a)?;
        if viable {
            let flow = if slots == 1 {
                found(checker.elements())
            } else {
                walk(checker, a + 1, slots - 1, nodes, found)?
            };
            if flow.is_break() {
                checker.pop().expect("push above succeeded");
                return Ok(ControlFlow::Break(()));
            }
        }
        checker.pop().expect("push above succeeded");
    }
    Ok(ControlFlow::Continue(()))
}

/// Parallel front of the backtracker: fan the first `depth` prefix levels out
/// over rayon tasks, each owning a cloned checker, then sum the u64 subtree
/// counts (order-independent, so the result is schedule-independent).
fn split_count(
    checker: &IncrementalChecker,
    start: u64,
    slots: u64,
    depth: u32,
    nodes: &NodeBudget,
) -> Result<u64, CensusError> {
    if depth == 0 || slots == 1 {
        let mut local = checker.clone();
        let mut count = 0u64;
        let _ = walk(&mut local, start, slots, nodes, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        return Ok(count);
    }
    let last_start = checker.universe() - slots + 1;
    let branch_counts: Result<Vec<u64>, CensusError> = (start..=last_start)
        .into_par_iter()
        .map(|a| {
            nodes.visit()?;
            let mut local = checker.clone();
            if !local.push(a)? {
                return Ok(0);
            }
            if slots == 1 {
                return Ok(1);
            }
            split_count(&local, a + 1, slots - 1, depth - 1, nodes)
        })
        .collect();
    Ok(branch_counts?.into_iter().sum())
}

fn make_record(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    count: u64,
    method: Method,
    elapsed: Duration,
) -> CensusRecord {
    let count = BigUint::from(count);
    let ratio = BigRational::new(BigInt::from(count.clone()), BigInt::from(binomial(n, k as i64)));
    CensusRecord { n, k, h, g, count, method, elapsed, ratio }
}

/// Exact `B_h[g](k, n)` by pruned backtracking.
pub fn count_exact(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    cfg: &CensusConfig,
) -> Result<CensusRecord, CensusError> {
    validate(n, k)?;
    let started = Instant::now();
    let nodes = NodeBudget::new(cfg.max_nodes);
    let checker = IncrementalChecker::new(n, h, g)?;
    let count = if cfg.parallel {
        split_count(&checker, 1, k, SPLIT_DEPTH, &nodes)?
    } else {
        let mut checker = checker;
        let mut count = 0u64;
        let _ = walk(&mut checker, 1, k, &nodes, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        count
    };
    Ok(make_record(n, k, h, g, count, Method::Backtrack, started.elapsed()))
}

/// Exact `B_h[g](k, n)` by plain enumeration of every k-subset with the
/// naive membership test. Refuses when C(n, k) exceeds the oracle budget.
pub fn count_oracle(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    cfg: &CensusConfig,
) -> Result<CensusRecord, CensusError> {
    validate(n, k)?;
    if h == 0 {
        return Err(CoreError::ZeroFold.into());
    }
    if g == 0 {
        return Err(CoreError::ZeroBound.into());
    }
    let subsets = binomial(n, k as i64);
    if subsets > BigUint::from(cfg.oracle_max_subsets) {
        return Err(CensusError::OracleTooLarge {
            n,
            k,
            subsets,
            budget: cfg.oracle_max_subsets,
        });
    }
    let started = Instant::now();
    let mut count = 0u64;
    let mut comb: Vec<u64> = (1..=k).collect();
    loop {
        let a = IntegerSet::new(comb.clone(), n).expect("combination is increasing");
        if is_bhg(&a, h, g)? {
            count += 1;
        }
        // next combination in lexicographic order
        let mut i = comb.len();
        loop {
            if i == 0 {
                return Ok(make_record(n, k, h, g, count, Method::Oracle, started.elapsed()));
            }
            i -= 1;
            if comb[i] < n - (k - 1 - i as u64) {
                comb[i] += 1;
                for j in i + 1..comb.len() {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Visit every B_h[g]-set of size `k` in `{1, ..., n}` in lexicographic
/// order. The visitor may stop the walk early with [`ControlFlow::Break`].
pub fn enumerate(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    cfg: &CensusConfig,
    mut visitor: impl FnMut(&[u64]) -> ControlFlow<()>,
) -> Result<(), CensusError> {
    validate(n, k)?;
    let mut checker = IncrementalChecker::new(n, h, g)?;
    let nodes = NodeBudget::new(cfg.max_nodes);
    let _ = walk(&mut checker, 1, k, &nodes, &mut visitor)?;
    Ok(())
}

/// One cell of a census table: the count outcome plus the derived columns
/// that put it next to the closed-form bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusCell {
    pub n: u64,
    pub k: u64,
    pub h: u32,
    pub g: u64,
    pub outcome: Result<CensusRecord, CensusError>,
    /// Exact count lower bound `C(n,k)·max(0, 1 - 4k^(2g+2)/n^g)`; only
    /// meaningful for 2-fold sums, `None` otherwise.
    pub bound_value: Option<BigRational>,
    /// `C(n,k) - count` for g = 1 cells.
    pub defect: Option<BigUint>,
    /// `k^(2h)/n` for g = 1 cells.
    pub defect_scaling: Option<BigRational>,
    /// `defect / (C(n,k) · k^(2h)/n)`: the empirically observed implied
    /// constant of the defect bound.
    pub implied_constant: Option<BigRational>,
}

/// Run `count_exact` over the grid `n_values × k_values`. Per-cell failures
/// (budget refusals, k > n) are recorded in the cell, not raised.
pub fn census_table(
    n_values: &[u64],
    k_values: &[u64],
    h: u32,
    g: u64,
    cfg: &CensusConfig,
) -> Vec<CensusCell> {
    let mut cells = Vec::with_capacity(n_values.len() * k_values.len());
    for &n in n_values {
        for &k in k_values {
            let outcome = count_exact(n, k, h, g, cfg);
            let bound_value = (h == 2 && k >= 1 && k <= n)
                .then(|| b2g_lower_bound(n, k, g).expect("validated range").bound_value);
            let (defect, defect_scaling, implied_constant) = match (&outcome, g) {
                (Ok(record), 1) => {
                    let binom = binomial(n, k as i64);
                    let defect = &binom - &record.count;
                    let scaling = bh_defect_scaling(n, k, h).expect("validated range");
                    let denom = BigRational::from(BigInt::from(binom)) * &scaling;
                    let implied = BigRational::from(BigInt::from(defect.clone())) / denom;
                    (Some(defect), Some(scaling), Some(implied))
                }
                _ => (None, None, None),
            };
            cells.push(CensusCell {
                n,
                k,
                h,
                g,
                outcome,
                bound_value,
                defect,
                defect_scaling,
                implied_constant,
            });
        }
    }
    cells
}
