//! Monte Carlo estimation of the probability that a uniform random k-subset
//! of `{1, ..., n}` is a B_h[g]-set, plus the two derived experiments:
//! density scans along `k_n = c·n^alpha` grids and threshold probes along
//! `k_n = lambda·n^(g/(gh+h))`.
//!
//! Subsets are drawn with Floyd's algorithm (exactly `k` range draws per
//! trial regardless of `n`), trials run on private [`crate::rng`] substreams,
//! and success counts merge by integer addition, so every result is
//! reproducible for any worker count.

use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::b2g_lower_bound;
use crate::error::CoreError;
use crate::rep::is_bhg;
use crate::rng::{point_stream_base, substream, MAX_TRIALS_PER_POINT};
use crate::set::IntegerSet;
use rand::Rng;
use std::collections::BTreeSet;

/// z for a 95% Wilson score interval.
pub const WILSON_Z95: f64 = 1.959963984540054;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McError {
    #[error("sampling requires 1 <= k <= n, got k={k}, n={n}")]
    InvalidRange { k: u64, n: u64 },
    #[error("at least one trial is required (and at most {MAX_TRIALS_PER_POINT} per point)")]
    BadTrialCount,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Point estimate of `P_{h,g}(k, n)` with a 95% Wilson interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub n: u64,
    pub k: u64,
    pub h: u32,
    pub g: u64,
    pub trials: u64,
    pub successes: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

/// Draw a uniform k-subset of `{1, ..., n}` with Floyd's subset-sampling
/// algorithm: for j = n-k+1, ..., n insert a uniform element of `[1, j]`,
/// falling back to `j` itself on collision. Consumes exactly `k` draws.
pub fn sample_k_subset<R: Rng>(n: u64, k: u64, rng: &mut R) -> Result<IntegerSet, McError> {
    if k < 1 || k > n {
        return Err(McError::InvalidRange { k, n });
    }
    let mut chosen: BTreeSet<u64> = BTreeSet::new();
    for j in n - k + 1..=n {
        let t = rng.random_range(1..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    Ok(IntegerSet::new(chosen.into_iter().collect(), n).expect("draws lie in [1, n]"))
}

/// 95% Wilson score interval for `successes` out of `trials`.
///
/// The interval always contains the point estimate; the endpoints are pinned
/// to exactly 0 and 1 at the extremes, where the raw formula loses a few ulp.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = WILSON_Z95 * WILSON_Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = (WILSON_Z95 / denom) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let low = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let high = if successes == trials { 1.0 } else { (center + half).min(1.0) };
    (low, high)
}

fn validate_point(n: u64, k: u64, h: u32, g: u64, trials: u64) -> Result<(), McError> {
    if k < 1 || k > n {
        return Err(McError::InvalidRange { k, n });
    }
    if h == 0 {
        return Err(CoreError::ZeroFold.into());
    }
    if g == 0 {
        return Err(CoreError::ZeroBound.into());
    }
    u64::from(h)
        .checked_mul(n)
        .ok_or(CoreError::SumOverflow { h, n })?;
    if trials == 0 || trials > MAX_TRIALS_PER_POINT {
        return Err(McError::BadTrialCount);
    }
    Ok(())
}

/// Estimate `P_{h,g}(k, n)` from independent uniform k-subsets.
pub fn estimate_probability(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    trials: u64,
    seed: u64,
) -> Result<Estimate, McError> {
    estimate_at_stream(n, k, h, g, trials, seed, 0)
}

/// As [`estimate_probability`], on the substream block starting at
/// `stream_base` (grid experiments give each point its own block).
fn estimate_at_stream(
    n: u64,
    k: u64,
    h: u32,
    g: u64,
    trials: u64,
    seed: u64,
    stream_base: u64,
) -> Result<Estimate, McError> {
    validate_point(n, k, h, g, trials)?;
    let successes: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, stream_base + t);
            let a = sample_k_subset(n, k, &mut rng).expect("range validated");
            u64::from(is_bhg(&a, h, g).expect("parameters validated"))
        })
        .sum();
    let (ci_low, ci_high) = wilson_interval(successes, trials);
    Ok(Estimate {
        n,
        k,
        h,
        g,
        trials,
        successes,
        p_hat: successes as f64 / trials as f64,
        ci_low,
        ci_high,
        seed,
    })
}

/// `round_ties_even(c * n^alpha)` clamped into `[min, n]`.
fn scaled_subset_size(c: f64, alpha: f64, n: u64, min: u64) -> u64 {
    let raw = (c * (n as f64).powf(alpha)).round_ties_even();
    if !raw.is_finite() || raw >= n as f64 {
        return n.max(min.min(n));
    }
    (raw as u64).clamp(min.min(n), n)
}

/// A density scan along the sequence `k_n = max(1, round(c·n^alpha))`.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub h: u32,
    pub g: u64,
    pub alpha: f64,
    pub coefficient: f64,
    pub n_grid: Vec<u64>,
    pub trials: u64,
    pub seed: u64,
}

impl ScanConfig {
    pub fn new(
        h: u32,
        g: u64,
        alpha: f64,
        coefficient: f64,
        n_grid: Vec<u64>,
        trials: u64,
        seed: u64,
    ) -> Result<Self, McError> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(McError::InvalidConfig(format!("alpha must be finite and >= 0, got {alpha}")));
        }
        if !coefficient.is_finite() || coefficient <= 0.0 {
            return Err(McError::InvalidConfig(format!(
                "coefficient must be finite and positive, got {coefficient}"
            )));
        }
        if n_grid.is_empty() {
            return Err(McError::InvalidConfig("empty n grid".into()));
        }
        let cfg = Self { h, g, alpha, coefficient, n_grid, trials, seed };
        for &n in &cfg.n_grid {
            if n < 1 {
                return Err(McError::InvalidConfig("grid points must be positive".into()));
            }
            validate_point(n, cfg.subset_size(n), h, g, trials)?;
        }
        Ok(cfg)
    }

    /// `k_n` for one grid point.
    pub fn subset_size(&self, n: u64) -> u64 {
        scaled_subset_size(self.coefficient, self.alpha, n, 1)
    }
}

/// One density-scan point: the estimate, and for 2-fold scans the exact
/// closed-form lower bound on the density ratio it should dominate.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanPoint {
    pub estimate: Estimate,
    pub ratio_bound: Option<BigRational>,
}

/// Estimate every grid point of `cfg`, one substream block per point.
pub fn density_scan(cfg: &ScanConfig) -> Vec<ScanPoint> {
    cfg.n_grid
        .iter()
        .enumerate()
        .map(|(idx, &n)| {
            let k = cfg.subset_size(n);
            let estimate = estimate_at_stream(
                n,
                k,
                cfg.h,
                cfg.g,
                cfg.trials,
                cfg.seed,
                point_stream_base(idx),
            )
            .expect("config validated every point");
            let ratio_bound = (cfg.h == 2)
                .then(|| b2g_lower_bound(n, k, cfg.g).expect("validated range").ratio_bound());
            ScanPoint { estimate, ratio_bound }
        })
        .collect()
}

/// One threshold-probe cell, at growth rate `k_n = lambda·n^(g/(gh+h))`.
/// `lambda_hat = -ln(p_hat)` and `kappa_hat = lambda_hat / lambda^(2h)` are
/// filled in at the largest grid point only.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdRecord {
    pub h: u32,
    pub g: u64,
    pub lambda: f64,
    pub n: u64,
    pub k: u64,
    pub estimate: Estimate,
    pub lambda_hat: Option<f64>,
    pub kappa_hat: Option<f64>,
}

/// All threshold-probe cells plus the spread of `kappa_hat` across lambdas.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdSummary {
    pub records: Vec<ThresholdRecord>,
    pub kappa_min: Option<f64>,
    pub kappa_max: Option<f64>,
    /// Lambdas whose estimate hit zero at the largest n: `lambda_hat` is
    /// infinite there, so they are excluded from the kappa spread.
    pub excluded_lambdas: Vec<f64>,
    /// True when g > 1, where the growth exponent `g/(gh+h)` probes the
    /// conjectured generalization rather than the proved g = 1 law.
    pub conjecture_probe: bool,
}

/// Probe the threshold law: for each lambda, estimate `P_{h,g}(k_n, n)` along
/// the grid with `k_n = max(2, round(lambda·n^(g/(gh+h))))` and fit
/// `kappa_hat` from the largest point.
pub fn threshold_experiment(
    h: u32,
    g: u64,
    lambdas: &[f64],
    n_grid: &[u64],
    trials: u64,
    seed: u64,
) -> Result<ThresholdSummary, McError> {
    if lambdas.is_empty() {
        return Err(McError::InvalidConfig("no lambdas given".into()));
    }
    if lambdas.iter().any(|l| !l.is_finite() || *l <= 0.0) {
        return Err(McError::InvalidConfig("lambdas must be finite and positive".into()));
    }
    if n_grid.is_empty() {
        return Err(McError::InvalidConfig("empty n grid".into()));
    }
    if h == 0 {
        return Err(CoreError::ZeroFold.into());
    }
    if g == 0 {
        return Err(CoreError::ZeroBound.into());
    }
    let exponent = g as f64 / ((g * u64::from(h) + u64::from(h)) as f64);
    let n_max = *n_grid.iter().max().expect("nonempty grid");
    if n_max < 2 {
        return Err(McError::InvalidConfig("grid must reach n >= 2".into()));
    }
    let mut records = Vec::with_capacity(lambdas.len() * n_grid.len());
    let mut kappas: Vec<f64> = Vec::new();
    let mut excluded = Vec::new();
    for (li, &lambda) in lambdas.iter().enumerate() {
        for (ni, &n) in n_grid.iter().enumerate() {
            if n < 2 {
                return Err(McError::InvalidConfig(format!("grid point n={n} is below 2")));
            }
            let k = scaled_subset_size(lambda, exponent, n, 2);
            let estimate = estimate_at_stream(
                n,
                k,
                h,
                g,
                trials,
                seed,
                point_stream_base(li * n_grid.len() + ni),
            )?;
            let (lambda_hat, kappa_hat) = if n == n_max {
                if estimate.p_hat > 0.0 {
                    let lh = -estimate.p_hat.ln();
                    let kh = lh / lambda.powi(2 * h as i32);
                    kappas.push(kh);
                    (Some(lh), Some(kh))
                } else {
                    excluded.push(lambda);
                    (None, None)
                }
            } else {
                (None, None)
            };
            records.push(ThresholdRecord { h, g, lambda, n, k, estimate, lambda_hat, kappa_hat });
        }
    }
    let kappa_min = kappas.iter().copied().reduce(f64::min);
    let kappa_max = kappas.iter().copied().reduce(f64::max);
    Ok(ThresholdSummary {
        records,
        kappa_min,
        kappa_max,
        excluded_lambdas: excluded,
        conjecture_probe: g > 1,
    })
}
