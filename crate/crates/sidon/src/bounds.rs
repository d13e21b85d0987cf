//! Exact evaluation of the closed-form quantities attached to B_h[g]-sets:
//! binomial coefficients, the binomial-ratio inequality
//! C(n-j, k-j)/C(n,k) <= (k/n)^j, the counting lower bound
//! C(n,k)·(1 - 4k^(2g+2)/n^g) for B_2[g]-sets, the cardinality cap
//! k < (h!·g·h·n)^(1/h), and the defect scaling term k^(2h)/n.
//!
//! Everything here is exact integer or rational arithmetic; decimal rendering
//! happens at the presentation layer only.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Precondition violations for the bound evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("requires n >= 1 and 0 <= j <= k <= n, got n={n}, k={k}, j={j}")]
    RatioPrecondition { n: u64, k: u64, j: u64 },
    #[error("{name} must be at least 1")]
    ZeroParameter { name: &'static str },
    #[error("requires k <= n, got k={k}, n={n}")]
    KExceedsN { k: u64, n: u64 },
    #[error("cardinality cap does not fit in 64 bits")]
    CapOverflow,
}

/// Exact binomial coefficient C(n, k); zero for k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = BigUint::one();
    for i in 0..k {
        result *= n - i;
        result /= i + 1;
    }
    result
}

fn big_pow(base: &BigUint, exp: u64) -> BigUint {
    let mut result = BigUint::one();
    let mut base = base.clone();
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    result
}

fn ratio_of(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The two sides of the inequality C(n-j, k-j)/C(n,k) <= (k/n)^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioBound {
    /// C(n-j, k-j) / C(n, k), exact.
    pub ratio: BigRational,
    /// (k/n)^j, exact.
    pub bound: BigRational,
    /// Whether `ratio <= bound`. Always true for valid inputs.
    pub holds: bool,
}

/// Evaluate C(n-j, k-j)/C(n,k) against (k/n)^j exactly.
///
/// Requires `n >= 1` and `0 <= j <= k <= n`.
pub fn binom_ratio_and_bound(n: u64, k: u64, j: u64) -> Result<RatioBound, BoundsError> {
    if n < 1 || j > k || k > n {
        return Err(BoundsError::RatioPrecondition { n, k, j });
    }
    let ratio = ratio_of(binomial(n - j, (k - j) as i64), binomial(n, k as i64));
    let bound = ratio_of(BigUint::from(k), BigUint::from(n));
    let bound = big_rational_pow(&bound, j);
    let holds = ratio <= bound;
    Ok(RatioBound { ratio, bound, holds })
}

fn big_rational_pow(r: &BigRational, exp: u64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    // k/n is already reduced; pow of numerator and denominator stays reduced.
    let num = big_pow(&r.numer().magnitude().clone(), exp);
    let den = big_pow(&r.denom().magnitude().clone(), exp);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact evaluation of the lower bound on the number of B_2[g]-sets of
/// cardinality `k` in `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub g: u64,
    /// C(n, k).
    pub binom: BigUint,
    /// `1 - 4k^(2g+2)/n^g`, unclamped; negative means the bound is vacuous.
    pub raw_term: BigRational,
    /// `C(n,k) * max(0, raw_term)`.
    pub bound_value: BigRational,
}

impl BoundReport {
    /// `max(0, raw_term)`: the exact lower bound on the density ratio
    /// B_2[g](k,n) / C(n,k), clamped into [0, 1].
    pub fn ratio_bound(&self) -> BigRational {
        if self.raw_term.is_negative() {
            BigRational::zero()
        } else {
            self.raw_term.clone()
        }
    }
}

/// Lower bound `B_2[g](k,n) > C(n,k)·(1 - 4k^(2g+2)/n^g)`, evaluated exactly.
///
/// Negative raw terms clamp the bound value to zero (the bound is vacuous
/// there); the unclamped term is preserved for reporting.
pub fn b2g_lower_bound(n: u64, k: u64, g: u64) -> Result<BoundReport, BoundsError> {
    if n < 1 {
        return Err(BoundsError::ZeroParameter { name: "n" });
    }
    if k < 1 {
        return Err(BoundsError::ZeroParameter { name: "k" });
    }
    if g < 1 {
        return Err(BoundsError::ZeroParameter { name: "g" });
    }
    if k > n {
        return Err(BoundsError::KExceedsN { k, n });
    }
    let binom = binomial(n, k as i64);
    // 4 k^(2g+2) / n^g
    let num = BigUint::from(4u32) * big_pow(&BigUint::from(k), 2 * g + 2);
    let den = big_pow(&BigUint::from(n), g);
    let raw_term = BigRational::one() - ratio_of(num, den);
    let bound_value = if raw_term.is_negative() {
        BigRational::zero()
    } else {
        BigRational::from(BigInt::from(binom.clone())) * &raw_term
    };
    Ok(BoundReport { n, k, g, binom, raw_term, bound_value })
}

/// Smallest integer `cap` with `cap^h >= h!·g·h·n`.
///
/// For `h >= 2`, every B_h[g]-set in `{1, ..., n}` has fewer than `cap`
/// elements. For `h = 1` the value is still the formula above, but the
/// guarantee degenerates: every set is a B_1[g]-set, so for `g = 1` the full
/// interval `{1, ..., n}` attains `k = cap = n`.
pub fn bhg_cardinality_cap(n: u64, h: u32, g: u64) -> Result<u64, BoundsError> {
    if n < 1 {
        return Err(BoundsError::ZeroParameter { name: "n" });
    }
    if h < 1 {
        return Err(BoundsError::ZeroParameter { name: "h" });
    }
    if g < 1 {
        return Err(BoundsError::ZeroParameter { name: "g" });
    }
    let mut target = BigUint::from(g) * BigUint::from(h) * BigUint::from(n);
    for i in 2..=u64::from(h) {
        target *= i;
    }
    // Bracket the h-th root with u64 endpoints, then bisect for the least
    // cap with cap^h >= target.
    let pow_ge = |c: u64| -> bool { big_pow(&BigUint::from(c), u64::from(h)) >= target };
    let mut hi = 1u64;
    while !pow_ge(hi) {
        hi = hi.checked_mul(2).ok_or(BoundsError::CapOverflow)?;
    }
    let mut lo = hi / 2; // lo^h < target (or lo = 0)
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if pow_ge(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// The defect scaling term `k^(2h)/n` as an exact rational.
///
/// The number of k-sets that are B_(h-1) but not B_h is `O(C(n,k)·k^(2h)/n)`
/// with an implied constant depending only on h; only the scaling quantity is
/// computable, so callers divide observed defects by this term to expose the
/// constant empirically.
pub fn bh_defect_scaling(n: u64, k: u64, h: u32) -> Result<BigRational, BoundsError> {
    if n < 1 {
        return Err(BoundsError::ZeroParameter { name: "n" });
    }
    if k < 1 {
        return Err(BoundsError::ZeroParameter { name: "k" });
    }
    if h < 1 {
        return Err(BoundsError::ZeroParameter { name: "h" });
    }
    Ok(ratio_of(big_pow(&BigUint::from(k), 2 * u64::from(h)), BigUint::from(n)))
}
