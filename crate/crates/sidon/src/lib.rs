//! Sidon and B_h[g] sets over `{1, ..., n}`: exact representation functions,
//! membership tests, exact censuses with an independent oracle, closed-form
//! counting bounds, and reproducible Monte Carlo density experiments.
//!
//! A set `A` of positive integers is a B_h[g]-set when no integer has more
//! than `g` representations as a nondecreasing sum of `h` elements of `A`;
//! `B_2[1]` is the classical Sidon property. Small random subsets are almost
//! always B_h[g]-sets, and this crate provides both sides of that story at
//! desk scale: exact counts `B_h[g](k, n)` with the machinery to verify them
//! two independent ways, and seeded sampling experiments that trace how the
//! density `B_h[g](k, n) / C(n, k)` behaves as `k` grows with `n`.
//!
//! The `examples/` directory is the guided tour; each example is a runnable
//! program exercising one capability:
//!
//! ```bash
//! cargo run --release --example check_membership
//! cargo run --release --example representation_functions
//! cargo run --release --example triple_decomposition
//! cargo run --release --example incremental_checking
//! cargo run --release --example closed_form_bounds
//! cargo run --release --example exact_census
//! cargo run --release --example estimate_probability
//! cargo run --release --example density_scan
//! cargo run --release --example threshold_probe
//! ```
//!
//! The same functionality is scriptable through the `sidon` binary
//! (`check`, `count`, `bound`, `cap`, `estimate`, `scan`, `threshold`).
//!
//! Module map:
//! - [`set`], [`rep`], [`triple`], [`checker`]: sets, representation
//!   functions, membership, canonical triple decomposition, and the
//!   incremental push/pop checker.
//! - [`bounds`]: exact big-integer and rational closed forms.
//! - [`census`]: exact counting/enumeration with pruned backtracking and the
//!   brute-force oracle.
//! - [`montecarlo`] and [`rng`]: seeded, schedule-independent estimation.
//! - [`decimal`]: fixed 12-significant-digit rendering for output layers.
//! - [`cli`]: the command-line front end used by the `sidon` binary.

pub mod bounds;
pub mod census;
pub mod checker;
pub mod cli;
pub mod decimal;
pub mod error;
pub mod montecarlo;
pub mod rep;
pub mod rng;
pub mod set;
pub mod triple;

pub use bounds::{b2g_lower_bound, bh_defect_scaling, bhg_cardinality_cap, binomial, BoundReport};
pub use census::{census_table, count_exact, count_oracle, enumerate, CensusConfig, CensusRecord};
pub use checker::IncrementalChecker;
pub use error::CoreError;
pub use montecarlo::{
    density_scan, estimate_probability, sample_k_subset, threshold_experiment, Estimate,
    ScanConfig,
};
pub use rep::{is_bhg, representation_count, representation_table, representations, sumset};
pub use set::IntegerSet;
pub use triple::{compositions, decompose, recompose, RepTriple};
