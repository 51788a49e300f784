//! Exhaustive small-case verification sweeps.
//!
//! Each suite re-derives one structural fact about quantum Schubert products
//! from scratch over every case in an enumerated range — every pair of box
//! shapes, every rectangle triple, every removal order — and reports the
//! cases that disagree. Suites are deterministic: cases are enumerated in a
//! canonical order, checked independently (in parallel when a thread pool is
//! available), and merged back in enumeration order, so a report's content
//! is identical across runs and worker counts.
//!
//! A sampled mode checks a seeded random subset of the same case list; its
//! cases are always a subset of the exhaustive sweep's.

mod cores;
mod giambelli;
mod kappa;
mod products;
mod triples;

pub use cores::check_core_removal_orders;
pub use giambelli::check_quantum_giambelli;
pub use kappa::{
    check_kappa_closed_form, check_kappa_lemmas, check_kappa_monotonicity, check_kappa_rotation,
};
pub use products::{
    check_conjecture_degree_descent, check_conjecture_degree_interval,
    check_corollary_rectangle_containment, check_dmax_bound, check_thm_dmin_equals_square,
    check_thm_min_degree_no_cancellation,
};
pub use triples::check_triple_rectangle_criterion;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::partition::Grassmannian;

/// One failing case: a canonical identifier (re-runnable by hand) plus what
/// went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

/// Outcome of one suite over one box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub l: u32,
    pub k: u32,
    /// Cases actually checked (the full enumeration, or the sampled subset).
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Non-failure observations worth surfacing (bound comparisons, skipped
    /// degenerate cases, zero products).
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// How much of a suite's case list to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// A seeded random subset of `count` cases from the canonical list.
    Sample {
        count: u64,
        seed: u64,
    },
}

impl SweepMode {
    /// The case indices to check, ascending.
    pub(crate) fn select(self, total: u64) -> Vec<u64> {
        match self {
            SweepMode::Exhaustive => (0..total).collect(),
            SweepMode::Sample { count, seed } => sample_indices(total, count, seed),
        }
    }

    /// Seed for checks that are themselves randomized (removal orders).
    pub(crate) fn order_seed(self) -> u64 {
        match self {
            SweepMode::Exhaustive => 0x51ab_c0de,
            SweepMode::Sample { seed, .. } => seed,
        }
    }
}

/// `count` distinct indices below `total`, ascending, determined by `seed`
/// (partial Fisher–Yates).
fn sample_indices(total: u64, count: u64, seed: u64) -> Vec<u64> {
    if count >= total {
        return (0..total).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u64> = (0..total).collect();
    for i in 0..count as usize {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
    }
    let mut selected = pool[..count as usize].to_vec();
    selected.sort_unstable();
    selected
}

/// Boxes for shape-pair sweeps: `1 <= l <= k`, `l + k <= max_n`. The `l > k`
/// boxes are transposes and carry the same products.
pub fn contexts_up_to(max_n: u32) -> Vec<Grassmannian> {
    let mut out = Vec::new();
    for l in 1..=(max_n / 2) {
        for k in l..=(max_n - l) {
            out.push(Grassmannian::new(l, k).expect("positive sides"));
        }
    }
    out
}

/// Boxes for rectangle- and determinant-level sweeps: all `l, k <= side`.
pub fn contexts_square(side: u32) -> Vec<Grassmannian> {
    let mut out = Vec::new();
    for l in 1..=side {
        for k in 1..=side {
            out.push(Grassmannian::new(l, k).expect("positive sides"));
        }
    }
    out
}

pub(crate) struct Stopwatch(Instant);

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch(Instant::now())
    }

    pub(crate) fn elapsed_ms(&self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}
