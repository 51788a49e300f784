//! Removal-order independence of the coring machinery: every random removal
//! order must land on the same core, the same hook count, and the same sign
//! for every box split of `n`, and the abacus computation must agree with
//! the explicit removal loop.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Counterexample, Stopwatch, SweepMode, VerificationReport};
use crate::partition::{partitions_up_to, Grassmannian, Partition};
use crate::rimhook::{n_core, n_core_abacus, n_core_with_rng};

/// Shapes exercised per context: everything up to this many cells.
const MAX_SIZE: u64 = 14;
/// Random removal orders tried per shape.
const ORDERS: u32 = 50;

pub fn check_core_removal_orders(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let n = ctx.n();
    let shapes: Vec<Partition> =
        partitions_up_to(MAX_SIZE, MAX_SIZE as u32, MAX_SIZE as usize).collect();
    let indices = mode.select(shapes.len() as u64);
    let base_seed = mode.order_seed();
    let failures: Vec<Counterexample> = indices
        .par_iter()
        .filter_map(|&idx| {
            let shape = &shapes[idx as usize];
            let case = format!("rho={shape} n={n}");
            let canonical = n_core(shape, n).expect("n >= 2");
            let (abacus_core, abacus_count) = n_core_abacus(shape, n).expect("n >= 2");
            if abacus_core != *canonical.core()
                || abacus_count != u64::from(canonical.removal_count())
            {
                return Some(Counterexample {
                    case,
                    detail: format!(
                        "abacus says core {abacus_core} after {abacus_count} hooks, removal \
                         loop says {} after {}",
                        canonical.core(),
                        canonical.removal_count()
                    ),
                });
            }
            let mut rng =
                ChaCha8Rng::seed_from_u64(base_seed ^ idx.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            for _ in 0..ORDERS {
                let trace = n_core_with_rng(shape, n, &mut rng).expect("n >= 2");
                if trace.core() != canonical.core()
                    || trace.removal_count() != canonical.removal_count()
                {
                    return Some(Counterexample {
                        case,
                        detail: format!(
                            "a random removal order reached core {} after {} hooks instead \
                             of {} after {}",
                            trace.core(),
                            trace.removal_count(),
                            canonical.core(),
                            canonical.removal_count()
                        ),
                    });
                }
                if let Some(split) = (1..n).find(|&k| trace.sign(k) != canonical.sign(k)) {
                    return Some(Counterexample {
                        case,
                        detail: format!(
                            "sign differs between removal orders for the split k={split}: \
                             widths {:?} vs {:?}",
                            trace.widths(),
                            canonical.widths()
                        ),
                    });
                }
            }
            None
        })
        .collect();
    VerificationReport {
        suite: "core-orders".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases: indices.len() as u64,
        counterexamples: failures,
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}
