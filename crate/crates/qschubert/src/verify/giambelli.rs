//! The Giambelli determinant in the quantum ring: expanding the hook-class
//! determinant of every box shape must reproduce exactly that Schubert
//! class, with all quantum corrections cancelling.

use rayon::prelude::*;

use super::{Counterexample, Stopwatch, SweepMode, VerificationReport};
use crate::partition::{Grassmannian, Partition};
use crate::quantum::quantum_giambelli_check;

pub fn check_quantum_giambelli(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let shapes: Vec<Partition> = ctx.partitions().collect();
    let indices = mode.select(shapes.len() as u64);
    let failures: Vec<Counterexample> = indices
        .par_iter()
        .filter_map(|&idx| {
            let lam = &shapes[idx as usize];
            if quantum_giambelli_check(lam, ctx).expect("box shapes") {
                None
            } else {
                Some(Counterexample {
                    case: format!("lambda={lam}"),
                    detail: "hook-class determinant does not reduce to the single class".into(),
                })
            }
        })
        .collect();
    VerificationReport {
        suite: "giambelli".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases: indices.len() as u64,
        counterexamples: failures,
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn giambelli_passes_on_small_boxes() {
        for (l, k) in [(1, 1), (2, 2), (1, 3), (2, 3)] {
            let g = Grassmannian::new(l, k).unwrap();
            let report = check_quantum_giambelli(g, SweepMode::Exhaustive);
            assert_eq!(report.cases, g.partition_count());
            assert!(report.passed(), "box {g}: {:?}", report.counterexamples);
        }
    }
}
