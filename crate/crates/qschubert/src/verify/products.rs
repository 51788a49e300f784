//! Pair sweeps: every statement quantified over pairs of shapes in a box —
//! minimal-degree facts, the rectangle-containment corollary, the d_max
//! bound, and the two degree conjectures.

use rayon::prelude::*;

use super::{Counterexample, Stopwatch, SweepMode, VerificationReport};
use crate::lr::lr_nonzero;
use crate::partition::{partitions_with_size, Grassmannian, Partition};
use crate::quantum::{d_max, d_min, quantum_product_basis};
use crate::rimhook::n_core_abacus;

fn case_id(lam: &Partition, mu: &Partition) -> String {
    format!("lambda={lam} mu={mu}")
}

/// Shapes of the box in canonical order; pair index `i * count + j`.
fn box_shapes(ctx: Grassmannian) -> Vec<Partition> {
    ctx.partitions().collect()
}

/// All `rho` contributing to the quantum product: right size, first part
/// within `k`, nonvanishing Littlewood–Richardson coefficient. Rows are
/// unbounded except by the vanishing of the coefficient itself.
fn contributing_shapes(lam: &Partition, mu: &Partition, ctx: Grassmannian) -> Vec<Partition> {
    partitions_with_size(lam.size() + mu.size(), ctx.k(), lam.len() + mu.len())
        .filter(|rho| rho.contains(lam) && rho.contains(mu) && lr_nonzero(lam, mu, rho))
        .collect()
}

fn pair_sweep<T: Send>(
    ctx: Grassmannian,
    mode: SweepMode,
    check: impl Fn(&Partition, &Partition) -> T + Sync,
) -> (u64, Vec<T>) {
    let shapes = box_shapes(ctx);
    let count = shapes.len() as u64;
    let indices = mode.select(count * count);
    let outcomes: Vec<T> = indices
        .par_iter()
        .map(|&idx| {
            let lam = &shapes[(idx / count) as usize];
            let mu = &shapes[(idx % count) as usize];
            check(lam, mu)
        })
        .collect();
    (indices.len() as u64, outcomes)
}

/// The lowest removal degree over term-producing `rho` survives into the
/// product: signed contributions at that degree never cancel to zero, so
/// `d_min` equals the combinatorial minimum taken before any cancellation.
///
/// A `rho` only produces a term when its n-core fits the box (otherwise the
/// corresponding class is zero), so the minimum ranges over those; a core
/// with more than `l` rows can be reached with fewer removals than the
/// overlap square predicts, but contributes nothing.
pub fn check_thm_min_degree_no_cancellation(
    ctx: Grassmannian,
    mode: SweepMode,
) -> VerificationReport {
    let clock = Stopwatch::start();
    let n = ctx.n();
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let lowest = contributing_shapes(lam, mu, ctx)
            .iter()
            .filter_map(|rho| {
                let (core, count) = n_core_abacus(rho, n).expect("n = l + k >= 2");
                ctx.contains(&core).then_some(count)
            })
            .min();
        let observed = d_min(lam, mu, ctx).expect("box shapes").map(u64::from);
        if lowest == observed {
            None
        } else {
            Some(Counterexample {
                case: case_id(lam, mu),
                detail: format!(
                    "lowest removal degree over contributing shapes is {lowest:?} \
                     but the product starts at q-degree {observed:?}"
                ),
            })
        }
    });
    VerificationReport {
        suite: "thm-no-cancel".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples: outcomes.into_iter().flatten().collect(),
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// `d_min` equals the side of the largest square in the overlap of `lambda`
/// with the rotated `mu`.
pub fn check_thm_dmin_equals_square(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let square = ctx.largest_square_in_overlap(lam, mu).expect("box shapes");
        match d_min(lam, mu, ctx).expect("box shapes") {
            Some(d) if d == square => (None, None),
            Some(d) => (
                Some(Counterexample {
                    case: case_id(lam, mu),
                    detail: format!("d_min = {d} but the largest overlap square has side {square}"),
                }),
                None,
            ),
            None => (
                None,
                Some(format!(
                    "{}: product is zero; no d_min to compare",
                    case_id(lam, mu)
                )),
            ),
        }
    });
    let (failures, notes): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
    VerificationReport {
        suite: "thm-dmin".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples: failures.into_iter().flatten().collect(),
        notes: notes.into_iter().flatten().collect(),
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// Every contributing `rho` contains the `(l + d) x d` rectangle, where `d`
/// is the largest overlap square of the pair.
pub fn check_corollary_rectangle_containment(
    ctx: Grassmannian,
    mode: SweepMode,
) -> VerificationReport {
    let clock = Stopwatch::start();
    let l = ctx.l();
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let d = ctx.largest_square_in_overlap(lam, mu).expect("box shapes");
        if d == 0 {
            return None; // the empty rectangle is contained in anything
        }
        let needed_row = (l + d - 1) as usize;
        for rho in contributing_shapes(lam, mu, ctx) {
            if rho.part(needed_row) < d {
                return Some(Counterexample {
                    case: case_id(lam, mu),
                    detail: format!(
                        "contributing shape rho={rho} does not contain the {}x{d} rectangle",
                        l + d
                    ),
                });
            }
        }
        None
    });
    VerificationReport {
        suite: "cor-rect".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples: outcomes.into_iter().flatten().collect(),
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// `d_max` never exceeds the smaller Durfee side; also tallies where that
/// bound is strictly sharper than the crude `(|lambda| + |mu|) / n` bound.
pub fn check_dmax_bound(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let n = ctx.n() as u64;
    struct Outcome {
        failure: Option<Counterexample>,
        improvement: Option<String>,
        zero_product: Option<String>,
    }
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let durfee_bound = lam.durfee().min(mu.durfee());
        let size_bound = (lam.size() + mu.size()) / n;
        let improvement = (u64::from(durfee_bound) < size_bound)
            .then(|| format!("{}: {durfee_bound} < {size_bound}", case_id(lam, mu)));
        match d_max(lam, mu, ctx).expect("box shapes") {
            Some(d) if d <= durfee_bound => Outcome {
                failure: None,
                improvement,
                zero_product: None,
            },
            Some(d) => Outcome {
                failure: Some(Counterexample {
                    case: case_id(lam, mu),
                    detail: format!("d_max = {d} exceeds min Durfee side {durfee_bound}"),
                }),
                improvement,
                zero_product: None,
            },
            None => Outcome {
                failure: None,
                improvement,
                zero_product: Some(format!(
                    "{}: product is zero; no d_max to bound",
                    case_id(lam, mu)
                )),
            },
        }
    });
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    let mut improvements: Vec<String> = Vec::new();
    for outcome in outcomes {
        counterexamples.extend(outcome.failure);
        improvements.extend(outcome.improvement);
        notes.extend(outcome.zero_product);
    }
    if let Some(first) = improvements.first() {
        notes.push(format!(
            "durfee bound is sharper than the size/n bound on {} of {} pairs (first: {})",
            improvements.len(),
            cases,
            first
        ));
    }
    VerificationReport {
        suite: "dmax-bound".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples,
        notes,
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// The set of occurring q-degrees is a gap-free interval `[d_min, d_max]`.
/// A conjecture, not a theorem: failures are reported, never asserted away.
pub fn check_conjecture_degree_interval(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let product = quantum_product_basis(lam, mu, ctx).expect("box shapes");
        let degrees = product.degrees();
        let (lo, hi) = match (degrees.iter().next(), degrees.iter().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return None, // zero product: nothing conjectured
        };
        if degrees.len() as u64 == u64::from(hi - lo) + 1 {
            None
        } else {
            let have: Vec<String> = degrees.iter().map(u32::to_string).collect();
            Some(Counterexample {
                case: case_id(lam, mu),
                detail: format!(
                    "degrees {{{}}} are not the full interval [{lo}, {hi}]",
                    have.join(",")
                ),
            })
        }
    });
    VerificationReport {
        suite: "conj-interval".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples: outcomes.into_iter().flatten().collect(),
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// Descent: every term at degree `d >= 1` sits below a term at degree
/// `d - 1` whose shape contains it (lowering the degree by one frees up
/// `n` extra cells), unless degrees below `d` are absent from the product
/// altogether. Also a conjecture.
pub fn check_conjecture_degree_descent(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let (cases, outcomes) = pair_sweep(ctx, mode, |lam, mu| {
        let product = quantum_product_basis(lam, mu, ctx).expect("box shapes");
        let keys: Vec<(u32, &Partition)> = product.terms().keys().map(|(d, nu)| (*d, nu)).collect();
        for &(d, tau) in &keys {
            if d == 0 {
                continue;
            }
            let has_predecessor = keys
                .iter()
                .any(|&(e, beta)| e == d - 1 && beta.contains(tau));
            let has_lower_degree = keys.iter().any(|&(e, _)| e < d);
            if !has_predecessor && has_lower_degree {
                return Some(Counterexample {
                    case: case_id(lam, mu),
                    detail: format!(
                        "term (d={d}, nu={tau}) has no containing shape at degree {} \
                         although lower degrees occur",
                        d - 1
                    ),
                });
            }
        }
        None
    });
    VerificationReport {
        suite: "conj-descent".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases,
        counterexamples: outcomes.into_iter().flatten().collect(),
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}
