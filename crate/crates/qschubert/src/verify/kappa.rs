//! Sweeps for the minimal-containing-shape operator: the rotation criterion
//! for products against a rectangle class, monotonicity in both arguments,
//! and the closed form on rectangle pairs against the brute-force definition.

use rayon::prelude::*;

use super::{Counterexample, Stopwatch, SweepMode, VerificationReport};
use crate::lr::{kappa, kappa_rectangles_closed_form, triple_product_nonzero_bruteforce};
use crate::partition::{Grassmannian, Partition, Rectangle};

/// Nonempty rectangles of the box, ascending `(rows, cols)`.
fn nonempty_rectangles(ctx: Grassmannian) -> Vec<Rectangle> {
    let mut out = Vec::new();
    for rows in 1..=ctx.l() {
        for cols in 1..=ctx.k() {
            out.push(Rectangle::new(rows, cols));
        }
    }
    out
}

/// All rectangles including the empty one.
fn all_rectangles(ctx: Grassmannian) -> Vec<Rectangle> {
    let mut out = vec![Rectangle::new(0, 0)];
    out.extend(nonempty_rectangles(ctx));
    out
}

/// Rotation criterion: `sigma_a . sigma_b . sigma_{m x M} != 0` exactly when
/// `kappa(a, b)` avoids the rotated rectangle. Quantified over shape pairs
/// and nonempty rectangles; the empty rectangle is excluded because the
/// criterion's right side ignores it while the left side degenerates to the
/// two-factor product, and the two sides genuinely differ when that product
/// vanishes.
pub fn check_kappa_rotation(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let shapes: Vec<Partition> = ctx.partitions().collect();
    let rects = nonempty_rectangles(ctx);
    let (s, r) = (shapes.len() as u64, rects.len() as u64);
    let indices = mode.select(s * s * r);
    let failures: Vec<Counterexample> = indices
        .par_iter()
        .filter_map(|&idx| {
            let alpha = &shapes[(idx / (s * r)) as usize];
            let beta = &shapes[(idx / r % s) as usize];
            let rect = rects[(idx % r) as usize];
            let product = triple_product_nonzero_bruteforce(alpha, beta, &rect.partition(), ctx)
                .expect("box shapes");
            let bound = kappa(alpha, beta, ctx).expect("box shapes");
            let avoids = ctx
                .overlap_with_rotation(&bound, &rect.partition())
                .expect("box shapes")
                .is_empty();
            if product == avoids {
                None
            } else {
                Some(Counterexample {
                    case: format!("alpha={alpha} beta={beta} rect={rect}"),
                    detail: format!(
                        "triple product nonzero: {product}; kappa={bound} avoids rotated \
                         rectangle: {avoids}"
                    ),
                })
            }
        })
        .collect();
    VerificationReport {
        suite: "kappa-rotation".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases: indices.len() as u64,
        counterexamples: failures,
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// Monotonicity: growing either argument can only grow `kappa`. Quantified
/// over all containment-nested pairs of pairs.
pub fn check_kappa_monotonicity(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let shapes: Vec<Partition> = ctx.partitions().collect();
    let s = shapes.len();
    // kappa for every pair, computed once up front
    let table: Vec<Vec<Partition>> = shapes
        .par_iter()
        .map(|a| {
            shapes
                .iter()
                .map(|b| kappa(a, b, ctx).expect("box shapes"))
                .collect()
        })
        .collect();
    // nested[i] lists the shapes containing shapes[i]
    let nested: Vec<(usize, usize)> = (0..s)
        .flat_map(|small| {
            let shapes = &shapes;
            (0..s)
                .filter(move |&large| shapes[large].contains(&shapes[small]))
                .map(move |large| (small, large))
        })
        .collect();
    let n = nested.len() as u64;
    let indices = mode.select(n * n);
    let failures: Vec<Counterexample> = indices
        .par_iter()
        .filter_map(|&idx| {
            let (alpha, lam) = nested[(idx / n) as usize];
            let (beta, mu) = nested[(idx % n) as usize];
            let small = &table[alpha][beta];
            let large = &table[lam][mu];
            if large.contains(small) {
                None
            } else {
                Some(Counterexample {
                    case: format!(
                        "alpha={} beta={} lambda={} mu={}",
                        shapes[alpha], shapes[beta], shapes[lam], shapes[mu]
                    ),
                    detail: format!("kappa shrank from {small} to {large} as arguments grew"),
                })
            }
        })
        .collect();
    VerificationReport {
        suite: "kappa-monotone".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases: indices.len() as u64,
        counterexamples: failures,
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// The rectangle-pair closed form agrees with the brute-force definition,
/// empty rectangles and vanishing products included.
pub fn check_kappa_closed_form(ctx: Grassmannian, mode: SweepMode) -> VerificationReport {
    let clock = Stopwatch::start();
    let rects = all_rectangles(ctx);
    let r = rects.len() as u64;
    let indices = mode.select(r * r);
    let failures: Vec<Counterexample> = indices
        .par_iter()
        .filter_map(|&idx| {
            let (first, second) = (rects[(idx / r) as usize], rects[(idx % r) as usize]);
            let closed = kappa_rectangles_closed_form(first, second, ctx).expect("box rectangles");
            let brute =
                kappa(&first.partition(), &second.partition(), ctx).expect("box rectangles");
            if closed == brute {
                None
            } else {
                Some(Counterexample {
                    case: format!("a={first} b={second}"),
                    detail: format!("closed form gives {closed}, brute force gives {brute}"),
                })
            }
        })
        .collect();
    VerificationReport {
        suite: "kappa-closed-form".into(),
        l: ctx.l(),
        k: ctx.k(),
        cases: indices.len() as u64,
        counterexamples: failures,
        notes: vec![],
        elapsed_ms: clock.elapsed_ms(),
    }
}

/// All three lemma suites on one box.
pub fn check_kappa_lemmas(ctx: Grassmannian, mode: SweepMode) -> Vec<VerificationReport> {
    vec![
        check_kappa_rotation(ctx, mode),
        check_kappa_monotonicity(ctx, mode),
        check_kappa_closed_form(ctx, mode),
    ]
}
