//! Rim hooks (border strips) of length `n`, their legal removal, `n`-cores,
//! and the sign attached to a removal sequence.
//!
//! Two independent core computations live here on purpose: the explicit
//! removal loop (which also records hook widths, needed for the sign) and a
//! beta-number / abacus construction. They must always agree; the test suite
//! and the `core-orders` verification sweep hold them against each other.

use rand::Rng;
use thiserror::Error;

use crate::partition::{Cell, Grassmannian, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RimHookError {
    #[error("n-core computation requires n >= 2 (got {0})")]
    HookTooSmall(u32),
}

/// A removable strip of `n` edge-connected rim cells containing no 2x2
/// square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    cells: Vec<Cell>, // row-major order
    width: u32,
}

impl RimHook {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells in the strip.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of distinct columns the strip occupies.
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Topmost, then leftmost cell — the anchor used for canonical ordering.
    pub fn head(&self) -> Cell {
        self.cells[0]
    }

    /// The partition left after removing this strip. Only meaningful for the
    /// partition the strip was enumerated from.
    pub fn removed_from(&self, p: &Partition) -> Partition {
        let mut parts: Vec<u32> = p.parts().to_vec();
        for &(r, c) in &self.cells {
            debug_assert!(p.part(r as usize - 1) >= c, "cell outside the shape");
            parts[r as usize - 1] -= 1;
        }
        Partition::new(parts).expect("removing a rim strip leaves a partition")
    }
}

/// All legal `n`-rim hooks of `p`, ordered by head cell in row-major order.
///
/// Every removable strip of `n` cells arises from exactly one cell of `p`
/// with hook length `n`: the strip of rim cells weakly below-right of it.
/// Scanning cells row-major therefore yields each hook once, already in
/// canonical order (two hooks cannot share their top row).
pub fn legal_rim_hooks(p: &Partition, n: u32) -> Vec<RimHook> {
    let mut hooks = Vec::new();
    if n == 0 {
        return hooks;
    }
    let parts = p.parts();
    for r in 1..=parts.len() as u32 {
        for c in 1..=parts[r as usize - 1] {
            let arm = parts[r as usize - 1] - c;
            let leg = parts[r as usize..].iter().take_while(|&&q| q >= c).count() as u32;
            if arm + leg + 1 != n {
                continue;
            }
            let mut cells = Vec::with_capacity(n as usize);
            for x in r..=r + leg {
                let row_end = p.part(x as usize - 1);
                let row_start = c.max(p.part(x as usize)); // (x+1, y+1) must lie outside
                for y in row_start.max(1)..=row_end {
                    cells.push((x, y));
                }
            }
            debug_assert_eq!(cells.len() as u32, n);
            let width = parts[r as usize - 1] - c + 1;
            hooks.push(RimHook { cells, width });
        }
    }
    hooks
}

/// A full removal history: the hooks taken out of `source`, in order, down
/// to the `n`-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHookTrace {
    source: Partition,
    n: u32,
    removed: Vec<RimHook>,
    core: Partition,
}

impl RimHookTrace {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn removed(&self) -> &[RimHook] {
        &self.removed
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    /// How many hooks were removed; equals `(|source| - |core|) / n`.
    pub fn removal_count(&self) -> u32 {
        self.removed.len() as u32
    }

    pub fn widths(&self) -> Vec<u32> {
        self.removed.iter().map(RimHook::width).collect()
    }

    /// The sign `(-1)^(sum over hooks of (k - width))`. The exponent can go
    /// negative when hooks are wider than `k`; only its parity matters.
    pub fn sign(&self, k: u32) -> i32 {
        let exponent: i64 = self
            .removed
            .iter()
            .map(|h| k as i64 - h.width() as i64)
            .sum();
        if exponent.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// Computes the `n`-core by repeatedly removing the canonically-first legal
/// hook. The resulting core (and, less obviously, the sign) do not depend on
/// the order; that is verified empirically elsewhere rather than assumed.
pub fn n_core(p: &Partition, n: u32) -> Result<RimHookTrace, RimHookError> {
    n_core_by(p, n, |_| 0)
}

/// Same computation, but picking a random legal hook at every step. Exists
/// so tests and the `core-orders` sweep can probe order-independence.
pub fn n_core_with_rng<R: Rng + ?Sized>(
    p: &Partition,
    n: u32,
    rng: &mut R,
) -> Result<RimHookTrace, RimHookError> {
    n_core_by(p, n, |count| rng.gen_range(0..count))
}

fn n_core_by<F: FnMut(usize) -> usize>(
    p: &Partition,
    n: u32,
    mut choose: F,
) -> Result<RimHookTrace, RimHookError> {
    if n < 2 {
        return Err(RimHookError::HookTooSmall(n));
    }
    let mut current = p.clone();
    let mut removed = Vec::new();
    loop {
        let mut hooks = legal_rim_hooks(&current, n);
        if hooks.is_empty() {
            break;
        }
        let hook = hooks.swap_remove(choose(hooks.len()));
        current = hook.removed_from(&current);
        removed.push(hook);
    }
    debug_assert_eq!(p.size(), current.size() + n as u64 * removed.len() as u64);
    Ok(RimHookTrace {
        source: p.clone(),
        n,
        removed,
        core: current,
    })
}

/// Number of `n`-hooks removed when passing to the core, computed on the
/// abacus (no hook enumeration).
pub fn removal_count(p: &Partition, n: u32) -> Result<u64, RimHookError> {
    let (core, count) = n_core_abacus(p, n)?;
    debug_assert_eq!(p.size(), core.size() + count * n as u64);
    Ok(count)
}

/// The sign of the rim-hook expansion term for `p` in the given box, read
/// from the canonical removal trace with `n = l + k`.
pub fn epsilon(p: &Partition, ctx: Grassmannian) -> i32 {
    let trace = n_core(p, ctx.n()).expect("l + k >= 2 always");
    trace.sign(ctx.k())
}

/// First-column hook lengths of `p`, padded to `padded_len` rows (the beta
/// numbers of the shape). Strictly decreasing.
pub fn first_column_hook_lengths(p: &Partition, padded_len: usize) -> Vec<u64> {
    assert!(padded_len >= p.len(), "padding must cover every row");
    (0..padded_len)
        .map(|i| p.part(i) as u64 + (padded_len - 1 - i) as u64)
        .collect()
}

/// Beta-number computation of the `n`-core: drop every bead on its runner as
/// far as it goes, then read the partition back off. Independent of the
/// removal loop above by construction.
pub fn n_core_abacus(p: &Partition, n: u32) -> Result<(Partition, u64), RimHookError> {
    if n < 2 {
        return Err(RimHookError::HookTooSmall(n));
    }
    let len = p.len();
    let beta = first_column_hook_lengths(p, len);
    let mut runner_counts = vec![0u64; n as usize];
    for &b in &beta {
        runner_counts[(b % n as u64) as usize] += 1;
    }
    let mut settled: Vec<u64> = Vec::with_capacity(len);
    for (r, &count) in runner_counts.iter().enumerate() {
        for level in 0..count {
            settled.push(r as u64 + level * n as u64);
        }
    }
    settled.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u32> = settled
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (len - 1 - i) as u64) as u32)
        .collect();
    let core = Partition::new(parts).expect("settled beta numbers form a partition");
    let removed = (p.size() - core.size()) / n as u64;
    Ok((core, removed))
}
