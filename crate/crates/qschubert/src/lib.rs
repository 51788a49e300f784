//! Quantum Schubert calculus on Grassmannians.
//!
//! The small quantum cohomology ring of the Grassmannian of l-planes in
//! complex (l+k)-space deforms the classical cup product by Gromov–Witten
//! invariants. This crate computes that product combinatorially — classical
//! Littlewood–Richardson expansions corrected by rim-hook removals of size
//! `n = l + k` — plus the minimal and maximal powers of `q` that appear,
//! and ships exhaustive small-case verification sweeps for the structural
//! facts the computations rely on.

pub mod lr;
pub mod partition;
pub mod quantum;
pub mod rimhook;
pub mod verify;

pub use lr::{
    classical_product, kappa, kappa_rectangles_closed_form, lr_coefficient, lr_nonzero,
    product_nonzero, triple_product_nonzero_bruteforce, ClassicalExpansion,
};
pub use partition::{
    hook_partition, partitions_up_to, partitions_with_size, Cell, Frobenius, Grassmannian,
    ParsePartitionError, Partition, PartitionError, Rectangle,
};
pub use quantum::{
    d_max, d_min, gw_invariant, occurring_degrees, quantum_giambelli_check, quantum_product_basis,
    ring_add, ring_multiply, QuantumError, QuantumExpansion,
};
pub use rimhook::{
    epsilon, legal_rim_hooks, n_core, n_core_abacus, n_core_with_rng, removal_count, RimHook,
    RimHookError, RimHookTrace,
};
pub use verify::{Counterexample, SweepMode, VerificationReport};
