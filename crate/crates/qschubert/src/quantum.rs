//! The small quantum cohomology ring of a Grassmannian.
//!
//! Products of Schubert classes are computed by the rim-hook rule: expand
//! classically with `rho_1 <= k` but unbounded row count, then strip rim
//! hooks of size `n = l + k` from each `rho` until its n-core remains. The
//! number of hooks removed is the power of `q`, the product of hook signs is
//! the coefficient's sign, and cores outside the box contribute nothing.
//! Everything downstream — Gromov–Witten numbers, minimal and maximal
//! q-degrees, the quantum Giambelli determinant — reads off these expansions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::{Serialize, SerializeMap, SerializeSeq, SerializeStruct, Serializer};
use thiserror::Error;

use crate::lr::{lr_coefficient, ClassicalExpansion};
use crate::partition::{partitions_with_size, Grassmannian, Partition, PartitionError};
use crate::rimhook::n_core;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("cannot combine expansions over the {left} box and the {right} box")]
    ContextMismatch {
        left: Grassmannian,
        right: Grassmannian,
    },
    #[error(
        "negative structure constant {value} at q^{d} sigma[{nu}]; the computation is corrupt"
    )]
    NegativeCoefficient {
        d: u32,
        nu: Partition,
        value: BigInt,
    },
}

/// An element of the quantum cohomology ring, written in the Schubert basis
/// over integer polynomials in `q`: a finite sum of `coeff * q^d * sigma_nu`
/// terms with `nu` inside the box and every stored coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumExpansion {
    context: Grassmannian,
    terms: BTreeMap<(u32, Partition), BigInt>,
}

impl QuantumExpansion {
    /// The zero element.
    pub fn zero(context: Grassmannian) -> Self {
        QuantumExpansion {
            context,
            terms: BTreeMap::new(),
        }
    }

    /// The ring unit `sigma_empty`.
    pub fn unit(context: Grassmannian) -> Self {
        QuantumExpansion::from_term(context, 0, Partition::empty(), BigInt::from(1))
            .expect("the empty shape fits in every box")
    }

    /// A single term `coeff * q^d * sigma_nu`; the zero element when
    /// `coeff = 0`. Rejects shapes outside the box.
    pub fn from_term(
        context: Grassmannian,
        d: u32,
        nu: Partition,
        coeff: BigInt,
    ) -> Result<Self, QuantumError> {
        if !context.contains(&nu) {
            return Err(PartitionError::OutsideBox {
                partition: nu,
                l: context.l(),
                k: context.k(),
            }
            .into());
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((d, nu), coeff);
        }
        Ok(QuantumExpansion { context, terms })
    }

    pub fn context(&self) -> Grassmannian {
        self.context
    }

    /// Terms keyed by `(d, nu)`, ascending in `d` and then in shape.
    pub fn terms(&self) -> &BTreeMap<(u32, Partition), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `q^d * sigma_nu`, zero when absent.
    pub fn coefficient(&self, d: u32, nu: &Partition) -> BigInt {
        self.terms
            .get(&(d, nu.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn negate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(key, c)| (key.clone(), -c))
            .collect();
        QuantumExpansion {
            context: self.context,
            terms,
        }
    }

    /// The distinct powers of `q` that occur.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|&(d, _)| d).collect()
    }

    /// The `q = 0` truncation: shapes and coefficients of the degree-zero part.
    pub fn classical_part(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .filter(|((d, _), _)| *d == 0)
            .map(|((_, nu), c)| (nu.clone(), c.clone()))
            .collect()
    }
}

/// Text form: ` + `-joined `coeff q^d sigma[nu]` monomials, `0` when zero.
impl fmt::Display for QuantumExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d, nu), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c != BigInt::from(1) {
                write!(f, "{c}*")?;
            }
            match d {
                0 => write!(f, "sigma[{nu}]")?,
                1 => write!(f, "q*sigma[{nu}]")?,
                _ => write!(f, "q^{d}*sigma[{nu}]")?,
            }
        }
        Ok(())
    }
}

/// Serialized as `{context, terms: [{d, nu, coeff}]}` with the coefficient a
/// decimal string, since arbitrary-precision values do not fit JSON numbers.
impl Serialize for QuantumExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Term<'a>(u32, &'a Partition, &'a BigInt);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("d", &self.0)?;
                m.serialize_entry("nu", self.1)?;
                m.serialize_entry("coeff", &self.2.to_string())?;
                m.end()
            }
        }
        struct Terms<'a>(&'a BTreeMap<(u32, Partition), BigInt>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for ((d, nu), c) in self.0 {
                    seq.serialize_element(&Term(*d, nu, c))?;
                }
                seq.end()
            }
        }
        let mut out = serializer.serialize_struct("QuantumExpansion", 2)?;
        out.serialize_field("context", &self.context)?;
        out.serialize_field("terms", &Terms(&self.terms))?;
        out.end()
    }
}

/// The quantum product of two Schubert classes.
///
/// Sums over partitions `rho` with `|rho| = |lam| + |mu|`, first part at most
/// `k`, and at most `len(lam) + len(mu)` rows (the coefficient vanishes
/// beyond that); each `rho` contributes its Littlewood–Richardson
/// coefficient, with the rim-hook sign, to the term of its n-core at the
/// degree counting removed hooks. Cores that stick out of the box are
/// discarded, and coefficients that cancel to zero are dropped.
pub fn quantum_product_basis(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<QuantumExpansion, QuantumError> {
    check_in_box(lam, ctx)?;
    check_in_box(mu, ctx)?;
    let total = lam.size() + mu.size();
    let max_len = lam.len() + mu.len();
    let mut terms: BTreeMap<(u32, Partition), BigInt> = BTreeMap::new();
    for rho in partitions_with_size(total, ctx.k(), max_len) {
        if !rho.contains(lam) || !rho.contains(mu) {
            continue;
        }
        let c = lr_coefficient(lam, mu, &rho);
        if c.is_zero() {
            continue;
        }
        let trace = n_core(&rho, ctx.n()).expect("n = l + k >= 2");
        if !ctx.contains(trace.core()) {
            continue;
        }
        let signed = if trace.sign(ctx.k()) < 0 { -c } else { c };
        let key = (trace.removal_count(), trace.core().clone());
        let entry = terms.entry(key).or_insert_with(BigInt::zero);
        *entry += signed;
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(QuantumExpansion {
        context: ctx,
        terms,
    })
}

/// Coefficientwise sum of two expansions over the same box.
pub fn ring_add(
    x: &QuantumExpansion,
    y: &QuantumExpansion,
) -> Result<QuantumExpansion, QuantumError> {
    check_contexts(x, y)?;
    let mut terms = x.terms.clone();
    for (key, c) in &y.terms {
        let entry = terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(QuantumExpansion {
        context: x.context,
        terms,
    })
}

/// Bilinear extension of the basis product:
/// `(c1 q^{d1} sigma_a)(c2 q^{d2} sigma_b) = c1 c2 q^{d1+d2} (sigma_a * sigma_b)`.
pub fn ring_multiply(
    x: &QuantumExpansion,
    y: &QuantumExpansion,
) -> Result<QuantumExpansion, QuantumError> {
    check_contexts(x, y)?;
    let ctx = x.context;
    let mut terms: BTreeMap<(u32, Partition), BigInt> = BTreeMap::new();
    for ((dx, a), cx) in &x.terms {
        for ((dy, b), cy) in &y.terms {
            let basis = quantum_product_basis(a, b, ctx)?;
            let scale = cx * cy;
            for ((d, nu), c) in &basis.terms {
                let key = (dx + dy + d, nu.clone());
                let entry = terms.entry(key).or_insert_with(BigInt::zero);
                *entry += c * &scale;
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(QuantumExpansion {
        context: ctx,
        terms,
    })
}

/// The three-point genus-zero Gromov–Witten invariant `<lam, mu, nu>_d`:
/// the coefficient of `q^d sigma_{nu^complement}` in `sigma_lam * sigma_mu`,
/// zero when no such term occurs. A negative value cannot happen for a
/// correct computation and is reported as corruption.
pub fn gw_invariant(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: u32,
    ctx: Grassmannian,
) -> Result<BigInt, QuantumError> {
    check_in_box(nu, ctx)?;
    let dual = ctx.complement(nu)?;
    let c = quantum_product_basis(lam, mu, ctx)?.coefficient(d, &dual);
    if c.is_negative() {
        return Err(QuantumError::NegativeCoefficient {
            d,
            nu: dual,
            value: c,
        });
    }
    Ok(c)
}

/// The smallest power of `q` in `sigma_lam * sigma_mu`, or `None` for a zero
/// expansion (a case no product of box shapes is known to produce; callers
/// surface it rather than assuming it away).
pub fn d_min(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<Option<u32>, QuantumError> {
    let product = quantum_product_basis(lam, mu, ctx)?;
    Ok(product.terms.keys().map(|&(d, _)| d).min())
}

/// The largest power of `q` in `sigma_lam * sigma_mu`, or `None` for a zero
/// expansion.
pub fn d_max(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<Option<u32>, QuantumError> {
    let product = quantum_product_basis(lam, mu, ctx)?;
    Ok(product.terms.keys().map(|&(d, _)| d).max())
}

/// Every power of `q` occurring in `sigma_lam * sigma_mu`, ascending.
pub fn occurring_degrees(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<BTreeSet<u32>, QuantumError> {
    Ok(quantum_product_basis(lam, mu, ctx)?.degrees())
}

/// Checks the quantum Giambelli identity for one shape: the determinant of
/// hook classes indexed by the Frobenius coordinates of `lam`, expanded as a
/// permutation sum in the quantum ring, must equal `sigma_lam` on the nose —
/// the `q`-terms of the individual hook products all cancel.
pub fn quantum_giambelli_check(lam: &Partition, ctx: Grassmannian) -> Result<bool, QuantumError> {
    check_in_box(lam, ctx)?;
    let frob = lam.to_frobenius();
    let t = frob.rank();
    let mut acc = QuantumExpansion::zero(ctx);
    for (perm, sign) in signed_permutations(t) {
        let mut product = QuantumExpansion::unit(ctx);
        for (i, &j) in perm.iter().enumerate() {
            let hook = crate::partition::hook_partition(frob.arms()[i], frob.legs()[j]);
            let factor = QuantumExpansion::from_term(ctx, 0, hook, BigInt::from(1))?;
            product = ring_multiply(&product, &factor)?;
        }
        if sign < 0 {
            product = product.negate();
        }
        acc = ring_add(&acc, &product)?;
    }
    let expected = QuantumExpansion::from_term(ctx, 0, lam.clone(), BigInt::from(1))?;
    Ok(acc == expected)
}

/// All permutations of `0..t` with their signs, by inversion count.
fn signed_permutations(t: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    let mut free: Vec<usize> = (0..t).collect();
    build(&mut current, &mut free, &mut out);
    fn build(current: &mut Vec<usize>, free: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i32)>) {
        if free.is_empty() {
            let mut inversions = 0;
            for a in 0..current.len() {
                for b in (a + 1)..current.len() {
                    inversions += usize::from(current[a] > current[b]);
                }
            }
            out.push((current.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for idx in 0..free.len() {
            let v = free.remove(idx);
            current.push(v);
            build(current, free, out);
            current.pop();
            free.insert(idx, v);
        }
    }
    out
}

/// Degree-zero truncations agree term-for-term with a classical expansion.
pub fn matches_classical(q: &QuantumExpansion, c: &ClassicalExpansion) -> bool {
    q.context() == c.context() && q.classical_part() == *c.terms()
}

fn check_in_box(p: &Partition, ctx: Grassmannian) -> Result<(), QuantumError> {
    if ctx.contains(p) {
        Ok(())
    } else {
        Err(PartitionError::OutsideBox {
            partition: p.clone(),
            l: ctx.l(),
            k: ctx.k(),
        }
        .into())
    }
}

fn check_contexts(x: &QuantumExpansion, y: &QuantumExpansion) -> Result<(), QuantumError> {
    if x.context == y.context {
        Ok(())
    } else {
        Err(QuantumError::ContextMismatch {
            left: x.context,
            right: y.context,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::classical_product;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(l: u32, k: u32) -> Grassmannian {
        Grassmannian::new(l, k).unwrap()
    }

    fn product(lam: &str, mu: &str, l: u32, k: u32) -> QuantumExpansion {
        quantum_product_basis(&p(lam), &p(mu), ctx(l, k)).unwrap()
    }

    fn terms_of(x: &QuantumExpansion) -> Vec<(u32, String, String)> {
        x.terms()
            .iter()
            .map(|((d, nu), c)| (*d, nu.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn multiplying_by_the_unit_changes_nothing() {
        let x = product("-", "2,1", 2, 2);
        assert_eq!(terms_of(&x), vec![(0, "2,1".into(), "1".into())]);
    }

    #[test]
    fn projective_line_product_is_q() {
        let x = product("1", "1", 1, 1);
        assert_eq!(terms_of(&x), vec![(1, "-".into(), "1".into())]);
    }

    #[test]
    fn staircase_squared_in_the_two_by_two_box() {
        let x = product("2,1", "2,1", 2, 2);
        assert_eq!(
            terms_of(&x),
            vec![(1, "1,1".into(), "1".into()), (1, "2".into(), "1".into())]
        );
    }

    #[test]
    fn full_box_squared_is_a_pure_power_of_q() {
        let x = product("2,2", "2,2", 2, 2);
        assert_eq!(terms_of(&x), vec![(2, "-".into(), "1".into())]);
    }

    #[test]
    fn mixed_product_keeps_classical_and_quantum_parts() {
        let x = product("2,1", "1", 2, 2);
        assert_eq!(
            terms_of(&x),
            vec![(0, "2,2".into(), "1".into()), (1, "-".into(), "1".into())]
        );
    }

    #[test]
    fn rectangle_times_rectangle_is_a_clean_q_power() {
        // sigma_{(d^l)} * sigma_{(k^d)} = q^d, for every square side d
        for l in 1..=4u32 {
            for k in 1..=4u32 {
                let g = ctx(l, k);
                for d in 1..=l.min(k) {
                    let lam = Partition::rectangle(l, d);
                    let mu = Partition::rectangle(d, k);
                    let x = quantum_product_basis(&lam, &mu, g).unwrap();
                    let expected =
                        QuantumExpansion::from_term(g, d, Partition::empty(), BigInt::from(1))
                            .unwrap();
                    assert_eq!(x, expected, "{lam} * {mu} in {g}");
                }
            }
        }
    }

    #[test]
    fn rejects_shapes_outside_the_box() {
        assert!(quantum_product_basis(&p("3"), &p("1"), ctx(2, 2)).is_err());
        assert!(QuantumExpansion::from_term(ctx(1, 1), 0, p("2"), BigInt::from(1)).is_err());
    }

    #[test]
    fn addition_cancels_and_merges() {
        let g = ctx(2, 2);
        let x = QuantumExpansion::from_term(g, 0, p("1"), BigInt::from(1)).unwrap();
        let y = QuantumExpansion::from_term(g, 0, p("1"), BigInt::from(2)).unwrap();
        assert_eq!(
            terms_of(&ring_add(&x, &y).unwrap()),
            vec![(0, "1".into(), "3".into())]
        );
        assert!(ring_add(&x, &x.negate()).unwrap().is_zero());
        let zero = QuantumExpansion::zero(g);
        assert_eq!(ring_add(&x, &zero).unwrap(), x);
    }

    #[test]
    fn multiplication_adds_q_degrees() {
        let g = ctx(2, 2);
        let q1 = QuantumExpansion::from_term(g, 1, Partition::empty(), BigInt::from(1)).unwrap();
        let q2 = ring_multiply(&q1, &q1).unwrap();
        assert_eq!(terms_of(&q2), vec![(2, "-".into(), "1".into())]);

        let unit = QuantumExpansion::unit(g);
        let x = product("2,1", "1", 2, 2);
        assert_eq!(ring_multiply(&unit, &x).unwrap(), x);
    }

    #[test]
    fn cube_of_the_point_class_on_the_projective_line() {
        let g = ctx(1, 1);
        let s = QuantumExpansion::from_term(g, 0, p("1"), BigInt::from(1)).unwrap();
        let square = ring_multiply(&s, &s).unwrap();
        let cube = ring_multiply(&square, &s).unwrap();
        assert_eq!(terms_of(&cube), vec![(1, "1".into(), "1".into())]);
    }

    #[test]
    fn mixing_boxes_is_an_error() {
        let x = QuantumExpansion::unit(ctx(1, 1));
        let y = QuantumExpansion::unit(ctx(2, 2));
        assert!(matches!(
            ring_add(&x, &y),
            Err(QuantumError::ContextMismatch { .. })
        ));
        assert!(ring_multiply(&x, &y).is_err());
    }

    #[test]
    fn gromov_witten_examples() {
        let g = ctx(1, 1);
        assert_eq!(
            gw_invariant(&p("1"), &p("1"), &p("1"), 1, g).unwrap(),
            BigInt::from(1)
        );
        // unit coefficient: <empty, mu, complement(mu)>_0 = 1
        let h = ctx(2, 3);
        for mu in h.partitions() {
            let dual = h.complement(&mu).unwrap();
            assert_eq!(
                gw_invariant(&Partition::empty(), &mu, &dual, 0, h).unwrap(),
                BigInt::from(1),
                "mu = {mu}"
            );
        }
        // grading mismatch: |lam|+|mu|+|nu| != lk + dn reads an absent term
        assert_eq!(
            gw_invariant(&p("1"), &p("1"), &p("1"), 0, g).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn degree_extremes_and_degree_sets() {
        let g = ctx(2, 2);
        assert_eq!(d_min(&Partition::empty(), &p("2,1"), g).unwrap(), Some(0));
        assert_eq!(d_max(&Partition::empty(), &p("2,1"), g).unwrap(), Some(0));
        assert_eq!(d_min(&p("2,1"), &p("2,1"), g).unwrap(), Some(1));
        assert_eq!(d_max(&p("2,1"), &p("2,1"), g).unwrap(), Some(1));
        assert_eq!(d_min(&p("1"), &p("1"), ctx(1, 1)).unwrap(), Some(1));
        assert_eq!(
            occurring_degrees(&p("2,2"), &p("2,2"), g)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![2]
        );
        // squared top class reaches degree min(l, k)
        for l in 1..=3u32 {
            for k in 1..=3u32 {
                let g = ctx(l, k);
                let top = g.box_partition();
                assert_eq!(d_min(&top, &top, g).unwrap(), Some(l.min(k)), "box {g}");
            }
        }
    }

    #[test]
    fn degree_zero_part_is_the_classical_product() {
        for (l, k) in [(1, 3), (2, 2), (2, 3)] {
            let g = ctx(l, k);
            let shapes: Vec<Partition> = g.partitions().collect();
            for lam in &shapes {
                for mu in &shapes {
                    let quantum = quantum_product_basis(lam, mu, g).unwrap();
                    let classical = classical_product(lam, mu, g).unwrap();
                    assert!(
                        matches_classical(&quantum, &classical),
                        "({lam}, {mu}) in {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_is_commutative_and_graded_on_small_boxes() {
        for (l, k) in [(1, 3), (2, 2), (2, 3)] {
            let g = ctx(l, k);
            let shapes: Vec<Partition> = g.partitions().collect();
            for lam in &shapes {
                for mu in &shapes {
                    let x = quantum_product_basis(lam, mu, g).unwrap();
                    assert_eq!(x, quantum_product_basis(mu, lam, g).unwrap());
                    for (d, nu) in x.terms().keys() {
                        assert_eq!(
                            nu.size() + *d as u64 * g.n() as u64,
                            lam.size() + mu.size(),
                            "({lam}, {mu}) -> ({d}, {nu}) in {g}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn giambelli_determinant_recovers_single_shapes() {
        let g = ctx(2, 2);
        assert!(quantum_giambelli_check(&p("2,1"), g).unwrap());
        // the 2x2 case needs genuine cancellation between q-terms
        assert!(quantum_giambelli_check(&p("2,2"), g).unwrap());
        assert!(quantum_giambelli_check(&Partition::empty(), g).unwrap());
        assert!(quantum_giambelli_check(&p("1"), g).unwrap());
    }

    #[test]
    fn expansions_serialize_with_string_coefficients() {
        let x = product("2,1", "1", 2, 2);
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "context": {"l": 2, "k": 2},
                "terms": [
                    {"d": 0, "nu": [2, 2], "coeff": "1"},
                    {"d": 1, "nu": [], "coeff": "1"},
                ]
            })
        );
    }

    #[test]
    fn display_reads_like_a_polynomial() {
        assert_eq!(
            product("2,1", "1", 2, 2).to_string(),
            "sigma[2,2] + q*sigma[-]"
        );
        assert_eq!(QuantumExpansion::zero(ctx(1, 1)).to_string(), "0");
        assert_eq!(product("2,2", "2,2", 2, 2).to_string(), "q^2*sigma[-]");
    }
}
