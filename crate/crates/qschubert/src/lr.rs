//! Littlewood–Richardson coefficients by direct tableau counting, classical
//! Schubert products in the cohomology of a Grassmannian, nonvanishing
//! tests, and the minimal-containing-shape operator `kappa`.
//!
//! The coefficient `c_{lam,mu}^{rho}` counts semistandard fillings of the
//! skew shape `rho/lam` with content `mu` whose reverse reading word (rows
//! read right to left, top to bottom) is a lattice word. Cells are filled
//! exactly in reverse reading order, so every constraint — row weakness,
//! column strictness, content, ballot — looks only at already-placed cells.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::{partitions_with_size, Grassmannian, Partition, PartitionError, Rectangle};

/// The Littlewood–Richardson coefficient `c_{lam,mu}^{rho}`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, rho: &Partition) -> BigInt {
    match Filling::new(lam, mu, rho) {
        Some(mut f) => {
            f.run(false);
            f.count
        }
        None => BigInt::zero(),
    }
}

/// Whether `c_{lam,mu}^{rho} > 0`, stopping at the first witness tableau.
pub fn lr_nonzero(lam: &Partition, mu: &Partition, rho: &Partition) -> bool {
    match Filling::new(lam, mu, rho) {
        Some(mut f) => {
            f.run(true);
            !f.count.is_zero()
        }
        None => false,
    }
}

/// Backtracking state for one skew-shape enumeration.
struct Filling<'a> {
    mu: &'a [u32],
    lam: &'a Partition,
    rho: &'a [u32],
    /// skew cells in reverse reading order: (row, col), 1-based col
    cells: Vec<(usize, u32)>,
    /// grid[i][j-1] = value placed at (i, j), 0 when unfilled or not skew
    grid: Vec<Vec<u8>>,
    used: Vec<u32>, // used[v-1] = how many v's placed so far
    count: BigInt,
    stop_early: bool,
}

impl<'a> Filling<'a> {
    /// None when the coefficient is structurally zero.
    fn new(lam: &'a Partition, mu: &'a Partition, rho: &'a Partition) -> Option<Filling<'a>> {
        assert!(
            mu.len() <= u8::MAX as usize,
            "entry values are stored as u8"
        );
        if rho.size() != lam.size() + mu.size()
            || !rho.contains(lam)
            || !rho.contains(mu)
            || rho.len() > lam.len() + mu.len()
        {
            return None;
        }
        let mut cells = Vec::with_capacity(mu.size() as usize);
        for (i, &end) in rho.parts().iter().enumerate() {
            let start = lam.part(i);
            for j in ((start + 1)..=end).rev() {
                cells.push((i, j));
            }
        }
        let grid = rho.parts().iter().map(|&r| vec![0u8; r as usize]).collect();
        Some(Filling {
            mu: mu.parts(),
            lam,
            rho: rho.parts(),
            cells,
            grid,
            used: vec![0; mu.len()],
            count: BigInt::zero(),
            stop_early: false,
        })
    }

    fn run(&mut self, stop_early: bool) {
        self.stop_early = stop_early;
        self.fill(0);
    }

    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.count += 1u32;
            return;
        }
        let (i, j) = self.cells[idx];
        // Right neighbor (same row) and upper neighbor (previous row) are
        // already placed in this fill order; 0 means "no constraint".
        let right = if j < self.rho[i] {
            self.grid[i][j as usize]
        } else {
            0
        };
        let above = if i > 0 && j > self.lam.part(i - 1) {
            self.grid[i - 1][j as usize - 1]
        } else {
            0
        };
        let lo = above + 1;
        let hi = if right > 0 {
            right
        } else {
            self.mu.len() as u8
        };
        for v in lo..=hi {
            let vi = v as usize - 1;
            if self.used[vi] == self.mu[vi] {
                continue; // content exhausted
            }
            if v > 1 && self.used[vi - 1] <= self.used[vi] {
                continue; // lattice word would break
            }
            self.grid[i][j as usize - 1] = v;
            self.used[vi] += 1;
            self.fill(idx + 1);
            self.used[vi] -= 1;
            self.grid[i][j as usize - 1] = 0;
            if self.stop_early && !self.count.is_zero() {
                return;
            }
        }
    }
}

/// A product of two Schubert classes in ordinary cohomology: positive
/// coefficients on box partitions of the right total size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalExpansion {
    context: Grassmannian,
    terms: BTreeMap<Partition, BigInt>,
}

impl ClassicalExpansion {
    pub fn context(&self) -> Grassmannian {
        self.context
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, nu: &Partition) -> BigInt {
        self.terms.get(nu).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Expands `sigma_lam . sigma_mu` over Schubert classes of the box.
pub fn classical_product(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<ClassicalExpansion, PartitionError> {
    check_in_box(lam, ctx)?;
    check_in_box(mu, ctx)?;
    let total = lam.size() + mu.size();
    let mut terms = BTreeMap::new();
    for nu in partitions_with_size(total, ctx.k(), ctx.l() as usize) {
        let c = lr_coefficient(lam, mu, &nu);
        if !c.is_zero() {
            terms.insert(nu, c);
        }
    }
    Ok(ClassicalExpansion {
        context: ctx,
        terms,
    })
}

/// Nonvanishing of the classical product, decided by the rotated-overlap
/// criterion: `sigma_lam . sigma_mu != 0` iff `lam` and the 180-degree
/// rotation of `mu` occupy disjoint cells of the box.
pub fn product_nonzero(
    lam: &Partition,
    mu: &Partition,
    ctx: Grassmannian,
) -> Result<bool, PartitionError> {
    Ok(ctx.overlap_with_rotation(lam, mu)?.is_empty())
}

/// The componentwise intersection of every box shape `gamma` with
/// `c_{alpha,beta}^{gamma} != 0`; the full rectangle, by convention, when the
/// product vanishes in the box.
pub fn kappa(
    alpha: &Partition,
    beta: &Partition,
    ctx: Grassmannian,
) -> Result<Partition, PartitionError> {
    check_in_box(alpha, ctx)?;
    check_in_box(beta, ctx)?;
    let total = alpha.size() + beta.size();
    let mut acc: Option<Partition> = None;
    for gamma in partitions_with_size(total, ctx.k(), ctx.l() as usize) {
        if !gamma.contains(alpha) || !gamma.contains(beta) {
            continue;
        }
        if !lr_nonzero(alpha, beta, &gamma) {
            continue;
        }
        acc = Some(match acc {
            None => gamma,
            Some(prev) => prev.intersect(&gamma),
        });
        if acc.as_ref().is_some_and(Partition::is_empty) {
            break; // cannot shrink further
        }
    }
    Ok(acc.unwrap_or_else(|| ctx.box_partition()))
}

/// Closed form of `kappa` on a pair of rectangles: the union of the two
/// rectangles with `(m+n) x (M+N-k)` and `(m+n-l) x (M+N)`, where any
/// rectangle with a nonpositive dimension, or sticking out of the box, is
/// dropped. Falls back to the full-rectangle convention when the product
/// vanishes.
pub fn kappa_rectangles_closed_form(
    first: Rectangle,
    second: Rectangle,
    ctx: Grassmannian,
) -> Result<Partition, PartitionError> {
    check_in_box(&first.partition(), ctx)?;
    check_in_box(&second.partition(), ctx)?;
    if !product_nonzero(&first.partition(), &second.partition(), ctx)? {
        return Ok(ctx.box_partition());
    }
    let (l, k) = (ctx.l() as i64, ctx.k() as i64);
    let (m, mm) = (first.rows as i64, first.cols as i64);
    let (n, nn) = (second.rows as i64, second.cols as i64);
    let candidates = [(m, mm), (n, nn), (m + n, mm + nn - k), (m + n - l, mm + nn)];
    let mut acc = Partition::empty();
    for (rows, cols) in candidates {
        if rows < 1 || cols < 1 || rows > l || cols > k {
            continue;
        }
        acc = acc.union(&Partition::rectangle(rows as u32, cols as u32));
    }
    Ok(acc)
}

/// Whether `sigma_lam . sigma_mu . sigma_nu != 0` in ordinary cohomology,
/// by searching for a box shape `rho` in the product of the first two that
/// survives multiplication by the third. Stops at the first witness.
pub fn triple_product_nonzero_bruteforce(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: Grassmannian,
) -> Result<bool, PartitionError> {
    check_in_box(lam, ctx)?;
    check_in_box(mu, ctx)?;
    check_in_box(nu, ctx)?;
    let total = lam.size() + mu.size();
    for rho in partitions_with_size(total, ctx.k(), ctx.l() as usize) {
        if !rho.contains(lam) || !rho.contains(mu) {
            continue;
        }
        if product_nonzero(&rho, nu, ctx)? && lr_nonzero(lam, mu, &rho) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_in_box(p: &Partition, ctx: Grassmannian) -> Result<(), PartitionError> {
    if ctx.contains(p) {
        Ok(())
    } else {
        Err(PartitionError::OutsideBox {
            partition: p.clone(),
            l: ctx.l(),
            k: ctx.k(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(l: u32, k: u32) -> Grassmannian {
        Grassmannian::new(l, k).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Blunt oracle: try every assignment of values to the skew cells and
    /// keep the ones that are semistandard with the right content and a
    /// ballot reverse reading word. Exponential, but independent of the
    /// pruned search above.
    fn lr_bruteforce(lam: &Partition, mu: &Partition, rho: &Partition) -> u64 {
        if rho.size() != lam.size() + mu.size() || !rho.contains(lam) {
            return 0;
        }
        let m = mu.len() as u8;
        let mut cells = Vec::new();
        for (i, &end) in rho.parts().iter().enumerate() {
            for j in (lam.part(i) + 1)..=end {
                cells.push((i, j));
            }
        }
        if m == 0 {
            return cells.is_empty() as u64;
        }
        let mut assignment = vec![1u8; cells.len()];
        let mut found = 0;
        'outer: loop {
            if is_lr_filling(lam, mu, rho, &cells, &assignment) {
                found += 1;
            }
            for slot in assignment.iter_mut() {
                if *slot < m {
                    *slot += 1;
                    continue 'outer;
                }
                *slot = 1;
            }
            return found;
        }
    }

    fn is_lr_filling(
        lam: &Partition,
        mu: &Partition,
        rho: &Partition,
        cells: &[(usize, u32)],
        values: &[u8],
    ) -> bool {
        let at = |i: usize, j: u32| -> Option<u8> {
            cells
                .iter()
                .position(|&c| c == (i, j))
                .map(|idx| values[idx])
        };
        let mut content = vec![0u32; mu.len()];
        for (&(i, j), &v) in cells.iter().zip(values) {
            content[v as usize - 1] += 1;
            if j < rho.part(i) {
                if let Some(r) = at(i, j + 1) {
                    if v > r {
                        return false;
                    }
                }
            }
            if i > 0 && j > lam.part(i - 1) {
                match at(i - 1, j) {
                    Some(a) if a >= v => return false,
                    _ => {}
                }
            }
        }
        if content != mu.parts() {
            return false;
        }
        // reverse reading word: rows top to bottom, right to left
        let mut word = Vec::new();
        for i in 0..rho.len() {
            for j in ((lam.part(i) + 1)..=rho.part(i)).rev() {
                word.push(at(i, j).unwrap());
            }
        }
        let mut seen = vec![0i64; mu.len() + 1];
        for v in word {
            seen[v as usize] += 1;
            if v > 1 && seen[v as usize] > seen[v as usize - 1] {
                return false;
            }
        }
        true
    }

    #[test]
    fn pruned_search_matches_bruteforce_on_small_shapes() {
        let small: Vec<Partition> = partitions_up_to(3, 3, 3).collect();
        for lam in &small {
            for mu in &small {
                let total = lam.size() + mu.size();
                for rho in partitions_with_size(total, 6, 6) {
                    let fast = lr_coefficient(lam, mu, &rho);
                    let slow = lr_bruteforce(lam, mu, &rho);
                    assert_eq!(fast, BigInt::from(slow), "({lam}, {mu}, {rho})");
                }
            }
        }
    }

    #[test]
    fn staircase_coefficient_is_two() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), big(2));
    }

    #[test]
    fn trivial_and_pieri_cases() {
        assert_eq!(
            lr_coefficient(&Partition::empty(), &p("2,1"), &p("2,1")),
            big(1)
        );
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), big(1));
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), big(1));
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("3")), big(0));
    }

    #[test]
    fn adding_one_box_has_unit_coefficient_exactly_when_skew_is_one_cell() {
        for lam in partitions_up_to(6, 4, 4) {
            for rho in partitions_with_size(lam.size() + 1, 5, 5) {
                let c = lr_coefficient(&lam, &p("1"), &rho);
                let expected = u64::from(rho.contains(&lam));
                assert_eq!(c, BigInt::from(expected), "({lam}, (1), {rho})");
            }
        }
    }

    #[test]
    fn coefficient_is_symmetric_in_the_factors() {
        // exhaustive over |lam| + |mu| <= 12
        for s in 0..=12u64 {
            for a in 0..=s {
                for lam in partitions_with_size(a, a.max(1) as u32, a.max(1) as usize) {
                    for mu in partitions_with_size(s - a, s as u32 + 1, s as usize + 1) {
                        for rho in partitions_with_size(s, s as u32 + 1, s as usize + 1) {
                            let ab = lr_coefficient(&lam, &mu, &rho);
                            let ba = lr_coefficient(&mu, &lam, &rho);
                            assert_eq!(ab, ba, "({lam}, {mu}, {rho})");
                        }
                    }
                }
            }
        }
    }

    /// Number of standard Young tableaux, by the hook length formula.
    fn syt_count(shape: &Partition) -> BigInt {
        let mut numerator = BigInt::one();
        for v in 1..=shape.size() {
            numerator *= v;
        }
        let conj = shape.conjugate();
        let mut denominator = BigInt::one();
        for (i, &row) in shape.parts().iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj.part(j as usize - 1) - (i as u32 + 1);
                denominator *= arm as u64 + leg as u64 + 1;
            }
        }
        numerator / denominator
    }

    fn binomial_big(n: u64, k: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..k.min(n - k) {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn coefficients_are_consistent_with_tableau_dimensions() {
        // sum over rho of c * f^rho = C(|lam|+|mu|, |lam|) f^lam f^mu
        for lam in partitions_up_to(4, 4, 4) {
            for mu in partitions_up_to(4, 4, 4) {
                let s = lam.size() + mu.size();
                let mut lhs = BigInt::zero();
                for rho in partitions_with_size(s, s as u32 + 1, s as usize + 1) {
                    lhs += lr_coefficient(&lam, &mu, &rho) * syt_count(&rho);
                }
                let rhs = binomial_big(s, lam.size()) * syt_count(&lam) * syt_count(&mu);
                assert_eq!(lhs, rhs, "({lam}, {mu})");
            }
        }
    }

    #[test]
    fn classical_product_examples() {
        let g = ctx(2, 2);
        let unit = classical_product(&Partition::empty(), &p("2,1"), g).unwrap();
        assert_eq!(unit.terms().len(), 1);
        assert_eq!(unit.coefficient(&p("2,1")), big(1));

        let pieri = classical_product(&p("1"), &p("1"), g).unwrap();
        let shapes: Vec<String> = pieri.terms().keys().map(|q| q.to_string()).collect();
        assert_eq!(shapes, vec!["1,1", "2"]);
        assert!(pieri.terms().values().all(|c| *c == big(1)));

        let overflow = classical_product(&p("2,2"), &p("1"), g).unwrap();
        assert!(overflow.is_zero());

        assert!(classical_product(&p("3"), &p("1"), g).is_err());
    }

    #[test]
    fn product_nonzero_matches_the_expansion_on_a_three_by_three_box() {
        let g = ctx(3, 3);
        let shapes: Vec<Partition> = g.partitions().collect();
        for lam in &shapes {
            for mu in &shapes {
                let fast = product_nonzero(lam, mu, g).unwrap();
                let slow = !classical_product(lam, mu, g).unwrap().is_zero();
                assert_eq!(fast, slow, "({lam}, {mu})");
            }
        }
    }

    #[test]
    fn product_nonzero_examples() {
        let g = ctx(2, 2);
        assert!(product_nonzero(&Partition::empty(), &p("2,2"), g).unwrap());
        assert!(!product_nonzero(&p("2,1"), &p("2,1"), g).unwrap());
        assert!(product_nonzero(&p("1"), &p("1"), g).unwrap());
    }

    #[test]
    fn kappa_examples() {
        let g = ctx(2, 2);
        assert_eq!(kappa(&Partition::empty(), &p("2,1"), g).unwrap(), p("2,1"));
        assert_eq!(kappa(&p("1"), &p("1"), g).unwrap(), p("1"));
        // zero product: convention gives the whole box
        assert_eq!(kappa(&p("2,2"), &p("2,2"), g).unwrap(), p("2,2"));
    }

    #[test]
    fn kappa_grows_with_its_arguments() {
        for g in [ctx(2, 2), ctx(2, 3)] {
            let shapes: Vec<Partition> = g.partitions().collect();
            for alpha in &shapes {
                for lam in shapes.iter().filter(|q| q.contains(alpha)) {
                    for beta in &shapes {
                        for mu in shapes.iter().filter(|q| q.contains(beta)) {
                            let small = kappa(alpha, beta, g).unwrap();
                            let large = kappa(lam, mu, g).unwrap();
                            assert!(
                                large.contains(&small),
                                "kappa({alpha},{beta}) = {small} not inside kappa({lam},{mu}) = {large} in {g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rectangle_closed_form_examples() {
        let g = ctx(2, 2);
        let r = |rows, cols| Rectangle::new(rows, cols);
        assert_eq!(
            kappa_rectangles_closed_form(r(1, 1), r(1, 1), g).unwrap(),
            p("1")
        );
        assert_eq!(
            kappa_rectangles_closed_form(r(0, 0), r(2, 1), g).unwrap(),
            p("1,1")
        );
        // zero product: full box
        assert_eq!(
            kappa_rectangles_closed_form(r(2, 2), r(1, 1), g).unwrap(),
            p("2,2")
        );
        assert_eq!(
            kappa_rectangles_closed_form(r(1, 2), r(1, 2), g).unwrap(),
            p("2,2")
        );
    }

    #[test]
    fn rectangle_closed_form_matches_bruteforce_kappa_up_to_three() {
        for l in 1..=3u32 {
            for k in 1..=3u32 {
                let g = ctx(l, k);
                for m in 0..=l {
                    for mm in 0..=k {
                        for n in 0..=l {
                            for nn in 0..=k {
                                let a = Rectangle::new(m, mm);
                                let b = Rectangle::new(n, nn);
                                let closed = kappa_rectangles_closed_form(a, b, g).unwrap();
                                let brute = kappa(&a.partition(), &b.partition(), g).unwrap();
                                assert_eq!(closed, brute, "{a} {b} in {g}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triple_product_examples() {
        let e = Partition::empty();
        assert!(triple_product_nonzero_bruteforce(&e, &e, &e, ctx(1, 1)).unwrap());
        assert!(!triple_product_nonzero_bruteforce(&p("1"), &p("1"), &p("1"), ctx(1, 1)).unwrap());
        assert!(triple_product_nonzero_bruteforce(&p("1"), &p("1"), &p("1"), ctx(2, 2)).unwrap());
    }
}
