//! Integer partitions, the `l x k` bounding box of a Grassmannian, and the
//! small geometric operations on Young diagrams that the product rules build
//! on: complement, 180-degree-rotated overlap, Durfee squares, Frobenius
//! coordinates.
//!
//! Conventions: partitions are weakly decreasing positive parts with no
//! trailing zeros stored; cells are 1-based `(row, column)` pairs, English
//! orientation (row 1 on top).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A 1-based `(row, column)` cell of a Young diagram.
pub type Cell = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing (found {prev} before {next})")]
    NotDecreasing { prev: u32, next: u32 },
    #[error("partition {partition} does not fit in the {l}x{k} box")]
    OutsideBox {
        partition: Partition,
        l: u32,
        k: u32,
    },
    #[error("Frobenius coordinates must be strictly decreasing sequences of equal length")]
    BadFrobenius,
    #[error("a Grassmannian box needs l >= 1 and k >= 1")]
    EmptyBox,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePartitionError {
    #[error("empty partition text; write \"-\" for the empty partition")]
    Empty,
    #[error("bad part {0:?}: parts are unsigned base-10 integers, no whitespace or sign")]
    BadPart(String),
    #[error("parts must be weakly decreasing (found {prev} before {next})")]
    NotDecreasing { prev: u32, next: u32 },
}

/// An integer partition; the shape index of a Schubert class.
///
/// Stored without trailing zeros, so `Partition::empty()` is the unit shape
/// and two equal shapes are representation-identical.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects out-of-order parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One row of `cols` cells; `cols = 0` gives the empty shape.
    pub fn row(cols: u32) -> Self {
        if cols == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![cols] }
        }
    }

    /// `rows` rows of `cols` cells each.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if rows == 0 || cols == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![cols; rows as usize],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 0-based, reading 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Containment of Young diagrams: every row of `other` fits inside ours.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(&o, &s)| o <= s)
    }

    /// Componentwise maximum: the smallest shape containing both diagrams.
    pub fn union(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i).max(other.part(i))).collect();
        Partition { parts }
    }

    /// Componentwise minimum: the cells common to both diagrams.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let len = self.len().min(other.len());
        let parts = (0..len).map(|i| self.part(i).min(other.part(i))).collect();
        Partition::new(parts).expect("componentwise min of partitions is a partition")
    }

    /// Transpose of the diagram (rows become columns).
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Side of the largest square anchored at the top-left corner:
    /// the largest `d` with `p_d >= d`.
    pub fn durfee(&self) -> u32 {
        let mut d = 0;
        while self.part(d as usize) > d {
            d += 1;
        }
        d
    }

    /// Frobenius coordinates `(arms | legs)` read off the main diagonal:
    /// `arm_i = p_i - i`, `leg_i = p'_i - i` for `i` up to the Durfee side.
    pub fn to_frobenius(&self) -> Frobenius {
        let d = self.durfee() as usize;
        let conj = self.conjugate();
        let arms = (0..d).map(|i| self.parts[i] - (i as u32 + 1)).collect();
        let legs = (0..d).map(|i| conj.parts[i] - (i as u32 + 1)).collect();
        Frobenius { arms, legs }
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Text form: comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Strict parser for the text form.
///
/// # Edge cases
/// `"-"` is the empty partition. Whitespace, signs, empty chunks and zero
/// parts are all rejected; so are parts out of weakly decreasing order.
impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParsePartitionError::Empty);
        }
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for chunk in s.split(',') {
            if chunk.is_empty() || !chunk.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParsePartitionError::BadPart(chunk.to_string()));
            }
            let p: u32 = chunk
                .parse()
                .map_err(|_| ParsePartitionError::BadPart(chunk.to_string()))?;
            if p == 0 {
                return Err(ParsePartitionError::BadPart(chunk.to_string()));
            }
            parts.push(p);
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(ParsePartitionError::NotDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        Ok(Partition { parts })
    }
}

/// Frobenius coordinates of a partition: arm and leg lengths along the main
/// diagonal, each strictly decreasing, both of length equal to the Durfee side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frobenius {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl Frobenius {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self, PartitionError> {
        if arms.len() != legs.len()
            || arms.windows(2).any(|w| w[0] <= w[1])
            || legs.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(PartitionError::BadFrobenius);
        }
        Ok(Frobenius { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    /// Diagonal length.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Rebuilds the partition: row `i` gets `arm_i + i` cells, column `i`
    /// gets `leg_i + i` cells, glued along the diagonal.
    pub fn to_partition(&self) -> Partition {
        let t = self.rank();
        let mut parts: Vec<u32> = (0..t).map(|i| self.arms[i] + i as u32 + 1).collect();
        // Rows below the diagonal are determined by the column heights.
        let depth = self.legs.first().map_or(0, |&b| b + 1);
        for x in (t as u32 + 1)..=depth {
            let row = (0..t).filter(|&j| self.legs[j] + j as u32 + 1 >= x).count() as u32;
            parts.push(row);
        }
        Partition::new(parts).expect("valid Frobenius coordinates rebuild a partition")
    }
}

/// The hook shape with the given arm and leg: a single row of `arm + 1`
/// cells with `leg` extra cells hanging below the first.
pub fn hook_partition(arm: u32, leg: u32) -> Partition {
    let mut parts = vec![arm + 1];
    parts.extend(std::iter::repeat_n(1, leg as usize));
    Partition { parts }
}

/// An `rows x cols` rectangle inside a box; either dimension may be zero,
/// which denotes the empty shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rectangle {
    pub rows: u32,
    pub cols: u32,
}

impl Rectangle {
    pub fn new(rows: u32, cols: u32) -> Self {
        Rectangle { rows, cols }
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn partition(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// The ambient data of a Grassmannian of l-planes in complex (l+k)-space:
/// Schubert classes are indexed by partitions inside the `l x k` box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Grassmannian {
    l: u32,
    k: u32,
}

impl Grassmannian {
    pub fn new(l: u32, k: u32) -> Result<Self, PartitionError> {
        if l == 0 || k == 0 {
            return Err(PartitionError::EmptyBox);
        }
        Ok(Grassmannian { l, k })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Degree of the quantum parameter: `n = l + k`.
    pub fn n(&self) -> u32 {
        self.l + self.k
    }

    /// The full `l x k` rectangle, i.e. the top class.
    pub fn box_partition(&self) -> Partition {
        Partition::rectangle(self.l, self.k)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() as u32 <= self.l && p.part(0) <= self.k
    }

    fn check(&self, p: &Partition) -> Result<(), PartitionError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(PartitionError::OutsideBox {
                partition: p.clone(),
                l: self.l,
                k: self.k,
            })
        }
    }

    /// Poincare-dual shape: the 180-degree rotation of the box minus `p`,
    /// with parts `k - p_{l+1-i}`.
    pub fn complement(&self, p: &Partition) -> Result<Partition, PartitionError> {
        self.check(p)?;
        let parts = (0..self.l)
            .map(|i| self.k - p.part((self.l - 1 - i) as usize))
            .collect();
        Ok(Partition::new(parts).expect("complement parts are weakly decreasing"))
    }

    /// Cells common to `lambda` and the 180-degree rotation of `mu` placed in
    /// this box: cell `(i, j)` qualifies iff `j <= lambda_i` and
    /// `j > k - mu_{l+1-i}`. Returned in row-major order.
    pub fn overlap_with_rotation(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<Vec<Cell>, PartitionError> {
        self.check(lambda)?;
        self.check(mu)?;
        let mut cells = Vec::new();
        for i in 1..=self.l {
            let hi = lambda.part(i as usize - 1);
            let lo = self.k - mu.part((self.l - i) as usize); // exclusive
            for j in (lo + 1)..=hi {
                cells.push((i, j));
            }
        }
        Ok(cells)
    }

    /// Side of the largest axis-aligned square of contiguous cells inside
    /// `overlap_with_rotation(lambda, mu)`.
    pub fn largest_square_in_overlap(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<u32, PartitionError> {
        self.check(lambda)?;
        self.check(mu)?;
        // Row i of the overlap is the column interval (lo_i, hi_i]; a square
        // spanning rows i..j needs the intersected interval to stay wide.
        let rows: Vec<(u32, u32)> = (1..=self.l)
            .map(|i| {
                let hi = lambda.part(i as usize - 1);
                let lo = self.k - mu.part((self.l - i) as usize);
                (lo, hi)
            })
            .collect();
        let mut best = 0u32;
        for i in 0..rows.len() {
            let (mut lo, mut hi) = rows[i];
            for (h, row) in rows[i..].iter().enumerate() {
                lo = lo.max(row.0);
                hi = hi.min(row.1);
                if hi <= lo {
                    break;
                }
                let width = hi - lo;
                best = best.max(width.min(h as u32 + 1));
            }
        }
        Ok(best)
    }

    /// Iterates every partition inside the box, largest-first
    /// (descending lexicographic).
    pub fn partitions(&self) -> PartitionIter {
        partitions_up_to(self.l as u64 * self.k as u64, self.k, self.l as usize)
    }

    /// Closed-form count of partitions inside the box: `C(l+k, l)`.
    pub fn partition_count(&self) -> u64 {
        binomial((self.l + self.k) as u64, self.l as u64)
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.l, self.k)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All partitions with at most `max_len` parts, each at most `max_part`,
/// of total size at most `max_size`, in descending lexicographic order.
pub fn partitions_up_to(max_size: u64, max_part: u32, max_len: usize) -> PartitionIter {
    PartitionIter::new(max_size, max_part, max_len, None)
}

/// All partitions of exactly `size` with the same caps, descending
/// lexicographic.
pub fn partitions_with_size(size: u64, max_part: u32, max_len: usize) -> PartitionIter {
    PartitionIter::new(size, max_part, max_len, Some(size))
}

/// Depth-first enumeration emitting each shape after its extensions, which
/// yields descending lexicographic order without buffering.
pub struct PartitionIter {
    max_size: u64,
    max_len: usize,
    exact: Option<u64>,
    prefix: Vec<u32>,
    prefix_size: u64,
    /// `stack[d]` is the next candidate part value at depth `d`;
    /// always one frame longer than `prefix`.
    stack: Vec<u32>,
}

impl PartitionIter {
    fn new(max_size: u64, max_part: u32, max_len: usize, exact: Option<u64>) -> Self {
        let root = if max_len == 0 {
            0
        } else {
            (max_part as u64).min(max_size) as u32
        };
        PartitionIter {
            max_size,
            max_len,
            exact,
            prefix: Vec::new(),
            prefix_size: 0,
            stack: vec![root],
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let d = self.stack.len().checked_sub(1)?;
            let v = self.stack[d];
            if v >= 1 {
                // Descend: extend the prefix by v, then try v-1 here later.
                self.stack[d] -= 1;
                self.prefix.push(v);
                self.prefix_size += v as u64;
                let child = if self.prefix.len() >= self.max_len {
                    0
                } else {
                    (v as u64).min(self.max_size - self.prefix_size) as u32
                };
                self.stack.push(child);
            } else {
                // All extensions done: emit this prefix and backtrack.
                self.stack.pop();
                let emit = self.exact.is_none_or(|s| self.prefix_size == s);
                let out = emit.then(|| Partition {
                    parts: self.prefix.clone(),
                });
                if let Some(last) = self.prefix.pop() {
                    self.prefix_size -= last as u64;
                }
                if let Some(p) = out {
                    return Some(p);
                }
            }
        }
    }
}
