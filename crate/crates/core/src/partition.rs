//! Partitions, compositions, skew shapes and semistandard tableaux.
//!
//! Partitions never carry trailing zeros. Cells are `(row, column)` pairs,
//! 1-based, English convention.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{0:?} is not a partition (parts must be positive and weakly decreasing)")]
    NotAPartition(Vec<usize>),
    #[error("{0:?} is not a composition (parts must be positive)")]
    NotAComposition(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    ShapeError { outer: Partition, inner: Partition },
}

/// Weakly decreasing sequence of positive integers.
///
/// Ordered first by size, then reverse-lexicographically, so that
/// `partitions_of(r)` is sorted and a `BTreeMap` keyed by partitions iterates
/// degree by degree starting from `(r)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(r)`; the empty partition when `r == 0`.
    pub fn row(r: usize) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Self(vec![r])
        }
    }

    /// `(1^r)`.
    pub fn column(r: usize) -> Self {
        Self(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=cols)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `i -> m_i(λ)` for every part size present.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `m_i(λ)` for a single `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of a permutation of
    /// cycle type λ.
    pub fn zed(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| {
                acc * num_traits::pow(BigInt::from(i), m) * factorial(m)
            })
    }

    pub fn cycle_stats(&self) -> CycleStats {
        CycleStats {
            size: self.size(),
            length: self.len(),
            multiplicities: self.multiplicities(),
            zed: self.zed(),
        }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Membership in the `(m, n)`-hook: `λ_j <= n` for all `j > m`.
    pub fn fits_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// All partitions contained in `self`, sorted.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=bound.min(outer[i]) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Union of parts, `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Dominance order `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Partition statistics used by power-sum bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStats {
    pub size: usize,
    pub length: usize,
    pub multiplicities: BTreeMap<usize, usize>,
    pub zed: BigInt,
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.iter().all(|&p| p > 0) {
            Ok(Self(parts))
        } else {
            Err(PartitionError::NotAComposition(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Self(p.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All compositions of `r`, in lexicographic order.
pub fn compositions_of(r: usize) -> Vec<Composition> {
    fn go(r: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if r == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=r {
            cur.push(p);
            go(r - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `r` in reverse-lexicographic order, starting with `(r)`.
pub fn partitions_of(r: usize) -> Vec<Partition> {
    fn go(rest: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=bound.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// `H(m, n; r)`: partitions of `r` fitting in the `(m, n)`-hook.
pub fn hook_set(m: usize, n: usize, r: usize) -> Vec<Partition> {
    partitions_of(r)
        .into_iter()
        .filter(|p| p.fits_hook(m, n))
        .collect()
}

/// Skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if outer.contains(&inner) {
            Ok(Self { outer, inner })
        } else {
            Err(PartitionError::ShapeError { outer, inner })
        }
    }

    pub fn straight(shape: Partition) -> Self {
        Self {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the skew diagram in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.outer
            .cells()
            .filter(|&(i, j)| j > self.inner.part(i))
            .collect()
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && j <= self.outer.part(i) && j > self.inner.part(i)
    }

    /// No two cells in the same column.
    pub fn is_horizontal_strip(&self) -> bool {
        (2..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }
}

/// A semistandard filling of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    entries: Vec<((usize, usize), usize)>,
}

impl Filling {
    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> &[((usize, usize), usize)] {
        &self.entries
    }

    pub fn entry(&self, cell: (usize, usize)) -> Option<usize> {
        self.entries.iter().find(|(c, _)| *c == cell).map(|&(_, v)| v)
    }

    /// Number of occurrences of each value `1..=max_entry`.
    pub fn content(&self, max_entry: usize) -> Vec<usize> {
        let mut out = vec![0; max_entry];
        for &(_, v) in &self.entries {
            out[v - 1] += 1;
        }
        out
    }

    /// The chain `inner = λ^0 ⊆ λ^1 ⊆ … ⊆ λ^N = outer` where `λ^i` adds the
    /// cells with entries `<= i`. Returns `None` if some step is not a
    /// partition or not a horizontal strip.
    pub fn strip_chain(&self, shape: &SkewShape, max_entry: usize) -> Option<Vec<Partition>> {
        let rows = shape.outer.len();
        let mut lengths: Vec<usize> = (1..=rows).map(|i| shape.inner.part(i)).collect();
        let mut chain = vec![shape.inner.clone()];
        for v in 1..=max_entry {
            for &((i, _), e) in &self.entries {
                if e == v {
                    lengths[i - 1] += 1;
                }
            }
            let next = Partition::new(lengths.iter().copied().filter(|&p| p > 0).collect()).ok()?;
            if lengths.iter().skip_while(|&&p| p > 0).any(|&p| p > 0) {
                return None;
            }
            let step = SkewShape::new(next.clone(), chain.last().unwrap().clone()).ok()?;
            if !step.is_horizontal_strip() {
                return None;
            }
            chain.push(next);
        }
        Some(chain)
    }
}

/// Semistandard fillings of `shape` with entries in `1..=max_entry`: weakly
/// increasing along rows, strictly increasing down columns. Ordered
/// lexicographically by the row-major entry sequence.
pub fn ssyt_enumerate(shape: &SkewShape, max_entry: usize) -> Vec<Filling> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut values = vec![0usize; cells.len()];
    let index: BTreeMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        index: &BTreeMap<(usize, usize), usize>,
        values: &mut Vec<usize>,
        max_entry: usize,
        out: &mut Vec<Filling>,
    ) {
        if k == cells.len() {
            out.push(Filling {
                entries: cells.iter().copied().zip(values.iter().copied()).collect(),
            });
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if let Some(&left) = index.get(&(i, j.wrapping_sub(1))) {
            lo = lo.max(values[left]);
        }
        if let Some(&up) = index.get(&(i.wrapping_sub(1), j)) {
            lo = lo.max(values[up] + 1);
        }
        for v in lo..=max_entry {
            values[k] = v;
            go(k + 1, cells, index, values, max_entry, out);
        }
    }

    go(0, &cells, &index, &mut values, max_entry, &mut out);
    out
}

/// Outer shapes `ν ⊇ inner` such that `ν / inner` is a horizontal strip of
/// size `k`.
pub fn horizontal_strips(inner: &Partition, k: usize) -> Vec<Partition> {
    let rows = inner.len() + 1;
    let mut out = Vec::new();
    let mut adds = vec![0usize; rows];

    fn go(
        i: usize,
        left: usize,
        inner: &Partition,
        adds: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == adds.len() {
            if left == 0 {
                let parts = (0..adds.len())
                    .map(|r| inner.part(r + 1) + adds[r])
                    .filter(|&p| p > 0)
                    .collect();
                out.push(Partition(parts));
            }
            return;
        }
        // row i+1 may grow up to the old length of row i (row 1 unbounded)
        let cap = if i == 0 {
            left
        } else {
            (inner.part(i) - inner.part(i + 1)).min(left)
        };
        for a in 0..=cap {
            adds[i] = a;
            go(i + 1, left - a, inner, adds, out);
        }
        adds[i] = 0;
    }

    go(0, k, inner, &mut adds, &mut out);
    out.sort();
    out
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content
/// `μ` (any composition with the same total).
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    fn go(cur: &Partition, content: &[usize], target: &Partition) -> u64 {
        match content.split_first() {
            None => u64::from(cur == target),
            Some((&k, rest)) => horizontal_strips(cur, k)
                .into_iter()
                .filter(|nu| target.contains(nu))
                .map(|nu| go(&nu, rest, target))
                .sum(),
        }
    }
    if content.iter().sum::<usize>() != shape.size() {
        return 0;
    }
    go(&Partition::empty(), content, shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn zeds() {
        assert_eq!(p(&[2, 1]).zed(), BigInt::from(2));
        assert_eq!(p(&[3]).zed(), BigInt::from(3));
        assert_eq!(p(&[1, 1]).zed(), BigInt::from(2));
        let stats = p(&[2, 2, 1]).cycle_stats();
        assert_eq!(stats.size, 5);
        assert_eq!(stats.length, 3);
        assert_eq!(stats.multiplicities, BTreeMap::from([(1, 1), (2, 2)]));
        assert_eq!(stats.zed, BigInt::from(8));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let mut sorted = partitions_of(7);
        sorted.sort();
        assert_eq!(sorted, partitions_of(7));
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn hooks() {
        assert_eq!(
            hook_set(1, 1, 4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(hook_set(3, 3, 5), partitions_of(5));
        assert_eq!(hook_set(1, 0, 2), vec![p(&[2])]);
    }

    #[test]
    fn tableaux() {
        let shape = SkewShape::new(p(&[3]), p(&[1])).unwrap();
        let fills = ssyt_enumerate(&shape, 2);
        let words: Vec<Vec<usize>> = fills
            .iter()
            .map(|f| f.entries().iter().map(|&(_, v)| v).collect())
            .collect();
        assert_eq!(words, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert!(ssyt_enumerate(&SkewShape::straight(p(&[1, 1])), 1).is_empty());
        let empty = SkewShape::new(p(&[3]), p(&[3])).unwrap();
        assert_eq!(ssyt_enumerate(&empty, 4).len(), 1);
        assert_eq!(ssyt_enumerate(&SkewShape::straight(p(&[2, 1])), 3).len(), 8);
    }

    #[test]
    fn skew_shape_rejects_non_containment() {
        assert!(matches!(
            SkewShape::new(p(&[2]), p(&[1, 1])),
            Err(PartitionError::ShapeError { .. })
        ));
    }

    #[test]
    fn strip_chains_follow_entries() {
        let shape = SkewShape::straight(p(&[2, 1]));
        for fill in ssyt_enumerate(&shape, 3) {
            let chain = fill.strip_chain(&shape, 3).unwrap();
            assert_eq!(chain.len(), 4);
            assert_eq!(chain.last().unwrap(), &p(&[2, 1]));
        }
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[3, 2]), &[2, 2, 1]), 2);
        assert_eq!(kostka(&p(&[2, 2]), &[3, 1]), 0);
        assert_eq!(kostka(&p(&[3]), &[1, 2]), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
