//! The index sets behind the two invariant families.
//!
//! `M(n)` indexes the full minimal generating set of the bisymmetric power
//! sums: all `(j,k) != (0,0)` with `j + k <= n`. `S(n)` is the much smaller
//! separating family: `j <= n` and `k <= floor(n / (j+1))`. Both exclude only
//! the constant cell `(0,0)`; in particular the pure power sums `f_{j,0}` and
//! `f_{0,k}` are members, which is what the size formulas
//! `|M| = (n^2+3n)/2` and `|S| = n + D(n)` count.

use std::fmt;

use crate::error::{Error, Result};
use crate::point::BiIndex;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum IndexSetKind {
    FullM,
    SeparatingS,
    Custom,
}

impl fmt::Display for IndexSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSetKind::FullM => write!(f, "M"),
            IndexSetKind::SeparatingS => write!(f, "S"),
            IndexSetKind::Custom => write!(f, "custom"),
        }
    }
}

/// An ordered, duplicate-free list of double indices for a fixed `n`.
/// Members are sorted lexicographically by `(j, k)`; fingerprints and all
/// rendered output follow this order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSet {
    n: usize,
    kind: IndexSetKind,
    indices: Vec<BiIndex>,
}

impl IndexSet {
    fn from_sorted(n: usize, kind: IndexSetKind, indices: Vec<BiIndex>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexSet { n, kind, indices }
    }

    /// A custom set: sorts and deduplicates the given indices.
    pub fn custom(n: usize, mut indices: Vec<BiIndex>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN);
        }
        indices.sort();
        indices.dedup();
        Ok(IndexSet {
            n,
            kind: IndexSetKind::Custom,
            indices,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> IndexSetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[BiIndex] {
        &self.indices
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BiIndex> {
        self.indices.iter()
    }

    pub fn contains(&self, idx: BiIndex) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    /// Position of `idx` in the canonical order.
    pub fn position(&self, idx: BiIndex) -> Option<usize> {
        self.indices.binary_search(&idx).ok()
    }

    /// The set with one member removed. Errors if `idx` is not a member.
    pub fn without(&self, idx: BiIndex) -> Result<IndexSet> {
        let pos = self
            .indices
            .binary_search(&idx)
            .map_err(|_| Error::IndexNotInSet(idx))?;
        let mut indices = self.indices.clone();
        indices.remove(pos);
        Ok(IndexSet {
            n: self.n,
            kind: IndexSetKind::Custom,
            indices,
        })
    }

    pub(crate) fn max_j(&self) -> u32 {
        self.indices.iter().map(|i| i.j).max().unwrap_or(0)
    }

    pub(crate) fn max_k(&self) -> u32 {
        self.indices.iter().map(|i| i.k).max().unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a IndexSet {
    type Item = &'a BiIndex;
    type IntoIter = std::slice::Iter<'a, BiIndex>;
    fn into_iter(self) -> Self::IntoIter {
        self.indices.iter()
    }
}

/// The full generating index set `M(n)`: all `(j,k) != (0,0)` with
/// `j + k <= n`. Size `(n^2 + 3n) / 2`.
pub fn build_m(n: usize) -> Result<IndexSet> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    let mut indices = Vec::with_capacity((n * n + 3 * n) / 2);
    for j in 0..=n as u32 {
        for k in 0..=(n as u32 - j) {
            if j == 0 && k == 0 {
                continue;
            }
            indices.push(BiIndex { j, k });
        }
    }
    Ok(IndexSet::from_sorted(n, IndexSetKind::FullM, indices))
}

/// The separating index set `S(n)`: all `(j,k) != (0,0)` with `j <= n` and
/// `k <= floor(n / (j+1))`. Size `n + D(n)`, which grows as `O(n log n)`.
pub fn build_s(n: usize) -> Result<IndexSet> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    let mut indices = Vec::new();
    for j in 0..=n as u32 {
        for k in 0..=(n as u32 / (j + 1)) {
            if j == 0 && k == 0 {
                continue;
            }
            indices.push(BiIndex { j, k });
        }
    }
    Ok(IndexSet::from_sorted(n, IndexSetKind::SeparatingS, indices))
}

/// Divisor summatory function `D(n) = sum_{j=1..n} floor(n/j)`, computed by
/// the hyperbola method in `O(sqrt n)` divisions. `D(0) = 0`.
pub fn divisor_summatory(n: u64) -> u64 {
    let s = n.isqrt();
    let partial: u64 = (1..=s).map(|j| n / j).sum();
    2 * partial - s * s
}

/// Exact closed-form sizes `(|M(n)|, |S(n)|) = ((n^2+3n)/2, n + D(n))`.
pub fn size_formulas(n: u64) -> (u64, u64) {
    ((n * n + 3 * n) / 2, n + divisor_summatory(n))
}
