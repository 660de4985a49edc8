//! Points of `K^n x K^n`, double indices, and the diagonal permutation action.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Double index `(j, k)` naming the invariant `f_{j,k} = sum_i x_i^j y_i^k`.
/// `(0,0)` is excluded, so every invariant has positive total degree.
///
/// The derived `Ord` is lexicographic on `(j, k)`, which is the canonical
/// ordering used everywhere (index sets, fingerprints, reports).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiIndex {
    pub j: u32,
    pub k: u32,
}

impl BiIndex {
    pub fn new(j: u32, k: u32) -> Result<Self> {
        if j == 0 && k == 0 {
            return Err(Error::ZeroBiIndex);
        }
        Ok(BiIndex { j, k })
    }
}

impl fmt::Display for BiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

/// A point of `K^n x K^n`: two coordinate vectors of equal length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointPair {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PointPair {
    pub fn new(xs: Vec<Rational>, ys: Vec<Rational>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::SizeMismatch {
                expected: xs.len(),
                actual: ys.len(),
            });
        }
        Ok(PointPair { xs, ys })
    }

    /// Builds a point from integer coordinates, mostly for tests and fixtures.
    pub fn from_ints(xs: &[i64], ys: &[i64]) -> Result<Self> {
        PointPair::new(
            xs.iter().copied().map(Rational::from_int).collect(),
            ys.iter().copied().map(Rational::from_int).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    pub fn ys(&self) -> &[Rational] {
        &self.ys
    }

    /// The coordinate pair `(x_i, y_i)`.
    pub fn pair(&self, i: usize) -> (&Rational, &Rational) {
        (&self.xs[i], &self.ys[i])
    }

    /// Restriction to the first `m` coordinate pairs.
    pub(crate) fn truncate(&self, m: usize) -> PointPair {
        PointPair {
            xs: self.xs[..m].to_vec(),
            ys: self.ys[..m].to_vec(),
        }
    }
}

/// A permutation of `{0, .., n-1}` stored as its image list.
///
/// Convention (shared by the whole crate): the action moves position `i` to
/// position `sigma(i)`, i.e. `apply_permutation(sigma, p)` has
/// `result[sigma(i)] = p[i]`. The inverse convention is obtained by applying
/// `sigma.inverse()` instead.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self . inner`: `inner` acts first, so
    /// `apply(self.compose(inner), p) = apply(self, apply(inner, p))`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), inner.n());
        Permutation {
            images: inner.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Extends a permutation of `{0,..,m-1}` to one of `{0,..,n-1}` fixing
    /// the last `n - m` positions.
    pub(crate) fn extend_fixing_tail(&self, n: usize) -> Permutation {
        debug_assert!(self.n() <= n);
        let mut images = self.images.clone();
        images.extend(self.n()..n);
        Permutation { images }
    }

    /// One-line image notation with 1-based positions, e.g. `2 1 3`.
    pub fn one_line(&self) -> String {
        self.images
            .iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Diagonal action: permutes both coordinate vectors by the same index map.
pub fn apply_permutation(sigma: &Permutation, p: &PointPair) -> Result<PointPair> {
    if sigma.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            actual: sigma.n(),
        });
    }
    let n = p.n();
    let mut xs = vec![Rational::zero(); n];
    let mut ys = vec![Rational::zero(); n];
    for i in 0..n {
        let t = sigma.image(i);
        xs[t] = p.xs[i].clone();
        ys[t] = p.ys[i].clone();
    }
    Ok(PointPair { xs, ys })
}
