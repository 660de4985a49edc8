//! Exact S_n-orbit equivalence (the ground-truth oracle) and enumeration of
//! orbit representatives over finite grids.
//!
//! Two points lie in the same orbit iff their coordinate pairs agree as
//! multisets; everything here reduces to sorting pairs, independently of any
//! invariant evaluation, so invariant-based separation can be falsified
//! against it.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::point::{Permutation, PointPair};
use crate::rational::Rational;

/// The lexicographically sorted list of coordinate pairs of a point: equal
/// canonical points ⟺ same orbit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalPoint {
    pairs: Vec<(Rational, Rational)>,
}

impl CanonicalPoint {
    pub fn pairs(&self) -> &[(Rational, Rational)] {
        &self.pairs
    }
}

/// A finite set of allowed coordinate values (sorted, duplicate-free).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridSpec {
    values: Vec<Rational>,
}

impl GridSpec {
    pub fn new(mut values: Vec<Rational>) -> Result<Self> {
        values.sort();
        values.dedup();
        if values.is_empty() {
            return Err(Error::EmptyGrid);
        }
        Ok(GridSpec { values })
    }

    pub fn from_ints(values: &[i64]) -> Self {
        GridSpec::new(values.iter().copied().map(Rational::from_int).collect())
            .expect("non-empty integer grid")
    }

    /// The integers `-bound ..= bound`.
    pub fn symmetric_int(bound: i64) -> Self {
        GridSpec::from_ints(&(-bound..=bound).collect::<Vec<_>>())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// Comma-separated rational values, e.g. `-1,0,1/2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        for tok in s.split(',') {
            values.push(tok.trim().parse::<Rational>()?);
        }
        GridSpec::new(values)
    }
}

impl std::fmt::Display for GridSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(p: &PointPair) -> CanonicalPoint {
    let mut pairs: Vec<(Rational, Rational)> =
        p.xs().iter().cloned().zip(p.ys().iter().cloned()).collect();
    pairs.sort();
    CanonicalPoint { pairs }
}

pub fn same_orbit(p: &PointPair, q: &PointPair) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            actual: q.n(),
        });
    }
    Ok(canonical_form(p) == canonical_form(q))
}

/// If `p` and `q` share an orbit, a permutation `σ` with
/// `apply_permutation(σ, q) = p`; the choice is deterministic (positions of
/// equal pairs are matched in ascending order).
pub fn orbit_permutation(p: &PointPair, q: &PointPair) -> Result<Option<Permutation>> {
    if !same_orbit(p, q)? {
        return Ok(None);
    }
    let n = p.n();
    let ranked = |t: &PointPair| -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| t.pair(a).cmp(&t.pair(b)));
        order
    };
    let p_order = ranked(p);
    let q_order = ranked(q);
    let mut images = vec![0usize; n];
    for (u, v) in q_order.into_iter().zip(p_order) {
        images[u] = v;
    }
    Ok(Some(
        Permutation::new(images).expect("matched ranks form a bijection"),
    ))
}

/// One canonical representative per orbit of grid points: all weakly
/// increasing length-`n` sequences over the sorted `T x T` pairs, i.e.
/// multisets of `n` pairs, emitted in lexicographic order. Count is
/// `C(|T|^2 + n - 1, n)`.
pub fn enumerate_orbit_reps(n: usize, grid: &GridSpec) -> OrbitReps {
    let mut pairs = Vec::with_capacity(grid.len() * grid.len());
    for x in grid.values() {
        for y in grid.values() {
            pairs.push((x.clone(), y.clone()));
        }
    }
    let odometer = Odometer::new(pairs.len(), n);
    OrbitReps { pairs, odometer }
}

pub struct OrbitReps {
    pairs: Vec<(Rational, Rational)>,
    odometer: Odometer,
}

impl Iterator for OrbitReps {
    type Item = PointPair;

    fn next(&mut self) -> Option<PointPair> {
        let state = self.odometer.next()?;
        Some(
            PointPair::new(
                state.iter().map(|&i| self.pairs[i].0.clone()).collect(),
                state.iter().map(|&i| self.pairs[i].1.clone()).collect(),
            )
            .expect("equal-length coordinate vectors"),
        )
    }
}

/// Weakly increasing index sequences of a fixed length over `0..m`, in
/// lexicographic order: one per size-`len` multiset of `m` symbols.
pub(crate) struct Odometer {
    m: usize,
    state: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(m: usize, len: usize) -> Odometer {
        Odometer {
            m,
            state: if len == 0 || m == 0 {
                None
            } else {
                Some(vec![0; len])
            },
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let state = self.state.as_mut()?;
        let current = state.clone();
        match state.iter().rposition(|&i| i + 1 < self.m) {
            Some(t) => {
                let v = state[t] + 1;
                for slot in &mut state[t..] {
                    *slot = v;
                }
            }
            None => self.state = None,
        }
        Some(current)
    }
}
