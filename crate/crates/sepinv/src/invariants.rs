//! Evaluation of the bisymmetric power sums `f_{j,k}` and fingerprints of
//! points against an index set.

use crate::error::{Error, Result};
use crate::index_sets::IndexSet;
use crate::point::{BiIndex, PointPair};
use crate::rational::Rational;

/// `f_{j,k}(p) = sum_i x_i^j y_i^k`, with `0^0 = 1`.
pub fn eval_invariant(idx: BiIndex, p: &PointPair) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..p.n() {
        let (x, y) = p.pair(i);
        acc += &(x.pow(idx.j) * y.pow(idx.k));
    }
    acc
}

/// Memoized coordinate powers `x_i^0..x_i^jmax`, `y_i^0..y_i^kmax` for one
/// point. Evaluating a whole index set against a point reuses the table, so
/// each power is computed once.
pub(crate) struct PowerTable {
    xpows: Vec<Vec<Rational>>,
    ypows: Vec<Vec<Rational>>,
}

impl PowerTable {
    pub(crate) fn new(p: &PointPair, max_j: u32, max_k: u32) -> Self {
        let ladder = |v: &Rational, top: u32| -> Vec<Rational> {
            let mut pows = Vec::with_capacity(top as usize + 1);
            pows.push(Rational::one());
            for e in 1..=top {
                let next = &pows[(e - 1) as usize] * v;
                pows.push(next);
            }
            pows
        };
        PowerTable {
            xpows: p.xs().iter().map(|x| ladder(x, max_j)).collect(),
            ypows: p.ys().iter().map(|y| ladder(y, max_k)).collect(),
        }
    }

    pub(crate) fn eval(&self, idx: BiIndex) -> Rational {
        let mut acc = Rational::zero();
        for (xp, yp) in self.xpows.iter().zip(&self.ypows) {
            acc += &(&xp[idx.j as usize] * &yp[idx.k as usize]);
        }
        acc
    }
}

/// The tuple of invariant values of one point over one index set, stored in
/// the set's canonical order so equality and hashing are positional.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fingerprint {
    values: Vec<Rational>,
}

impl Fingerprint {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Evaluates every member of `set` on `p`, aligned with `set.indices()`.
pub fn fingerprint(set: &IndexSet, p: &PointPair) -> Result<Fingerprint> {
    if set.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: set.n(),
            actual: p.n(),
        });
    }
    let table = PowerTable::new(p, set.max_j(), set.max_k());
    Ok(Fingerprint {
        values: set.iter().map(|&idx| table.eval(idx)).collect(),
    })
}

/// Canonical byte key of a list of rationals: normalized renderings joined
/// by `;`. Injective because the rendering is injective and never contains
/// the separator.
pub(crate) fn rationals_key(values: &[Rational]) -> Vec<u8> {
    let mut out = Vec::with_capacity(values.len() * 4);
    for (t, v) in values.iter().enumerate() {
        if t > 0 {
            out.push(b';');
        }
        out.extend_from_slice(v.canonical_string().as_bytes());
    }
    out
}

/// Canonical grouping key, injective on fingerprints of the same index set.
pub fn fingerprint_key(fp: &Fingerprint) -> Vec<u8> {
    rationals_key(&fp.values)
}
