//! Empirical separation checks over finite grids, witness search for
//! non-separation of proper subsets of `S(n)`, and the constructive
//! witness generators behind the minimality results.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::index_sets::{build_s, IndexSet};
use crate::invariants::{eval_invariant, fingerprint, fingerprint_key, rationals_key};
use crate::orbits::{enumerate_orbit_reps, same_orbit, GridSpec, Odometer};
use crate::point::{BiIndex, PointPair};
use crate::rational::Rational;

/// Outcome of checking an index set against every orbit of a finite grid.
#[derive(Debug)]
pub struct SeparationReport {
    n: usize,
    grid: GridSpec,
    index_set: IndexSet,
    orbit_count: usize,
    collision_pairs: Vec<(PointPair, PointPair)>,
}

impl SeparationReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    /// Number of distinct orbits of grid points.
    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    /// Pairs of representatives in different orbits with identical
    /// fingerprints; empty ⟺ the set separates every orbit of the grid.
    pub fn collision_pairs(&self) -> &[(PointPair, PointPair)] {
        &self.collision_pairs
    }

    pub fn separates(&self) -> bool {
        self.collision_pairs.is_empty()
    }
}

/// Two points in different orbits whose fingerprints agree on all of `S(n)`
/// except `removed` — a certificate that `S(n) \ {removed}` does not
/// separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    p: PointPair,
    q: PointPair,
    removed: BiIndex,
}

impl WitnessPair {
    pub fn new(p: PointPair, q: PointPair, removed: BiIndex) -> Self {
        WitnessPair { p, q, removed }
    }

    pub fn p(&self) -> &PointPair {
        &self.p
    }

    pub fn q(&self) -> &PointPair {
        &self.q
    }

    pub fn removed(&self) -> BiIndex {
        self.removed
    }
}

/// Which coordinate vector a Lemma-1 embedding lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    X,
    Y,
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            other => Err(Error::InvalidAxis(other.to_string())),
        }
    }
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

/// Worker pool honoring the `SEPINV_THREADS` cap; `None` means use the
/// default global pool (all available cores). The variable is read once.
fn configured_pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads: usize = std::env::var("SEPINV_THREADS").ok()?.parse().ok()?;
        if threads == 0 {
            return None;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .ok()
    })
    .as_ref()
}

fn run_in_pool<R: Send>(work: impl FnOnce() -> R + Send) -> R {
    match configured_pool() {
        Some(pool) => pool.install(work),
        None => work(),
    }
}

/// Groups every orbit representative of the grid by its fingerprint on
/// `set`; any group with two or more members yields collision pairs. The
/// report is deterministic and independent of worker count: keys are
/// computed in parallel but grouped in enumeration order.
pub fn verify_separation(set: &IndexSet, n: usize, grid: &GridSpec) -> Result<SeparationReport> {
    if set.n() != n {
        return Err(Error::SizeMismatch {
            expected: set.n(),
            actual: n,
        });
    }
    let reps: Vec<PointPair> = enumerate_orbit_reps(n, grid).collect();
    let keys: Result<Vec<Vec<u8>>> = run_in_pool(|| {
        reps.par_iter()
            .map(|p| Ok(fingerprint_key(&fingerprint(set, p)?)))
            .collect()
    });
    let keys = keys?;

    let mut groups: HashMap<&[u8], Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        groups.entry(key).or_default().push(i);
    }
    let mut colliding: Vec<Vec<usize>> = groups
        .into_values()
        .filter(|members| members.len() >= 2)
        .collect();
    colliding.sort();

    let mut collision_pairs = Vec::new();
    for members in colliding {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                collision_pairs.push((reps[i].clone(), reps[j].clone()));
            }
        }
    }
    Ok(SeparationReport {
        n,
        grid: grid.clone(),
        index_set: set.clone(),
        orbit_count: reps.len(),
        collision_pairs,
    })
}

/// True iff `w.p`, `w.q` agree on every index of `S(n)` except `w.removed`,
/// the removed index distinguishes them, and the orbits differ.
pub fn validate_witness(w: &WitnessPair, n: usize) -> Result<bool> {
    if w.p.n() != n || w.q.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: if w.p.n() != n { w.p.n() } else { w.q.n() },
        });
    }
    let s = build_s(n)?;
    if !s.contains(w.removed) {
        return Err(Error::IndexNotInSet(w.removed));
    }
    for &idx in s.iter() {
        let equal = eval_invariant(idx, &w.p) == eval_invariant(idx, &w.q);
        if (idx == w.removed) == equal {
            return Ok(false);
        }
    }
    Ok(!same_orbit(&w.p, &w.q)?)
}

/// Searches grid orbits for two representatives whose fingerprints agree on
/// `S(n) \ {removed}`. The scan is in enumeration order (deterministic) and
/// stops at the first collision; `budget` caps how many representatives are
/// examined (0 = unlimited). `None` means nothing was found within the
/// grid/budget — that is inconclusive, never a proof of separation.
pub fn find_witness(
    n: usize,
    removed: BiIndex,
    grid: &GridSpec,
    budget: usize,
) -> Result<Option<WitnessPair>> {
    let reduced = build_s(n)?.without(removed)?;
    let mut seen: HashMap<Vec<u8>, PointPair> = HashMap::new();
    for (examined, rep) in enumerate_orbit_reps(n, grid).enumerate() {
        if budget != 0 && examined >= budget {
            return Ok(None);
        }
        let key = fingerprint_key(&fingerprint(&reduced, &rep)?);
        match seen.get(&key) {
            None => {
                seen.insert(key, rep);
            }
            Some(prev) => {
                // distinct representatives ⟹ different orbits; the removed
                // index must then differ, since all of S(n) together
                // separates — validated rather than assumed
                let w = WitnessPair::new(prev.clone(), rep, removed);
                if validate_witness(&w, n)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Multisets over the grid, i.e. weakly increasing tuples, in lex order.
fn grid_multisets(grid: &GridSpec, len: usize) -> impl Iterator<Item = Vec<Rational>> + '_ {
    Odometer::new(grid.len(), len)
        .map(move |idxs| idxs.into_iter().map(|i| grid.values()[i].clone()).collect())
}

fn power_sum(vals: &[Rational], k: u32) -> Rational {
    let mut acc = Rational::zero();
    for v in vals {
        acc += &v.pow(k);
    }
    acc
}

/// Finds two multisets over the grid with equal power sums for every
/// exponent in `kept`, in different orbits (i.e. distinct as multisets).
/// Deterministic lex-order scan; `budget` caps candidates (0 = unlimited).
fn collide_power_sums(
    grid: &GridSpec,
    len: usize,
    kept: &[u32],
    budget: usize,
) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let mut seen: HashMap<Vec<u8>, Vec<Rational>> = HashMap::new();
    for (examined, cand) in grid_multisets(grid, len).enumerate() {
        if budget != 0 && examined >= budget {
            return None;
        }
        let sums: Vec<Rational> = kept.iter().map(|&k| power_sum(&cand, k)).collect();
        let key = rationals_key(&sums);
        match seen.get(&key) {
            None => {
                seen.insert(key, cand);
            }
            Some(prev) => return Some((prev.clone(), cand)),
        }
    }
    None
}

/// Lemma-1 embedding: two vectors `a, a'` in different orbits with equal
/// power sums for every exponent `1..=n` except `j` become the witness pair
/// `(a | 0), (a' | 0)` for removing `f_{j,0}` (axis `y` swaps the roles,
/// removing `f_{0,j}`).
pub fn lemma1_witness(
    n: usize,
    axis: Axis,
    j: u32,
    grid: &GridSpec,
    budget: usize,
) -> Result<Option<WitnessPair>> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    if j == 0 || j as usize > n {
        return Err(Error::ExponentOutOfRange { j, n });
    }
    let kept: Vec<u32> = (1..=n as u32).filter(|&k| k != j).collect();
    let Some((a, a2)) = collide_power_sums(grid, n, &kept, budget) else {
        return Ok(None);
    };
    let zeros = vec![Rational::zero(); n];
    let (p, q, removed) = match axis {
        Axis::X => (
            PointPair::new(a, zeros.clone())?,
            PointPair::new(a2, zeros)?,
            BiIndex::new(j, 0)?,
        ),
        Axis::Y => (
            PointPair::new(zeros.clone(), a)?,
            PointPair::new(zeros, a2)?,
            BiIndex::new(0, j)?,
        ),
    };
    let w = WitnessPair::new(p, q, removed);
    assert!(validate_witness(&w, n)?, "embedded pair must validate");
    Ok(Some(w))
}

/// Lemma-2 template for even `n = 2r`: from multisets `b, c` over the grid
/// with equal power sums up to `r - 1` (a Prouhet–Tarry–Escott-type pair)
/// build `p = (1^r, 2^r | b, c)` and `q = (1^r, 2^r | c, b)`, a witness for
/// removing `f_{1,r}`. The construction satisfies, for every `(j,k)`,
/// `f_{j,k}(p) - f_{j,k}(q) = (2^j - 1)·Σ_i(c_i^k - b_i^k)`: the `x = 1`
/// rows contribute `b^k` vs `c^k` and the `x = 2` rows `2^j c^k` vs
/// `2^j b^k`. The identity is checked exactly over all of `S(n)` before
/// returning.
pub fn lemma2_witness(n: usize, grid: &GridSpec, budget: usize) -> Result<Option<WitnessPair>> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddN(n));
    }
    let r = n / 2;
    let kept: Vec<u32> = (1..r as u32).collect();
    let Some((b, c)) = collide_power_sums(grid, r, &kept, budget) else {
        return Ok(None);
    };

    let one = Rational::one();
    let two = Rational::from_int(2);
    let xs: Vec<Rational> = std::iter::repeat_n(one, r)
        .chain(std::iter::repeat_n(two, r))
        .collect();
    let p = PointPair::new(xs.clone(), b.iter().chain(&c).cloned().collect())?;
    let q = PointPair::new(xs, c.iter().chain(&b).cloned().collect())?;
    let removed = BiIndex::new(1, r as u32)?;

    let w = WitnessPair::new(p, q, removed);
    for &idx in build_s(n)?.iter() {
        assert!(
            lemma2_identity_holds(idx, &w, &b, &c),
            "construction identity must hold at {idx}"
        );
    }
    assert!(validate_witness(&w, n)?, "constructed pair must validate");
    Ok(Some(w))
}

/// `f_{j,k}(p) - f_{j,k}(q) = (2^j - 1)·Σ_i(c_i^k - b_i^k)`, exactly.
fn lemma2_identity_holds(idx: BiIndex, w: &WitnessPair, b: &[Rational], c: &[Rational]) -> bool {
    let lhs = eval_invariant(idx, &w.p) - eval_invariant(idx, &w.q);
    let factor = Rational::from_int(2).pow(idx.j) - Rational::one();
    let rhs = factor * (power_sum(c, idx.k) - power_sum(b, idx.k));
    lhs == rhs
}

/// The explicit witness pairs exhibited for `n = 3` and `n = 4`, exactly as
/// printed: two for n = 3, three for n = 4, plus the Lemma-2 pair at n = 4.
pub fn paper_fixtures() -> Vec<WitnessPair> {
    let fixture = |xs: &[i64], ys_p: &[i64], ys_q: &[i64], j: u32, k: u32| {
        WitnessPair::new(
            PointPair::from_ints(xs, ys_p).expect("fixture sizes match"),
            PointPair::from_ints(xs, ys_q).expect("fixture sizes match"),
            BiIndex::new(j, k).expect("fixture index is nonzero"),
        )
    };
    vec![
        fixture(&[1, 2, 3], &[1, 0, 2], &[0, 2, 1], 2, 1),
        fixture(&[1, 2, 3], &[5, 0, 8], &[0, 8, 5], 1, 1),
        fixture(&[1, 2, 3, 4], &[0, 3, 1, 4], &[1, 0, 4, 3], 3, 1),
        fixture(&[3, 1, 0, -5], &[6, 0, 10, 1], &[1, 10, 6, 0], 2, 1),
        fixture(&[-1, 0, 1, 2], &[1, 7, -3, 9], &[-3, 1, 9, 7], 1, 1),
        fixture(&[1, 1, 2, 2], &[0, 2, 1, 1], &[1, 1, 0, 2], 1, 2),
    ]
}
