//! The separation proof as an algorithm: given two points with equal
//! fingerprints on `S(n)`, reconstruct a permutation mapping one onto the
//! other; otherwise report a member of `S(n)` whose values differ.
//!
//! The stages mirror the induction. First the x-multisets are aligned via
//! the pure x power sums `f_{1..n,0}`. Both points are then arranged into
//! block form `λ_1^{n_1} … λ_r^{n_r}` (multiplicities weakly decreasing).
//! For each `k ≤ n_r` the per-block y-power sums are recovered from the
//! invariant values `f_{0..r-1,k}` by inverting a Vandermonde system — these
//! indices satisfy `k ≤ n_r ≤ n/(j+1)`, so they all lie in `S(n)`. Equality
//! of the first `n_r` power sums pins the last block's y-values up to a
//! permutation `π` (Newton's identities, characteristic 0), and the
//! remaining `n - n_r` coordinates are matched recursively with `S(n - n_r)`.

use crate::error::{Error, Result};
use crate::invariants::eval_invariant;
use crate::point::{apply_permutation, BiIndex, Permutation, PointPair};
use crate::rational::Rational;

/// A point's x-coordinates arranged as `λ_1^{n_1} … λ_r^{n_r}` with the
/// `λ_i` pairwise distinct and `n_1 ≥ … ≥ n_r`.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    lambdas: Vec<Rational>,
    multiplicities: Vec<usize>,
    arranging: Permutation,
}

impl BlockDecomposition {
    /// The distinct x-values, in block order.
    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    /// Weakly decreasing; ties broken by ascending λ for reproducibility.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// τ with `apply_permutation(τ, p)` in block form.
    pub fn arranging(&self) -> &Permutation {
        &self.arranging
    }

    pub fn r(&self) -> usize {
        self.lambdas.len()
    }
}

/// Outcome of [`match_points`]: a permutation mapping `q` onto `p`, or an
/// index of `S(n)` on which the two points provably differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchResult {
    Matched(Permutation),
    Witness(BiIndex),
}

impl MatchResult {
    pub fn permutation(&self) -> Option<&Permutation> {
        match self {
            MatchResult::Matched(sigma) => Some(sigma),
            MatchResult::Witness(_) => None,
        }
    }

    pub fn witness(&self) -> Option<BiIndex> {
        match self {
            MatchResult::Matched(_) => None,
            MatchResult::Witness(idx) => Some(*idx),
        }
    }
}

/// Solves `Σ_i λ_i^j s_i = values[j]` for `j = 0..r-1` by exact Gaussian
/// elimination. The nodes must be pairwise distinct, which makes the system
/// uniquely solvable.
pub fn vandermonde_solve(lambdas: &[Rational], values: &[Rational]) -> Result<Vec<Rational>> {
    let r = lambdas.len();
    if values.len() != r {
        return Err(Error::SizeMismatch {
            expected: r,
            actual: values.len(),
        });
    }
    for (i, a) in lambdas.iter().enumerate() {
        if lambdas[i + 1..].contains(a) {
            return Err(Error::DuplicateNodes);
        }
    }

    // augmented matrix, row j = [λ_0^j .. λ_{r-1}^j | values[j]]
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(r);
    let mut powers: Vec<Rational> = vec![Rational::one(); r];
    for (j, value) in values.iter().enumerate() {
        let mut row = powers.clone();
        row.push(value.clone());
        rows.push(row);
        if j + 1 < r {
            for (pw, lam) in powers.iter_mut().zip(lambdas) {
                *pw *= lam;
            }
        }
    }

    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !rows[i][col].is_zero())
            .expect("Vandermonde matrix with distinct nodes is invertible");
        rows.swap(col, pivot);
        let inv_lead = Rational::one() / rows[col][col].clone();
        for entry in rows[col][col..].iter_mut() {
            *entry *= &inv_lead;
        }
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(col + 1);
            (&head[col], tail)
        };
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pe) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &(&factor * pe);
            }
        }
    }

    // back-substitution
    let mut solution = vec![Rational::zero(); r];
    for col in (0..r).rev() {
        let mut v = rows[col][r].clone();
        for j in col + 1..r {
            v -= &(&rows[col][j] * &solution[j]);
        }
        solution[col] = v;
    }
    Ok(solution)
}

/// Newton's identities in characteristic 0:
/// `e_k = (1/k) Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`, with `e_0 = 1`.
/// Input is `(p_1..p_m)`, output `(e_1..e_m)`.
pub fn power_sums_to_elementary(powersums: &[Rational]) -> Vec<Rational> {
    let m = powersums.len();
    let mut e = Vec::with_capacity(m + 1);
    e.push(Rational::one());
    for k in 1..=m {
        let mut acc = Rational::zero();
        let mut sign = 1i64;
        for i in 1..=k {
            let term = &e[k - i] * &powersums[i - 1];
            if sign > 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
            sign = -sign;
        }
        e.push(acc * Rational::new(1.into(), (k as i64).into()).expect("k >= 1"));
    }
    e.remove(0);
    e
}

/// True iff the first `m` power sums of the two size-`m` multisets agree —
/// equivalently (characteristic 0), iff the multisets are equal.
pub fn multisets_equal_by_power_sums(b: &[Rational], c: &[Rational]) -> Result<bool> {
    if b.len() != c.len() {
        return Err(Error::SizeMismatch {
            expected: b.len(),
            actual: c.len(),
        });
    }
    let power_sum = |vals: &[Rational], k: u32| -> Rational {
        let mut acc = Rational::zero();
        for v in vals {
            acc += &v.pow(k);
        }
        acc
    };
    for k in 1..=b.len() as u32 {
        if power_sum(b, k) != power_sum(c, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Groups the x-coordinates of `p` into the block form of the proof.
pub fn block_decompose(p: &PointPair) -> BlockDecomposition {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<&Rational, Vec<usize>> = BTreeMap::new();
    for (i, x) in p.xs().iter().enumerate() {
        groups.entry(x).or_default().push(i);
    }
    let mut blocks: Vec<(&Rational, Vec<usize>)> = groups.into_iter().collect();
    blocks.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.0.cmp(b.0)));

    let mut images = vec![0usize; p.n()];
    let mut pos = 0;
    for (_, idxs) in &blocks {
        for &i in idxs {
            images[i] = pos;
            pos += 1;
        }
    }
    BlockDecomposition {
        lambdas: blocks.iter().map(|(lam, _)| (*lam).clone()).collect(),
        multiplicities: blocks.iter().map(|(_, idxs)| idxs.len()).collect(),
        arranging: Permutation::new(images).expect("each index placed exactly once"),
    }
}

/// Decides whether `p` and `q` lie in the same orbit using only invariant
/// machinery. On success returns σ with `apply_permutation(σ, q) = p`;
/// otherwise returns the distinguishing index (smallest failing `(j,0)` when
/// the x-multisets differ, else the lexicographically smallest failing
/// `(j,k)` of the block stage, else bubbled up from the recursion).
pub fn match_points(p: &PointPair, q: &PointPair) -> Result<MatchResult> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            actual: q.n(),
        });
    }
    let n = p.n();
    if n == 0 {
        return Ok(MatchResult::Matched(Permutation::identity(0)));
    }

    // stage 1: pure x power sums f_{1,0}..f_{n,0}; equality forces equal
    // x-multisets (Newton)
    for j in 1..=n as u32 {
        let idx = BiIndex::new(j, 0).expect("j >= 1");
        if eval_invariant(idx, p) != eval_invariant(idx, q) {
            return Ok(MatchResult::Witness(idx));
        }
    }

    // stage 2: block form; equal x-multisets give identical block structure
    let bp = block_decompose(p);
    let bq = block_decompose(q);
    debug_assert_eq!(bp.lambdas, bq.lambdas);
    debug_assert_eq!(bp.multiplicities, bq.multiplicities);
    let pp = apply_permutation(bp.arranging(), p)?;
    let qq = apply_permutation(bq.arranging(), q)?;
    let r = bp.r();
    let n_r = *bp.multiplicities.last().expect("n >= 1 has a block");
    let m = n - n_r;

    // stage 3: for each k ≤ n_r recover the per-block y-power sums from
    // f_{0..r-1,k} via the Vandermonde system and compare
    let stage3_witness = |a: &PointPair, b: &PointPair| -> BiIndex {
        for j in 0..r as u32 {
            for k in 1..=n_r as u32 {
                let idx = BiIndex::new(j, k).expect("k >= 1");
                if eval_invariant(idx, a) != eval_invariant(idx, b) {
                    return idx;
                }
            }
        }
        unreachable!("some invariant in the block stage must differ");
    };
    for k in 1..=n_r as u32 {
        let observed = |t: &PointPair| -> Result<Vec<Rational>> {
            let values: Vec<Rational> = (0..r as u32)
                .map(|j| eval_invariant(BiIndex::new(j, k).expect("k >= 1"), t))
                .collect();
            vandermonde_solve(&bp.lambdas, &values)
        };
        if observed(&pp)? != observed(&qq)? {
            return Ok(MatchResult::Witness(stage3_witness(p, q)));
        }
    }

    // stage 4: the last block's y-multisets agree by their first n_r power
    // sums, hence as multisets; match them by sorting
    if !multisets_equal_by_power_sums(&pp.ys()[m..], &qq.ys()[m..])? {
        return Ok(MatchResult::Witness(stage3_witness(p, q)));
    }
    let ranked_tail = |t: &PointPair| -> Vec<usize> {
        let mut order: Vec<usize> = (m..n).collect();
        order.sort_by(|&a, &b| t.ys()[a].cmp(&t.ys()[b]));
        order
    };
    let mut pi_images: Vec<usize> = (0..n).collect();
    for (u, v) in ranked_tail(&qq).into_iter().zip(ranked_tail(&pp)) {
        pi_images[u] = v;
    }
    let pi = Permutation::new(pi_images).expect("tail ranks form a bijection");
    let qq = apply_permutation(&pi, &qq)?;

    // stage 5: recurse on the first n - n_r coordinates
    let phi = if m == 0 {
        Permutation::identity(n)
    } else {
        match match_points(&pp.truncate(m), &qq.truncate(m))? {
            // the matched tails contribute equally to every f_{j,k}, so a
            // differing index of S(m) ⊆ S(n) still differs on p and q
            MatchResult::Witness(idx) => return Ok(MatchResult::Witness(idx)),
            MatchResult::Matched(phi) => phi.extend_fixing_tail(n),
        }
    };

    // unwind: τ_p⁻¹ ∘ φ ∘ π ∘ τ_q maps q to p
    let sigma = bp
        .arranging()
        .inverse()
        .compose(&phi.compose(&pi.compose(bq.arranging())));
    debug_assert_eq!(&apply_permutation(&sigma, q)?, p);
    Ok(MatchResult::Matched(sigma))
}
