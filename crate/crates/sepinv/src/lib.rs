//! Separating invariants for the diagonal `S_n`-action on pairs of
//! `n`-vectors.
//!
//! The symmetric group acts on `(x, y) = (x_1..x_n, y_1..y_n)` by permuting
//! both vectors with the same permutation. The bisymmetric power sums
//! `f_{j,k} = sum_i x_i^j y_i^k` generate the invariant ring; this crate
//! works with two finite index sets of them:
//!
//! * `M(n)`: all `(j, k) != (0, 0)` with `j + k <= n` — the classical
//!   generating set, of size `(n^2 + 3n) / 2`;
//! * `S(n)`: all `(j, k) != (0, 0)` with `j <= n` and `k <= n / (j + 1)` — a
//!   much smaller subset that still separates orbits, of size `n + D(n)`
//!   where `D` is the divisor summatory function.
//!
//! The crate evaluates these invariants exactly over the rationals, decides
//! orbit equivalence independently of them, reconstructs a matching
//! permutation from `S(n)`-values alone, and searches for witnesses showing
//! that proper subsets of `S(n)` fail to separate.

pub mod error;
pub mod index_sets;
pub mod invariants;
pub mod matcher;
pub mod orbits;
pub mod point;
pub mod point_file;
pub mod rational;
pub mod verifier;

pub use error::{Error, Result};
pub use index_sets::{build_m, build_s, divisor_summatory, size_formulas, IndexSet, IndexSetKind};
pub use invariants::{eval_invariant, fingerprint, fingerprint_key, Fingerprint};
pub use matcher::{
    block_decompose, match_points, multisets_equal_by_power_sums, power_sums_to_elementary,
    vandermonde_solve, BlockDecomposition, MatchResult,
};
pub use orbits::{
    canonical_form, enumerate_orbit_reps, orbit_permutation, same_orbit, CanonicalPoint, GridSpec,
};
pub use point::{apply_permutation, BiIndex, Permutation, PointPair};
pub use point_file::{parse_point_file, render_point_file, PointFile};
pub use rational::Rational;
pub use verifier::{
    find_witness, lemma1_witness, lemma2_witness, paper_fixtures, validate_witness,
    verify_separation, Axis, SeparationReport, WitnessPair,
};
