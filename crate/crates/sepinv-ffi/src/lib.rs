//! C ABI for the `sepinv` library.
//!
//! Conventions, uniform across the surface:
//!
//! - handles (`SepinvPoint`, `SepinvIndexSet`) are opaque; create them through
//!   the constructors here and release them with the matching `_free` call
//! - every fallible call returns a [`SepinvStatus`] and writes its results
//!   through out-pointers only when it returns `Ok`
//! - exact values cross the boundary as canonical decimal strings (`"-3"`,
//!   `"1/2"`); every `char*` the library allocates must be released with
//!   [`sepinv_string_free`]

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sepinv::{
    build_m, build_s, eval_invariant, fingerprint, match_points, parse_point_file,
    render_point_file, same_orbit, size_formulas, verify_separation, BiIndex, Error, GridSpec,
    IndexSet, MatchResult, PointPair,
};

/// Result of every fallible call in this API.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SepinvStatus {
    /// Success; out-parameters are populated.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// An argument was outside its domain (n = 0, (j,k) = (0,0), ...).
    InvalidArgument = 2,
    /// A string argument did not parse (point file, rational, grid).
    ParseError = 3,
    /// Two arguments that must share a dimension did not.
    SizeMismatch = 4,
    /// The index is not a member of the given set.
    IndexNotInSet = 5,
    /// A string argument was not valid UTF-8.
    Utf8Error = 6,
}

/// A point of K^n x K^n (a pair of coordinate vectors).
pub struct SepinvPoint(PointPair);

/// An ordered set of invariant indices (j,k).
pub struct SepinvIndexSet(IndexSet);

fn status_of(e: &Error) -> SepinvStatus {
    match e {
        Error::ZeroDenominator
        | Error::ParseRational(_)
        | Error::ParseIndex(_)
        | Error::PointFile(_) => SepinvStatus::ParseError,
        Error::SizeMismatch { .. } => SepinvStatus::SizeMismatch,
        Error::IndexNotInSet(_) => SepinvStatus::IndexNotInSet,
        _ => SepinvStatus::InvalidArgument,
    }
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, SepinvStatus> {
    if ptr.is_null() {
        return Err(SepinvStatus::NullArgument);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| SepinvStatus::Utf8Error)
}

fn export_string(s: String) -> *mut c_char {
    // canonical renderings never contain interior NUL bytes
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Parses a point file (`{"n": 3, "x": ["1","2","3"], "y": ["1","0","2"]}`)
/// into a fresh handle. Free it with `sepinv_point_free`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string or NULL; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_point_parse(
    json: *const c_char,
    out: *mut *mut SepinvPoint,
) -> SepinvStatus {
    if out.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let text = match utf8_arg(json) {
        Ok(text) => text,
        Err(status) => return status,
    };
    match parse_point_file(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(SepinvPoint(p)));
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Renders a point back to its canonical point-file JSON.
///
/// # Safety
/// `point` must be a live handle from this library; `out_json` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_point_render(
    point: *const SepinvPoint,
    out_json: *mut *mut c_char,
) -> SepinvStatus {
    if point.is_null() || out_json.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out_json = export_string(render_point_file(&(*point).0));
    SepinvStatus::Ok
}

/// Number of coordinate pairs in the point; 0 when `point` is NULL.
///
/// # Safety
/// `point` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sepinv_point_n(point: *const SepinvPoint) -> usize {
    if point.is_null() {
        return 0;
    }
    (*point).0.n()
}

/// Releases a point handle; NULL is a no-op.
///
/// # Safety
/// `point` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sepinv_point_free(point: *mut SepinvPoint) {
    if !point.is_null() {
        drop(Box::from_raw(point));
    }
}

fn export_set(built: sepinv::Result<IndexSet>, out: &mut *mut SepinvIndexSet) -> SepinvStatus {
    match built {
        Ok(set) => {
            *out = Box::into_raw(Box::new(SepinvIndexSet(set)));
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Builds M(n), all (j,k) != (0,0) with j + k <= n. Free with
/// `sepinv_index_set_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_m(
    n: usize,
    out: *mut *mut SepinvIndexSet,
) -> SepinvStatus {
    if out.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    export_set(build_m(n), &mut *out)
}

/// Builds the separating subset S(n): j <= n, k <= n/(j+1), (j,k) != (0,0).
/// Free with `sepinv_index_set_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_s(
    n: usize,
    out: *mut *mut SepinvIndexSet,
) -> SepinvStatus {
    if out.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    export_set(build_s(n), &mut *out)
}

/// Copies `set` with one index removed.
///
/// # Safety
/// `set` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_without(
    set: *const SepinvIndexSet,
    j: u32,
    k: u32,
    out: *mut *mut SepinvIndexSet,
) -> SepinvStatus {
    if set.is_null() || out.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let idx = match BiIndex::new(j, k) {
        Ok(idx) => idx,
        Err(e) => return status_of(&e),
    };
    export_set((*set).0.without(idx), &mut *out)
}

/// Number of indices in the set; 0 when `set` is NULL.
///
/// # Safety
/// `set` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_len(set: *const SepinvIndexSet) -> usize {
    if set.is_null() {
        return 0;
    }
    (*set).0.len()
}

/// Reads the index at `pos` in canonical order.
///
/// # Safety
/// `set` must be a live handle; `out_j` and `out_k` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_at(
    set: *const SepinvIndexSet,
    pos: usize,
    out_j: *mut u32,
    out_k: *mut u32,
) -> SepinvStatus {
    if set.is_null() || out_j.is_null() || out_k.is_null() {
        return SepinvStatus::NullArgument;
    }
    match (*set).0.indices().get(pos) {
        Some(idx) => {
            *out_j = idx.j;
            *out_k = idx.k;
            SepinvStatus::Ok
        }
        None => SepinvStatus::InvalidArgument,
    }
}

/// Releases an index-set handle; NULL is a no-op.
///
/// # Safety
/// `set` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sepinv_index_set_free(set: *mut SepinvIndexSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Evaluates f_{j,k} on the point, writing the exact value as a canonical
/// string ("19", "-3/2"). Free the string with `sepinv_string_free`.
///
/// # Safety
/// `point` must be a live handle; `out_value` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_eval(
    point: *const SepinvPoint,
    j: u32,
    k: u32,
    out_value: *mut *mut c_char,
) -> SepinvStatus {
    if point.is_null() || out_value.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out_value = ptr::null_mut();
    let idx = match BiIndex::new(j, k) {
        Ok(idx) => idx,
        Err(e) => return status_of(&e),
    };
    *out_value = export_string(eval_invariant(idx, &(*point).0).canonical_string());
    SepinvStatus::Ok
}

/// Evaluates every invariant of `set` on the point and writes the values in
/// set order, joined with ';'. Free the string with `sepinv_string_free`.
///
/// # Safety
/// `set` and `point` must be live handles; `out_values` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_fingerprint(
    set: *const SepinvIndexSet,
    point: *const SepinvPoint,
    out_values: *mut *mut c_char,
) -> SepinvStatus {
    if set.is_null() || point.is_null() || out_values.is_null() {
        return SepinvStatus::NullArgument;
    }
    *out_values = ptr::null_mut();
    match fingerprint(&(*set).0, &(*point).0) {
        Ok(fp) => {
            let joined = fp
                .values()
                .iter()
                .map(|v| v.canonical_string())
                .collect::<Vec<_>>()
                .join(";");
            *out_values = export_string(joined);
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Tests whether two points lie in the same orbit of the coupled coordinate
/// permutation action.
///
/// # Safety
/// `p` and `q` must be live handles; `out_same` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sepinv_same_orbit(
    p: *const SepinvPoint,
    q: *const SepinvPoint,
    out_same: *mut bool,
) -> SepinvStatus {
    if p.is_null() || q.is_null() || out_same.is_null() {
        return SepinvStatus::NullArgument;
    }
    match same_orbit(&(*p).0, &(*q).0) {
        Ok(same) => {
            *out_same = same;
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Matches two points. On `Ok` exactly one of two outcomes is written:
///
/// - `*out_matched = true` and `*out_sigma` holds the permutation in 1-based
///   one-line notation ("3 1 2"), meaning sigma applied to `q` gives `p`
/// - `*out_matched = false` and `out_witness_j`/`out_witness_k` name an index
///   of S(n) whose invariant separates the points; `*out_sigma` stays NULL
///
/// Free a non-NULL `*out_sigma` with `sepinv_string_free`.
///
/// # Safety
/// `p` and `q` must be live handles; all out-parameters must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn sepinv_match(
    p: *const SepinvPoint,
    q: *const SepinvPoint,
    out_matched: *mut bool,
    out_sigma: *mut *mut c_char,
    out_witness_j: *mut u32,
    out_witness_k: *mut u32,
) -> SepinvStatus {
    if p.is_null()
        || q.is_null()
        || out_matched.is_null()
        || out_sigma.is_null()
        || out_witness_j.is_null()
        || out_witness_k.is_null()
    {
        return SepinvStatus::NullArgument;
    }
    *out_sigma = ptr::null_mut();
    *out_witness_j = 0;
    *out_witness_k = 0;
    match match_points(&(*p).0, &(*q).0) {
        Ok(MatchResult::Matched(sigma)) => {
            *out_matched = true;
            *out_sigma = export_string(sigma.one_line());
            SepinvStatus::Ok
        }
        Ok(MatchResult::Witness(idx)) => {
            *out_matched = false;
            *out_witness_j = idx.j;
            *out_witness_k = idx.k;
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Checks `set` against every orbit of the n-fold grid power. `grid_csv` is a
/// comma-separated list of rationals ("-1,0,1/2,2"). Writes the number of
/// orbits examined and the number of colliding pairs (0 means `set` separates
/// the grid).
///
/// # Safety
/// `set` must be a live handle; `grid_csv` must be a valid NUL-terminated
/// string; the out-parameters must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sepinv_verify_separation(
    set: *const SepinvIndexSet,
    n: usize,
    grid_csv: *const c_char,
    out_orbits: *mut u64,
    out_collisions: *mut u64,
) -> SepinvStatus {
    if set.is_null() || out_orbits.is_null() || out_collisions.is_null() {
        return SepinvStatus::NullArgument;
    }
    let text = match utf8_arg(grid_csv) {
        Ok(text) => text,
        Err(status) => return status,
    };
    let grid: GridSpec = match text.parse() {
        Ok(grid) => grid,
        Err(e) => return status_of(&e),
    };
    match verify_separation(&(*set).0, n, &grid) {
        Ok(report) => {
            *out_orbits = report.orbit_count() as u64;
            *out_collisions = report.collision_pairs().len() as u64;
            SepinvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Writes |M(n)| = (n^2 + 3n)/2 and |S(n)| = n + D(n).
///
/// # Safety
/// `out_m` and `out_s` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sepinv_sizes(n: u64, out_m: *mut u64, out_s: *mut u64) -> SepinvStatus {
    if out_m.is_null() || out_s.is_null() {
        return SepinvStatus::NullArgument;
    }
    if n == 0 {
        return SepinvStatus::InvalidArgument;
    }
    let (m, s) = size_formulas(n);
    *out_m = m;
    *out_s = s;
    SepinvStatus::Ok
}

/// Releases a string allocated by this library; NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sepinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name for a status code; do not free.
#[no_mangle]
pub extern "C" fn sepinv_status_name(status: SepinvStatus) -> *const c_char {
    let name: &CStr = match status {
        SepinvStatus::Ok => c"ok",
        SepinvStatus::NullArgument => c"null argument",
        SepinvStatus::InvalidArgument => c"invalid argument",
        SepinvStatus::ParseError => c"parse error",
        SepinvStatus::SizeMismatch => c"size mismatch",
        SepinvStatus::IndexNotInSet => c"index not in set",
        SepinvStatus::Utf8Error => c"invalid utf-8",
    };
    name.as_ptr()
}
