//! Exercises the C surface from Rust: status codes, ownership transfers, and
//! the string encodings a foreign binder would see.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sepinv_ffi::*;

const P3: &str = r#"{"n": 3, "x": ["1", "2", "3"], "y": ["1", "0", "2"]}"#;
const Q3: &str = r#"{"n": 3, "x": ["1", "2", "3"], "y": ["0", "2", "1"]}"#;
const P3_SHUFFLED: &str = r#"{"n": 3, "x": ["3", "1", "2"], "y": ["2", "1", "0"]}"#;

fn parse(json: &str) -> *mut SepinvPoint {
    let json = CString::new(json).unwrap();
    let mut point = ptr::null_mut();
    let status = unsafe { sepinv_point_parse(json.as_ptr(), &mut point) };
    assert_eq!(status, SepinvStatus::Ok);
    assert!(!point.is_null());
    point
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let owned = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { sepinv_string_free(ptr) };
    owned
}

#[test]
fn point_parse_render_roundtrip() {
    let point = parse(P3);
    assert_eq!(unsafe { sepinv_point_n(point) }, 3);
    let mut rendered = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_point_render(point, &mut rendered) },
        SepinvStatus::Ok
    );
    assert_eq!(
        take_string(rendered),
        r#"{"n":3,"x":["1","2","3"],"y":["1","0","2"]}"#
    );
    unsafe { sepinv_point_free(point) };
}

#[test]
fn point_parse_error_paths() {
    let mut point = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_point_parse(ptr::null(), &mut point) },
        SepinvStatus::NullArgument
    );
    assert!(point.is_null());

    let bad = CString::new("not json").unwrap();
    assert_eq!(
        unsafe { sepinv_point_parse(bad.as_ptr(), &mut point) },
        SepinvStatus::ParseError
    );

    let not_utf8 = CString::new([0xffu8, 0xfe]).unwrap();
    assert_eq!(
        unsafe { sepinv_point_parse(not_utf8.as_ptr(), &mut point) },
        SepinvStatus::Utf8Error
    );

    assert_eq!(unsafe { sepinv_point_n(ptr::null()) }, 0);
    unsafe { sepinv_point_free(ptr::null_mut()) };
}

#[test]
fn index_set_construction_and_access() {
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { sepinv_index_set_s(3, &mut set) }, SepinvStatus::Ok);
    assert_eq!(unsafe { sepinv_index_set_len(set) }, 8);

    let (mut j, mut k) = (u32::MAX, u32::MAX);
    assert_eq!(
        unsafe { sepinv_index_set_at(set, 0, &mut j, &mut k) },
        SepinvStatus::Ok
    );
    assert_eq!((j, k), (0, 1));
    assert_eq!(
        unsafe { sepinv_index_set_at(set, 7, &mut j, &mut k) },
        SepinvStatus::Ok
    );
    assert_eq!((j, k), (3, 0));
    assert_eq!(
        unsafe { sepinv_index_set_at(set, 8, &mut j, &mut k) },
        SepinvStatus::InvalidArgument
    );

    let mut smaller = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_index_set_without(set, 2, 1, &mut smaller) },
        SepinvStatus::Ok
    );
    assert_eq!(unsafe { sepinv_index_set_len(smaller) }, 7);
    unsafe { sepinv_index_set_free(smaller) };

    assert_eq!(
        unsafe { sepinv_index_set_without(set, 9, 9, &mut smaller) },
        SepinvStatus::IndexNotInSet
    );
    assert_eq!(
        unsafe { sepinv_index_set_without(set, 0, 0, &mut smaller) },
        SepinvStatus::InvalidArgument
    );
    unsafe { sepinv_index_set_free(set) };

    assert_eq!(
        unsafe { sepinv_index_set_s(0, &mut set) },
        SepinvStatus::InvalidArgument
    );
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { sepinv_index_set_m(2, &mut m) }, SepinvStatus::Ok);
    assert_eq!(unsafe { sepinv_index_set_len(m) }, 5);
    unsafe { sepinv_index_set_free(m) };
}

#[test]
fn eval_and_fingerprint() {
    let point = parse(P3);
    let mut value = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_eval(point, 2, 1, &mut value) },
        SepinvStatus::Ok
    );
    assert_eq!(take_string(value), "19");
    assert_eq!(
        unsafe { sepinv_eval(point, 0, 0, &mut value) },
        SepinvStatus::InvalidArgument
    );
    unsafe { sepinv_point_free(point) };

    let half = parse(r#"{"n": 2, "x": ["1", "2"], "y": ["3", "4"]}"#);
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { sepinv_index_set_s(2, &mut set) }, SepinvStatus::Ok);
    let mut values = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_fingerprint(set, half, &mut values) },
        SepinvStatus::Ok
    );
    assert_eq!(take_string(values), "7;25;3;11;5");
    unsafe { sepinv_index_set_free(set) };
    unsafe { sepinv_point_free(half) };
}

#[test]
fn fingerprint_rejects_mismatched_sizes() {
    let point = parse(P3);
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { sepinv_index_set_s(2, &mut set) }, SepinvStatus::Ok);
    let mut values = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_fingerprint(set, point, &mut values) },
        SepinvStatus::SizeMismatch
    );
    assert!(values.is_null());
    unsafe { sepinv_index_set_free(set) };
    unsafe { sepinv_point_free(point) };
}

#[test]
fn orbit_test_and_match() {
    let p = parse(P3);
    let shuffled = parse(P3_SHUFFLED);
    let q = parse(Q3);

    let mut same = false;
    assert_eq!(
        unsafe { sepinv_same_orbit(p, shuffled, &mut same) },
        SepinvStatus::Ok
    );
    assert!(same);
    assert_eq!(
        unsafe { sepinv_same_orbit(p, q, &mut same) },
        SepinvStatus::Ok
    );
    assert!(!same);

    let mut matched = false;
    let mut sigma = ptr::null_mut();
    let (mut j, mut k) = (0u32, 0u32);
    assert_eq!(
        unsafe { sepinv_match(p, shuffled, &mut matched, &mut sigma, &mut j, &mut k) },
        SepinvStatus::Ok
    );
    assert!(matched);
    assert_eq!(take_string(sigma), "3 1 2");

    sigma = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_match(p, q, &mut matched, &mut sigma, &mut j, &mut k) },
        SepinvStatus::Ok
    );
    assert!(!matched);
    assert!(sigma.is_null());
    assert_eq!((j, k), (2, 1));

    unsafe {
        sepinv_point_free(p);
        sepinv_point_free(shuffled);
        sepinv_point_free(q);
    }
}

#[test]
fn match_rejects_mismatched_sizes() {
    let p = parse(P3);
    let small = parse(r#"{"n": 1, "x": ["1"], "y": ["2"]}"#);
    let mut matched = false;
    let mut sigma = ptr::null_mut();
    let (mut j, mut k) = (0u32, 0u32);
    assert_eq!(
        unsafe { sepinv_match(p, small, &mut matched, &mut sigma, &mut j, &mut k) },
        SepinvStatus::SizeMismatch
    );
    unsafe {
        sepinv_point_free(p);
        sepinv_point_free(small);
    }
}

#[test]
fn verify_separation_over_a_grid() {
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { sepinv_index_set_s(2, &mut set) }, SepinvStatus::Ok);
    let grid = CString::new("0,1").unwrap();
    let (mut orbits, mut collisions) = (0u64, 0u64);
    assert_eq!(
        unsafe { sepinv_verify_separation(set, 2, grid.as_ptr(), &mut orbits, &mut collisions) },
        SepinvStatus::Ok
    );
    assert_eq!((orbits, collisions), (10, 0));

    let mut dropped = ptr::null_mut();
    assert_eq!(
        unsafe { sepinv_index_set_without(set, 1, 1, &mut dropped) },
        SepinvStatus::Ok
    );
    assert_eq!(
        unsafe {
            sepinv_verify_separation(dropped, 2, grid.as_ptr(), &mut orbits, &mut collisions)
        },
        SepinvStatus::Ok
    );
    assert_eq!((orbits, collisions), (10, 1));
    unsafe { sepinv_index_set_free(dropped) };

    let bad = CString::new("0,x").unwrap();
    assert_eq!(
        unsafe { sepinv_verify_separation(set, 2, bad.as_ptr(), &mut orbits, &mut collisions) },
        SepinvStatus::ParseError
    );
    unsafe { sepinv_index_set_free(set) };
}

#[test]
fn sizes_and_status_names() {
    let (mut m, mut s) = (0u64, 0u64);
    assert_eq!(
        unsafe { sepinv_sizes(100, &mut m, &mut s) },
        SepinvStatus::Ok
    );
    assert_eq!((m, s), (5150, 582));
    assert_eq!(
        unsafe { sepinv_sizes(0, &mut m, &mut s) },
        SepinvStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { sepinv_sizes(5, ptr::null_mut(), &mut s) },
        SepinvStatus::NullArgument
    );

    let name = sepinv_status_name(SepinvStatus::IndexNotInSet);
    assert_eq!(
        unsafe { CStr::from_ptr(name) }.to_str().unwrap(),
        "index not in set"
    );
}

#[test]
fn generated_header_covers_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sepinv.h"))
        .expect("header generated at build time");
    for needle in [
        "typedef struct SepinvIndexSet SepinvIndexSet;",
        "typedef struct SepinvPoint SepinvPoint;",
        "SepinvStatus_Ok = 0",
        "sepinv_point_parse",
        "sepinv_index_set_without",
        "sepinv_match",
        "sepinv_verify_separation",
        "sepinv_string_free",
    ] {
        assert!(header.contains(needle), "header is missing `{needle}`");
    }
}
