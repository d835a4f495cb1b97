use std::ffi::{c_char, CStr, CString};
use std::ptr;

use modulislope_ffi::*;

fn owned(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ms_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ms_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn class_from_name(name: &str) -> *mut MsClass {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { ms_class_from_name(name.as_ptr(), &mut out) },
        MsStatus::Ok
    );
    out
}

#[test]
fn json_round_trip_and_slope() {
    let json = CString::new(r#"{"space":"Mg","genus":5,"coeffs":{"lambda":"8","delta0":"-1","delta1":"-4","delta2":"-6"}}"#).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ms_class_from_json(json.as_ptr(), &mut c) },
        MsStatus::Ok
    );
    let mut g = 0u32;
    assert_eq!(unsafe { ms_class_genus(c, &mut g) }, MsStatus::Ok);
    assert_eq!(g, 5);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ms_class_slope(c, &mut s) }, MsStatus::Ok);
    assert_eq!(owned(s), "8");
    assert_eq!(unsafe { ms_class_to_json(c, &mut s) }, MsStatus::Ok);
    assert_eq!(
        owned(s),
        r#"{"space":"Mg","genus":5,"coeffs":{"lambda":"8","delta0":"-1","delta1":"-4","delta2":"-6"}}"#
    );
    unsafe { ms_class_free(c) };
}

#[test]
fn push_and_intersect() {
    let w = class_from_name("weierstrass:4");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ms_push_quadratic(w, w, &mut p) }, MsStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ms_class_to_json(p, &mut s) }, MsStatus::Ok);
    assert!(owned(s).contains(r#""lambda":"1080","delta0":"-100","delta1":"-345","delta2":"-289""#));

    let k3 = class_from_name("k3divisor");
    let curve = CString::new("lefschetz:10").unwrap();
    assert_eq!(
        unsafe { ms_intersect(curve.as_ptr(), k3, &mut s) },
        MsStatus::Ok
    );
    assert_eq!(owned(s), "-1");

    let glued = CString::new("glued:3:10").unwrap();
    assert_eq!(
        unsafe { ms_intersect(glued.as_ptr(), k3, &mut s) },
        MsStatus::Indeterminate
    );
    assert!(!last_error().is_empty());
    unsafe {
        ms_class_free(p);
        ms_class_free(w);
        ms_class_free(k3);
    }
}

#[test]
fn bound_and_report() {
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { ms_bound_b10(&mut a, &mut b) }, MsStatus::Ok);
    assert_eq!(
        (owned(a), owned(b)),
        ("45045/631".to_string(), "6435/631".to_string())
    );

    let mut out = ptr::null_mut();
    let status = unsafe { ms_verify_all(4, &mut out) };
    let v: serde_json::Value = serde_json::from_str(&owned(out)).unwrap();
    let all = v["all_passed"].as_bool().unwrap();
    assert_eq!(status == MsStatus::Ok, all);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 11);
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 2);
}

#[test]
fn error_codes() {
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ms_class_from_json(ptr::null(), &mut c) },
        MsStatus::NullPointer
    );
    let bad = CString::new("{").unwrap();
    assert_eq!(
        unsafe { ms_class_from_json(bad.as_ptr(), &mut c) },
        MsStatus::Parse
    );
    assert!(last_error().contains("parse"));
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { ms_class_from_name(invalid.as_ptr() as *const c_char, &mut c) },
        MsStatus::InvalidUtf8
    );
    let name = CString::new("weierstrass:1").unwrap();
    assert_eq!(
        unsafe { ms_class_from_name(name.as_ptr(), &mut c) },
        MsStatus::Domain
    );
    assert!(c.is_null());
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { ms_class_slope(ptr::null(), &mut s) },
        MsStatus::NullPointer
    );
    unsafe {
        ms_class_free(ptr::null_mut());
        ms_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/modulislope.h"
    ))
    .unwrap();
    for f in [
        "ms_last_error_message",
        "ms_class_from_json",
        "ms_class_from_name",
        "ms_class_free",
        "ms_class_to_json",
        "ms_class_genus",
        "ms_class_slope",
        "ms_push_quadratic",
        "ms_intersect",
        "ms_bound_b10",
        "ms_verify_all",
        "ms_string_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct MsClass MsClass;"));
    assert!(header.contains("MS_STATUS_OK = 0"));
}
