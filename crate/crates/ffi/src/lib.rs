//! C ABI over `modulislope`.
//!
//! Classes cross the boundary as opaque `MsClass` handles; strings returned
//! to the caller are owned by Rust and must be released with
//! `ms_string_free`. Every entry point returns an `MsStatus`; on failure the
//! message is available from `ms_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use modulislope::catalog::named_class;
use modulislope::curves::{intersect, CurveSpec};
use modulislope::format::{class_to_json, parse_class};
use modulislope::pushpull::{push_quadratic, push_quadratic_partial};
use modulislope::theorems::derive_b10_bound;
use modulislope::verify::verify_all;
use modulislope::{AnyClass, ClassView, Error};

/// Status code returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Indeterminate = 5,
    /// A check ran and failed; not an input error.
    CheckFailed = 6,
    Panic = 7,
}

/// Opaque divisor class handle.
pub struct MsClass {
    inner: AnyClass,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes replaced"));
}

fn status_of(err: &Error) -> MsStatus {
    match err {
        Error::Parse(_) | Error::MalformedRational(_) => MsStatus::Parse,
        Error::Indeterminate(_) | Error::UnknownCoefficient(_) | Error::PartialClass => {
            MsStatus::Indeterminate
        }
        _ => MsStatus::Domain,
    }
}

enum Failure {
    Status(MsStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            MsStatus::Ok
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_last_error(msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic");
            MsStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(
            MsStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    // SAFETY: caller passes a valid NUL-terminated string.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Failure::Status(MsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn class_ref<'a>(p: *const MsClass, what: &str) -> Result<&'a AnyClass, Failure> {
    if p.is_null() {
        return Err(Failure::Status(
            MsStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    // SAFETY: non-null handles come from this library and are live.
    Ok(unsafe { &(*p).inner })
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(
            MsStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    let c = CString::new(s).expect("library output has no NUL bytes");
    // SAFETY: `out` was checked non-null by the caller.
    unsafe { *out = c.into_raw() };
}

unsafe fn write_class(out: *mut *mut MsClass, c: AnyClass) {
    // SAFETY: `out` was checked non-null by the caller.
    unsafe { *out = Box::into_raw(Box::new(MsClass { inner: c })) };
}

/// Message for the last failing call on this thread; empty after success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn ms_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a class from the JSON class format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_class_from_json(
    json: *const c_char,
    out: *mut *mut MsClass,
) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let text = unsafe { read_str(json, "json")? };
        let c = parse_class(text)?;
        unsafe { write_class(out, c) };
        Ok(())
    })
}

/// Looks up a bundled class by keyword (`k3divisor`, `weierstrass:10`, ...).
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_class_from_name(
    name: *const c_char,
    out: *mut *mut MsClass,
) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let name = unsafe { read_str(name, "name")? };
        let c = named_class(name)?;
        unsafe { write_class(out, c) };
        Ok(())
    })
}

/// Releases a class handle. Null is ignored.
///
/// # Safety
/// `class` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ms_class_free(class: *mut MsClass) {
    if !class.is_null() {
        // SAFETY: pointer came from Box::into_raw in write_class.
        drop(unsafe { Box::from_raw(class) });
    }
}

/// Serializes a class to the JSON class format.
///
/// # Safety
/// `class` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_class_to_json(
    class: *const MsClass,
    out: *mut *mut c_char,
) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let c = unsafe { class_ref(class, "class")? };
        unsafe { write_string(out, class_to_json(c)) };
        Ok(())
    })
}

/// Genus of a class.
///
/// # Safety
/// `class` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_class_genus(class: *const MsClass, out: *mut u32) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let c = unsafe { class_ref(class, "class")? };
        unsafe { *out = c.genus() };
        Ok(())
    })
}

/// Slope as `"p/q"` or `"infinity"`.
///
/// # Safety
/// `class` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_class_slope(class: *const MsClass, out: *mut *mut c_char) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let c = unsafe { class_ref(class, "class")? };
        let s = c.slope()?;
        unsafe { write_string(out, s.to_string()) };
        Ok(())
    })
}

/// `π_*(X·Y)`. `x` must be a full class on M_g,1; `y` may be partial, in
/// which case the result is partial.
///
/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_push_quadratic(
    x: *const MsClass,
    y: *const MsClass,
    out: *mut *mut MsClass,
) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let x = unsafe { class_ref(x, "x")? };
        let y = unsafe { class_ref(y, "y")? };
        let x = x.as_pointed().ok_or_else(|| {
            Failure::Status(MsStatus::Domain, "x must be a full class on Mg1".into())
        })?;
        let result = match y {
            AnyClass::Pointed(yp) => AnyClass::Full(push_quadratic(x, yp)?),
            other => AnyClass::Partial(push_quadratic_partial(x, &other.to_partial())?),
        };
        unsafe { write_class(out, result) };
        Ok(())
    })
}

/// Intersection of a test curve (`lefschetz:<i>`, `glued:<i>:<g>`,
/// `pointed-k3`) with a class, as `"p/q"`.
///
/// # Safety
/// `curve` must be a valid NUL-terminated string, `class` a live handle and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_intersect(
    curve: *const c_char,
    class: *const MsClass,
    out: *mut *mut c_char,
) -> MsStatus {
    guard(|| {
        check_out(out)?;
        let spec = unsafe { read_str(curve, "curve")? };
        let c = unsafe { class_ref(class, "class")? };
        let curve = spec.parse::<CurveSpec>()?.build()?;
        let v = intersect(&curve, c)?;
        unsafe { write_string(out, v.to_string()) };
        Ok(())
    })
}

/// Constants of `b_10 >= alpha·b_0 - beta·a`, as `"p/q"` strings.
///
/// # Safety
/// `alpha` and `beta` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ms_bound_b10(alpha: *mut *mut c_char, beta: *mut *mut c_char) -> MsStatus {
    guard(|| {
        check_out(alpha)?;
        check_out(beta)?;
        let b = derive_b10_bound()?;
        unsafe {
            write_string(alpha, b.alpha.to_string());
            write_string(beta, b.beta.to_string());
        }
        Ok(())
    })
}

/// Runs every reproduction criterion and writes the JSON report. Returns
/// `CheckFailed` (with the report still written) when some criterion fails.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_verify_all(decimals: c_int, out: *mut *mut c_char) -> MsStatus {
    let mut passed = true;
    let status = guard(|| {
        check_out(out)?;
        if decimals < 0 {
            return Err(Failure::Status(
                MsStatus::Domain,
                "decimals must be nonnegative".into(),
            ));
        }
        let v = verify_all(decimals as usize);
        passed = v.all_passed();
        let json = serde_json::json!({"all_passed": passed, "criteria": v.criteria, "discrepancies": v.discrepancies}).to_string();
        unsafe { write_string(out, json) };
        Ok(())
    });
    if status == MsStatus::Ok && !passed {
        set_last_error("some criteria failed");
        return MsStatus::CheckFailed;
    }
    status
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ms_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: pointer came from CString::into_raw in write_string.
        drop(unsafe { CString::from_raw(s) });
    }
}
