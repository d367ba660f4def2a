//! C ABI for the `cwsurgery` library.
//!
//! Conventions:
//!
//! * Every fallible call returns a [`CwStatus`] and writes its result
//!   through an out-pointer, which is set to null/zero on failure.
//! * Exact rationals travel either as opaque `CwRational` handles (freed
//!   with [`cw_rational_free`]) or as `"num/den"` strings.
//! * Structured results (obstruction reports, scans, certificates, the
//!   cosmetic reproduction) are returned as JSON strings with the same
//!   shape the CLI prints; free them with [`cw_string_free`].
//! * A human-readable message for the most recent failure on the current
//!   thread is available via [`cw_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cwsurgery::{
    certify_complement, dedekind_sum, dedekind_sum_naive, dedekind_symbol, lambda_knot,
    lambda_link_breakdown, obstruct_slope, reproduce_cor_ten, theorem_main_scan, torus_knot_a2,
    Error, FramedKnotSurgery, ManifoldClass, Rational, Slope, TwoComponentLinkData,
};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed or out-of-domain input (parse failures, zero
    /// denominators, non-coprime pairs, inconsistent instances).
    InvalidInput = 3,
    /// The requested value is undefined for this input (for example the
    /// surgered manifold is not a rational homology sphere).
    Undefined = 4,
    /// Input violates the hypotheses of the requested certificate/scan.
    HypothesisViolation = 5,
    /// Internal serialization failure.
    InternalError = 6,
}

/// Manifold classes accepted by [`cw_certify_json`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwManifoldClass {
    /// Reducible L-space.
    Reducible = 0,
    /// Lens space.
    Lens = 1,
    /// Finite fundamental group.
    FinitePi1 = 2,
    /// Small Seifert fibered L-space.
    SmallSfsLSpace = 3,
}

impl From<CwManifoldClass> for ManifoldClass {
    fn from(c: CwManifoldClass) -> Self {
        match c {
            CwManifoldClass::Reducible => ManifoldClass::Reducible,
            CwManifoldClass::Lens => ManifoldClass::Lens,
            CwManifoldClass::FinitePi1 => ManifoldClass::FinitePi1,
            CwManifoldClass::SmallSfsLSpace => ManifoldClass::SmallSFSLSpace,
        }
    }
}

/// Opaque exact-rational handle.
pub struct CwRational(Rational);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn clear_error() {
    LAST_ERROR.with(|e| e.borrow_mut().take());
}

fn fail(status: CwStatus, message: impl Into<String>) -> CwStatus {
    let msg = CString::new(message.into()).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn fail_error(e: &Error) -> CwStatus {
    let status = match e {
        Error::DivisionByZero | Error::NotRationalHomologySphere => CwStatus::Undefined,
        Error::HypothesisViolation(_) => CwStatus::HypothesisViolation,
        _ => CwStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// # Safety
/// `out` must be valid for writing one pointer.
unsafe fn set_string(out: *mut *mut c_char, s: String) -> CwStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            clear_error();
            CwStatus::Ok
        }
        Err(_) => fail(
            CwStatus::InternalError,
            "result contained an interior NUL byte",
        ),
    }
}

/// # Safety
/// `out` must be valid for writing one pointer.
unsafe fn set_rational(out: *mut *mut CwRational, r: Rational) -> CwStatus {
    *out = Box::into_raw(Box::new(CwRational(r)));
    clear_error();
    CwStatus::Ok
}

/// # Safety
/// `text` must be a valid NUL-terminated string pointer.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, CwStatus> {
    if text.is_null() {
        return Err(fail(CwStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(CwStatus::InvalidUtf8, "string argument is not valid UTF-8"))
}

fn json_of<T: serde::Serialize>(value: &T) -> Result<String, CwStatus> {
    serde_json::to_string(value).map_err(|e| {
        fail(
            CwStatus::InternalError,
            format!("serialization failed: {e}"),
        )
    })
}

/// Returns the message of the most recent failure on this thread, or null
/// when the last call succeeded. The caller frees the string with
/// [`cw_string_free`].
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_last_error_message(out: *mut *mut c_char) -> CwStatus {
    if out.is_null() {
        return CwStatus::NullPointer;
    }
    *out = LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    });
    CwStatus::Ok
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a pointer previously returned by this library (or null) and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an exact rational from `"num/den"` or `"num"` text.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_parse(
    text: *const c_char,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = ptr::null_mut();
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text.parse::<Rational>() {
        Ok(r) => set_rational(out, r),
        Err(e) => fail_error(&e),
    }
}

/// Formats an exact rational as `"num/den"`.
///
/// # Safety
/// `r` must be a live handle from this library; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_format(
    r: *const CwRational,
    out: *mut *mut c_char,
) -> CwStatus {
    if r.is_null() || out.is_null() {
        return fail(CwStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    set_string(out, (*r).0.to_string())
}

/// Formats a decimal approximation with the given number of digits,
/// rounded to nearest.
///
/// # Safety
/// `r` must be a live handle from this library; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_approx(
    r: *const CwRational,
    digits: u32,
    out: *mut *mut c_char,
) -> CwStatus {
    if r.is_null() || out.is_null() {
        return fail(CwStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    set_string(out, (*r).0.to_decimal(digits))
}

/// Frees a rational handle. Null is a no-op.
///
/// # Safety
/// `r` must be a handle previously returned by this library (or null) and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cw_rational_free(r: *mut CwRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Dedekind sum `s(p, q)` by reciprocity descent.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_dedekind_sum(p: i64, q: i64, out: *mut *mut CwRational) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = ptr::null_mut();
    match dedekind_sum(p, q) {
        Ok(r) => set_rational(out, r),
        Err(e) => fail_error(&e),
    }
}

/// Dedekind sum `s(p, q)` by the defining summation (cross-check path).
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_dedekind_sum_naive(
    p: i64,
    q: i64,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = ptr::null_mut();
    match dedekind_sum_naive(p, q) {
        Ok(r) => set_rational(out, r),
        Err(e) => fail_error(&e),
    }
}

/// Dedekind symbol `S(P/Q) = 12·s(P, Q)` of a surgery slope.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_dedekind_symbol(
    slope_p: i64,
    slope_q: i64,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = ptr::null_mut();
    match Slope::new(slope_p, slope_q) {
        Ok(slope) => set_rational(out, dedekind_symbol(&slope)),
        Err(e) => fail_error(&e),
    }
}

/// Casson-Walker invariant of `P/Q`-surgery on a knot with second Conway
/// coefficient `a2`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_lambda_knot(
    a2: i64,
    slope_p: i64,
    slope_q: i64,
    out: *mut *mut CwRational,
) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = ptr::null_mut();
    let surgery = match Slope::new(slope_p, slope_q).and_then(|s| FramedKnotSurgery::new(a2, s)) {
        Ok(s) => s,
        Err(e) => return fail_error(&e),
    };
    set_rational(out, lambda_knot(&surgery))
}

/// Casson-Walker invariant of surgery on a two-component link. `json_in`
/// describes the link (fields `a2x`, `a2y`, `a3`, `lk`, `fx`, `fy`);
/// `out_json` receives the full term-by-term breakdown including
/// `lambda`.
///
/// # Safety
/// `json_in` must be a valid NUL-terminated string; `out_json` must be
/// valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_lambda_link_json(
    json_in: *const c_char,
    out_json: *mut *mut c_char,
) -> CwStatus {
    if out_json.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out_json = ptr::null_mut();
    let text = match read_str(json_in) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let data: TwoComponentLinkData = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(e) => return fail(CwStatus::InvalidInput, format!("parse error: {e}")),
    };
    let breakdown = match lambda_link_breakdown(&data) {
        Ok(b) => b,
        Err(e) => return fail_error(&e),
    };
    match json_of(&breakdown) {
        Ok(s) => set_string(out_json, s),
        Err(status) => status,
    }
}

/// Second Conway coefficient of the torus knot `T(r, s)`.
///
/// # Safety
/// `out` must be valid for writing one i64.
#[no_mangle]
pub unsafe extern "C" fn cw_torus_knot_a2(r: i64, s: i64, out: *mut i64) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out = 0;
    match torus_knot_a2(r, s) {
        Ok(v) => {
            *out = v;
            clear_error();
            CwStatus::Ok
        }
        Err(e) => fail_error(&e),
    }
}

/// Runs the obstruction ladder on one slope; `out_json` receives the full
/// report (verdict, fired rules, candidates).
///
/// # Safety
/// `out_json` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_obstruct_slope_json(
    p: i64,
    q: i64,
    n: i64,
    l: i64,
    out_json: *mut *mut c_char,
) -> CwStatus {
    if out_json.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out_json = ptr::null_mut();
    let report = match obstruct_slope(p, q, n, l) {
        Ok(r) => r,
        Err(e) => return fail_error(&e),
    };
    match json_of(&report) {
        Ok(s) => set_string(out_json, s),
        Err(status) => status,
    }
}

/// Scans every distance-1 slope residue for `p/q`-surgery; `out_json`
/// receives the scan report.
///
/// # Safety
/// `out_json` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_theorem_scan_json(
    p: i64,
    q: i64,
    out_json: *mut *mut c_char,
) -> CwStatus {
    if out_json.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out_json = ptr::null_mut();
    let report = match theorem_main_scan(p, q) {
        Ok(r) => r,
        Err(e) => return fail_error(&e),
    };
    match json_of(&report) {
        Ok(s) => set_string(out_json, s),
        Err(status) => status,
    }
}

/// Runs the knot-complement certificate engine; `out_json` receives the
/// certificate (issued flag, per-case outcomes).
///
/// # Safety
/// `out_json` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_certify_json(
    p: i64,
    q: i64,
    class: CwManifoldClass,
    out_json: *mut *mut c_char,
) -> CwStatus {
    if out_json.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out_json = ptr::null_mut();
    let cert = match certify_complement(p, q, class.into()) {
        Ok(c) => c,
        Err(e) => return fail_error(&e),
    };
    match json_of(&cert) {
        Ok(s) => set_string(out_json, s),
        Err(status) => status,
    }
}

/// Runs the bundled ten-knot cosmetic-crossing reproduction; `out_json`
/// receives the partition and per-knot reports.
///
/// # Safety
/// `out_json` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_cosmetic_reproduce_json(out_json: *mut *mut c_char) -> CwStatus {
    if out_json.is_null() {
        return fail(CwStatus::NullPointer, "out pointer is null");
    }
    *out_json = ptr::null_mut();
    let report = match reproduce_cor_ten() {
        Ok(r) => r,
        Err(e) => return fail_error(&e),
    };
    match json_of(&report) {
        Ok(s) => set_string(out_json, s),
        Err(status) => status,
    }
}
