//! C ABI over `cobordism-core`.
//!
//! Every fallible entry point returns a [`CobStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`cob_last_error`] on the same thread. Handles are opaque and must be
//! released with the matching `*_free` function; strings returned by the
//! library are released with [`cob_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cobordism_core::arithmetic::{self, binom_parity, lemma_binom_solve};
use cobordism_core::cli::{self, Params, Profile, Status, VerificationReport};
use cobordism_core::fiber;
use cobordism_core::generators::s_n_pe;
use cobordism_core::F2Poly;

/// Result of a library call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CobStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownCheck = 3,
    InvalidArgument = 4,
    Panic = 5,
}

/// Outcome recorded in a report.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CobReportStatus {
    Pass = 0,
    Fail = 1,
    Error = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CobProfile {
    Full = 0,
    Quick = 1,
}

/// Suite parameters; a negative value means "use the profile default".
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CobParams {
    pub profile: CobProfile,
    pub max_degree: i64,
    pub n: i64,
    pub max_n: i64,
    pub t_max: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CobBinomSolution {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub i: u32,
    pub j: u32,
}

/// A verification report.
pub struct CobReport {
    inner: VerificationReport,
}

/// A polynomial over F2.
pub struct CobPolynomial {
    inner: F2Poly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: CobStatus, msg: impl Into<String>) -> CobStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `CobStatus::Panic`.
fn guard(f: impl FnOnce() -> CobStatus) -> CobStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_owned());
            fail(CobStatus::Panic, msg)
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

fn optional(v: i64) -> Option<u64> {
    u64::try_from(v).ok()
}

/// The message of the last failed call on this thread, or NULL. Valid until
/// the next library call on this thread; do not free.
#[no_mangle]
pub extern "C" fn cob_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cob_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cob_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs the suite `check_id` (or `all`). `params` may be NULL for the full
/// profile defaults.
///
/// # Safety
/// `check_id` must be a NUL-terminated string, `params` NULL or valid, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cob_run_check(
    check_id: *const c_char,
    params: *const CobParams,
    out: *mut *mut CobReport,
) -> CobStatus {
    guard(|| {
        if check_id.is_null() || out.is_null() {
            return fail(CobStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let Ok(id) = CStr::from_ptr(check_id).to_str() else {
            return fail(CobStatus::InvalidUtf8, "check id is not UTF-8");
        };
        let params = match params.as_ref() {
            None => Params::default(),
            Some(p) => Params {
                profile: match p.profile {
                    CobProfile::Full => Profile::Full,
                    CobProfile::Quick => Profile::Quick,
                },
                max_degree: optional(p.max_degree),
                n: optional(p.n),
                max_n: optional(p.max_n),
                t_max: optional(p.t_max),
            },
        };
        match cli::run(id, &params) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(CobReport { inner }));
                CobStatus::Ok
            }
            Err(e) => fail(CobStatus::UnknownCheck, e.to_string()),
        }
    })
}

/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cob_report_status(report: *const CobReport) -> CobReportStatus {
    match report.as_ref().map(|r| r.inner.status) {
        Some(Status::Pass) => CobReportStatus::Pass,
        Some(Status::Fail) => CobReportStatus::Fail,
        Some(Status::Error) | None => CobReportStatus::Error,
    }
}

/// Number of case records in the report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cob_report_case_count(report: *const CobReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.details.len())
}

/// The report as JSON; free with [`cob_string_free`]. NULL for a NULL handle.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cob_report_json(report: *const CobReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => into_c_string(r.inner.to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `report` must be NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cob_report_free(report: *mut CobReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

fn polynomial_result(out: *mut *mut CobPolynomial, r: Result<F2Poly, String>) -> CobStatus {
    if out.is_null() {
        return fail(CobStatus::NullPointer, "null argument");
    }
    match r {
        Ok(inner) => {
            // SAFETY: checked non-null; the caller guarantees validity.
            unsafe { *out = Box::into_raw(Box::new(CobPolynomial { inner })) };
            CobStatus::Ok
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            fail(CobStatus::InvalidArgument, e)
        }
    }
}

/// `π_!(ṽ^*(p_n))` modulo `y6` for the primitive `p_n` of degree `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cob_transfer_sn(n: u32, out: *mut *mut CobPolynomial) -> CobStatus {
    guard(|| polynomial_result(out, fiber::transfer_sn(n as usize).map_err(|e| e.to_string())))
}

/// `z_n` in `Z/2[y2, y3]`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cob_z_value(n: u32, out: *mut *mut CobPolynomial) -> CobStatus {
    guard(|| {
        let n = n as usize;
        let z = arithmetic::z_sequence(n.max(3))
            .map_err(|e| e.to_string())
            .and_then(|s| s.get(n).cloned().ok_or_else(|| format!("z_{n} is undefined")));
        polynomial_result(out, z)
    })
}

/// The polynomial as text, graded-lex; free with [`cob_string_free`].
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cob_polynomial_to_string(p: *const CobPolynomial) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(p.inner.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cob_polynomial_term_count(p: *const CobPolynomial) -> usize {
    p.as_ref().map_or(0, |p| p.inner.len())
}

/// # Safety
/// `p` must be NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cob_polynomial_free(p: *mut CobPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `S_n(PE_r)` as a decimal string; free with [`cob_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cob_s_n_pe(n: u64, r: u64, out: *mut *mut c_char) -> CobStatus {
    guard(|| {
        if out.is_null() {
            return fail(CobStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        match s_n_pe(n, r) {
            Ok(v) => {
                *out = into_c_string(v.to_string());
                CobStatus::Ok
            }
            Err(e) => fail(CobStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// `C(n, k) mod 2`.
#[no_mangle]
pub extern "C" fn cob_binom_parity(n: u64, k: u64) -> u8 {
    binom_parity(n, k)
}

/// The constructive solution for odd `n >= 5` not of the form `2^k - 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cob_lemma_binom(n: u64, out: *mut CobBinomSolution) -> CobStatus {
    guard(|| {
        if out.is_null() {
            return fail(CobStatus::NullPointer, "null argument");
        }
        match lemma_binom_solve(n) {
            Ok(s) => {
                *out = CobBinomSolution { n: s.n, a: s.a, b: s.b, i: s.i, j: s.j };
                CobStatus::Ok
            }
            Err(e) => fail(CobStatus::InvalidArgument, e.to_string()),
        }
    })
}
