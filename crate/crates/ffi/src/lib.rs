//! C ABI over `multilift`.
//!
//! Every function returns an [`MlStatus`]. Results come back through out
//! pointers. Strings returned by the library are NUL-terminated decimal or
//! JSON text owned by the caller, released with [`ml_string_free`]. On a
//! non-OK status the thread's last error message is available from
//! [`ml_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use multilift::bounds::{bound_table, lower_bound_aq, render_csv, render_markdown, DRule};
use multilift::construct::{size_closed_form_kd, size_formula, CodeParams, MultiComponentCode};
use multilift::export::{check_export, CodeExport};
use multilift::mrd::{singleton_bound, MrdParams};
use multilift::Error;

/// Status codes. The first four match the command line exit statuses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlStatus {
    Ok = 0,
    VerifyFailed = 1,
    InvalidParams = 2,
    CapExceeded = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Opaque handle to a built multi-component code.
pub struct MlCode {
    inner: MultiComponentCode,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MlVerifyReport {
    /// Distinct subspaces counted after re-canonicalisation equal the size.
    pub cardinality_ok: bool,
    pub min_distance: usize,
    pub components_disjoint: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MlExportCheck {
    pub cardinality_ok: bool,
    pub min_distance_ok: bool,
    pub components_ok: bool,
    pub distinct: usize,
    pub duplicates: usize,
    pub malformed: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(e: Error) -> MlStatus {
    let status = match e {
        Error::CapExceeded { .. } => MlStatus::CapExceeded,
        _ => MlStatus::InvalidParams,
    };
    set_error(e.to_string());
    status
}

fn null(name: &str) -> MlStatus {
    set_error(format!("{name} is null"));
    MlStatus::NullPointer
}

/// Runs `f`, turning panics into [`MlStatus::Internal`].
fn guard(f: impl FnOnce() -> MlStatus) -> MlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        MlStatus::Internal
    })
}

fn write_string(out: *mut *mut c_char, s: String) -> MlStatus {
    if out.is_null() {
        return null("out");
    }
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: checked non-null; the caller provides a writable slot.
            unsafe { *out = c.into_raw() };
            MlStatus::Ok
        }
        Err(_) => {
            set_error("string contains NUL");
            MlStatus::Internal
        }
    }
}

fn params(q: u64, n: usize, k: usize, d: usize) -> Result<CodeParams, MlStatus> {
    CodeParams::new(q, n, k, d).map_err(fail)
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next library call on the same thread.
#[no_mangle]
pub extern "C" fn ml_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ml_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact code size N as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ml_size_formula(
    q: u64,
    n: usize,
    k: usize,
    d: usize,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(
        || match params(q, n, k, d).and_then(|p| size_formula(&p).map_err(fail)) {
            Ok(v) => write_string(out, v.to_string()),
            Err(s) => s,
        },
    )
}

/// Size for `d = k` from the closed form.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ml_size_closed_form(
    q: u64,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(|| match size_closed_form_kd(q, n, k) {
        Ok(v) => write_string(out, v.to_string()),
        Err(e) => fail(e),
    })
}

/// Lower bound on A_q(n, d, k) as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ml_lower_bound(
    q: u64,
    n: usize,
    k: usize,
    d: usize,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(
        || match params(q, n, k, d).and_then(|p| lower_bound_aq(&p).map_err(fail)) {
            Ok(v) => write_string(out, v.to_string()),
            Err(s) => s,
        },
    )
}

/// Largest size of a `rows x cols` rank-metric code with minimum distance `d`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ml_singleton_bound(
    q: u64,
    rows: usize,
    cols: usize,
    d: usize,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(|| {
        if multilift::galois::prime_power(q).is_none() {
            return fail(Error::NotPrimePower(q));
        }
        if let Err(e) = MrdParams::new(q, rows, cols, d).validate() {
            return fail(e);
        }
        write_string(out, singleton_bound(q, rows, cols, d).to_string())
    })
}

/// Builds a code. Only the component structure is computed; codewords are
/// produced on demand.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ml_code_build(
    q: u64,
    n: usize,
    k: usize,
    d: usize,
    out: *mut *mut MlCode,
) -> MlStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        match params(q, n, k, d).and_then(|p| MultiComponentCode::build(p).map_err(fail)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(MlCode { inner }));
                MlStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// # Safety
/// `code` must be null or a handle from [`ml_code_build`], freed once.
#[no_mangle]
pub unsafe extern "C" fn ml_code_free(code: *mut MlCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

unsafe fn code_ref<'a>(code: *const MlCode) -> Result<&'a MultiComponentCode, MlStatus> {
    code.as_ref().map(|c| &c.inner).ok_or_else(|| null("code"))
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_code_size(code: *const MlCode, out: *mut *mut c_char) -> MlStatus {
    guard(|| match code_ref(code) {
        Ok(c) => write_string(out, c.size().to_string()),
        Err(s) => s,
    })
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_code_component_count(code: *const MlCode, out: *mut usize) -> MlStatus {
    guard(|| {
        let c = match code_ref(code) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if out.is_null() {
            return null("out");
        }
        *out = c.components().len();
        MlStatus::Ok
    })
}

/// All codewords as reduced `k x n` bases, flattened row-major one after the
/// other: `*out_count * k * n` digits in total, each a GF(q) element index.
/// Release with [`ml_digits_free`].
///
/// # Safety
/// `code` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ml_code_codewords(
    code: *const MlCode,
    cap: u64,
    out_digits: *mut *mut u32,
    out_len: *mut usize,
    out_count: *mut usize,
) -> MlStatus {
    guard(|| {
        let c = match code_ref(code) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if out_digits.is_null() || out_len.is_null() || out_count.is_null() {
            return null("out");
        }
        let words = match c.codewords(cap) {
            Ok(w) => w,
            Err(e) => return fail(e),
        };
        let mut digits = Vec::new();
        let mut count = 0;
        for s in words {
            digits.extend(s.basis().to_rows().into_iter().flatten());
            count += 1;
        }
        let boxed = digits.into_boxed_slice();
        *out_len = boxed.len();
        *out_count = count;
        *out_digits = Box::into_raw(boxed) as *mut u32;
        MlStatus::Ok
    })
}

/// # Safety
/// `digits` and `len` must come from one [`ml_code_codewords`] call.
#[no_mangle]
pub unsafe extern "C" fn ml_digits_free(digits: *mut u32, len: usize) {
    if !digits.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(digits, len)));
    }
}

/// Enumerates the code and checks size and minimum distance. Returns
/// [`MlStatus::VerifyFailed`] if any check fails; the report is filled in
/// either way.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_code_verify(
    code: *const MlCode,
    cap: u64,
    out: *mut MlVerifyReport,
) -> MlStatus {
    guard(|| {
        let c = match code_ref(code) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if out.is_null() {
            return null("out");
        }
        let r = match c.verify(cap) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        let report = MlVerifyReport {
            cardinality_ok: &r.cardinality == c.size(),
            min_distance: r.min_distance,
            components_disjoint: r.components_disjoint,
        };
        *out = report;
        if report.cardinality_ok
            && report.min_distance == c.params().d
            && report.components_disjoint
        {
            MlStatus::Ok
        } else {
            set_error("verification failed");
            MlStatus::VerifyFailed
        }
    })
}

/// JSON export. With `include_codewords`, fails with
/// [`MlStatus::CapExceeded`] above `cap` codewords.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_code_export_json(
    code: *const MlCode,
    include_codewords: bool,
    cap: u64,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(|| {
        let c = match code_ref(code) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match CodeExport::from_code(c, include_codewords.then_some(cap)) {
            Ok(e) => write_string(out, e.to_json()),
            Err(e) => fail(e),
        }
    })
}

/// Re-checks a JSON export against its own header.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_verify_json(
    json: *const c_char,
    cap: u64,
    out: *mut MlExportCheck,
) -> MlStatus {
    guard(|| {
        if json.is_null() {
            return null("json");
        }
        if out.is_null() {
            return null("out");
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            return fail(Error::Format("input is not UTF-8".into()));
        };
        let check = match CodeExport::from_json(text).and_then(|e| check_export(&e, cap)) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        *out = MlExportCheck {
            cardinality_ok: check.cardinality_ok,
            min_distance_ok: check.min_distance_ok,
            components_ok: check.components_ok,
            distinct: check.distinct,
            duplicates: check.duplicates,
            malformed: check.malformed,
        };
        if check.passed() {
            MlStatus::Ok
        } else {
            set_error("verification failed");
            MlStatus::VerifyFailed
        }
    })
}

/// Bound table over `q_list`, `2 <= n <= n_max`, `1 <= k <= k_max`, as CSV
/// (`markdown` false) or a markdown table. `d_equal_k` restricts to `d = k`.
///
/// # Safety
/// `q_list` must point to `q_len` values (or be null with `q_len` 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ml_bound_table(
    q_list: *const u64,
    q_len: usize,
    n_max: usize,
    k_max: usize,
    d_equal_k: bool,
    markdown: bool,
    out: *mut *mut c_char,
) -> MlStatus {
    guard(|| {
        let qs: &[u64] = if q_len == 0 {
            &[]
        } else if q_list.is_null() {
            return null("q_list");
        } else {
            std::slice::from_raw_parts(q_list, q_len)
        };
        if let Some(&bad) = qs
            .iter()
            .find(|&&q| multilift::galois::prime_power(q).is_none())
        {
            return fail(Error::NotPrimePower(bad));
        }
        let rule = if d_equal_k { DRule::EqualK } else { DRule::All };
        let rows = bound_table(qs, 2..=n_max, 1..=k_max, rule);
        let text = if markdown {
            render_markdown(&rows)
        } else {
            render_csv(&rows)
        };
        write_string(out, text)
    })
}
