//! C ABI over `shiftaut`.
//!
//! Tables are opaque handles created by [`shiftaut_table_new`] and released by
//! [`shiftaut_table_free`]. Every fallible call returns a [`ShiftautStatus`];
//! on failure [`shiftaut_last_error`] describes what went wrong. Strings
//! handed out by the library must be released with [`shiftaut_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use shiftaut::aut_search::aut_group_mod_shift;
use shiftaut::complexity::profile;
use shiftaut::models::PeriodicShift;
use shiftaut::periodic_aut::{classify, full_group_intersection, BRUTE_FORCE_POINTS};
use shiftaut::spec_file::parse_spec;
use shiftaut::{Error, LanguageTable};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftautStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidSpec = 3,
    DepthExceeded = 4,
    WordNotInLanguage = 5,
    BudgetExceeded = 6,
    InvalidArgument = 7,
    Internal = 8,
}

/// A language table.
pub struct ShiftautTable {
    table: LanguageTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ShiftautStatus {
    match e {
        Error::InvalidAlphabet(_)
        | Error::UnknownSymbol(_)
        | Error::InvalidSpec { .. }
        | Error::NonPrimitiveSubstitution
        | Error::NonPrimitiveSeed(_)
        | Error::DuplicateOrbit(..)
        | Error::AlphabetCollision(_)
        | Error::UnknownBuiltin(_) => ShiftautStatus::InvalidSpec,
        Error::DepthExceeded { .. } => ShiftautStatus::DepthExceeded,
        Error::WordNotInLanguage(_) => ShiftautStatus::WordNotInLanguage,
        Error::SearchBudgetExceeded { .. } | Error::BudgetExceeded { .. } => ShiftautStatus::BudgetExceeded,
        Error::BadParams(_) | Error::WindowNotInDomain(_) => ShiftautStatus::InvalidArgument,
        _ => ShiftautStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (ShiftautStatus, String)>) -> ShiftautStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ShiftautStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside shiftaut".into());
            ShiftautStatus::Internal
        }
    }
}

fn lib<T>(r: shiftaut::Result<T>) -> Result<T, (ShiftautStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ShiftautStatus, String) {
    (ShiftautStatus::NullArgument, "null argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (ShiftautStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| (ShiftautStatus::InvalidUtf8, e.to_string()))
}

unsafe fn table<'a>(t: *const ShiftautTable) -> Result<&'a LanguageTable, (ShiftautStatus, String)> {
    t.as_ref().map(|t| &t.table).ok_or_else(null)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (ShiftautStatus, String)> {
    let c = CString::new(s).map_err(|e| (ShiftautStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn shiftaut_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds the language table of a JSON shift spec up to word length `max_n`.
///
/// # Safety
/// `spec_json` must be a NUL-terminated string and `out` a valid pointer to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_new(
    spec_json: *const c_char,
    max_n: usize,
    out: *mut *mut ShiftautTable,
) -> ShiftautStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let spec = lib(parse_spec(text(spec_json)?))?;
        let table = lib(spec.generate_language(max_n))?;
        *out = Box::into_raw(Box::new(ShiftautTable { table }));
        Ok(())
    })
}

/// Releases a table. NULL is ignored.
///
/// # Safety
/// `t` must come from [`shiftaut_table_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_free(t: *mut ShiftautTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Largest word length stored in the table, or 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_max_n(t: *const ShiftautTable) -> usize {
    t.as_ref().map_or(0, |t| t.table.max_n())
}

/// Writes `P(n)`, the number of words of length `n`.
///
/// # Safety
/// `t` must be a live table handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_complexity(
    t: *const ShiftautTable,
    n: usize,
    out: *mut usize,
) -> ShiftautStatus {
    guard(|| {
        let table = table(t)?;
        if out.is_null() {
            return Err(null());
        }
        if n > table.max_n() {
            return lib(Err(Error::DepthExceeded { needed: n, max_n: table.max_n() }));
        }
        *out = table.complexity(n);
        Ok(())
    })
}

/// Writes whether `word` (in the spec's token syntax) is in the language.
///
/// # Safety
/// `t` must be a live table handle, `word` NUL-terminated, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_contains(
    t: *const ShiftautTable,
    word: *const c_char,
    out: *mut bool,
) -> ShiftautStatus {
    guard(|| {
        let table = table(t)?;
        if out.is_null() {
            return Err(null());
        }
        let w = lib(table.alphabet().parse_word(text(word)?))?;
        *out = lib(table.contains(&w))?;
        Ok(())
    })
}

/// The table in the text cache format.
///
/// # Safety
/// `t` must be a live table handle and `out` valid for writing. The string
/// written to `out` must be released with [`shiftaut_string_free`].
#[no_mangle]
pub unsafe extern "C" fn shiftaut_table_cache_string(t: *const ShiftautTable, out: *mut *mut c_char) -> ShiftautStatus {
    guard(|| {
        let table = table(t)?;
        if out.is_null() {
            return Err(null());
        }
        put_string(out, table.to_cache_string())
    })
}

/// Complexity profile as JSON: `values`, `differences`, `B`, `k_linear`, `max_n`.
///
/// # Safety
/// As for [`shiftaut_table_cache_string`].
#[no_mangle]
pub unsafe extern "C" fn shiftaut_profile_json(t: *const ShiftautTable, out: *mut *mut c_char) -> ShiftautStatus {
    guard(|| {
        let table = table(t)?;
        if out.is_null() {
            return Err(null());
        }
        let v = serde_json::to_string(&profile(table)).map_err(|e| (ShiftautStatus::Internal, e.to_string()))?;
        put_string(out, v)
    })
}

/// Automorphism search report as JSON. `budget` 0 selects the default.
///
/// # Safety
/// As for [`shiftaut_table_cache_string`].
#[no_mangle]
pub unsafe extern "C" fn shiftaut_aut_report_json(
    t: *const ShiftautTable,
    range: usize,
    inv_range: usize,
    horizon: usize,
    budget: u64,
    out: *mut *mut c_char,
) -> ShiftautStatus {
    guard(|| {
        let table = table(t)?;
        if out.is_null() {
            return Err(null());
        }
        let budget = if budget == 0 { shiftaut::aut_search::DEFAULT_BUDGET } else { budget };
        let report = lib(aut_group_mod_shift(table, range, inv_range, horizon, budget))?;
        put_string(out, report.to_json().to_string())
    })
}

/// Group structure of a periodic spec as JSON: `factors`, `order`, and
/// `full_group` when the shift has at most 12 points.
///
/// # Safety
/// `spec_json` must be NUL-terminated and `out` valid for writing. The string
/// written to `out` must be released with [`shiftaut_string_free`].
#[no_mangle]
pub unsafe extern "C" fn shiftaut_classify_json(spec_json: *const c_char, out: *mut *mut c_char) -> ShiftautStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let spec = lib(parse_spec(text(spec_json)?))?;
        let ps = lib(PeriodicShift::from_spec(&spec))?;
        let mut v = lib(classify(&ps))?.to_json();
        if ps.num_points() <= BRUTE_FORCE_POINTS {
            v["full_group"] = lib(full_group_intersection(&ps))?.to_json();
        }
        put_string(out, v.to_string())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn shiftaut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
