//! C ABI surface over the locoh engine.
//!
//! All functions return a status code (`LOCOH_OK` on success) and write
//! results through out-pointers.  Problems are opaque handles created by
//! `locoh_problem_parse` and released by `locoh_problem_free`; strings
//! returned by the library must be released with `locoh_string_free`.
//! The header mirroring this surface lives in `include/locoh.h`.

use locoh::hilbert::{check_box_with, coarse_series, fine_series_monomial, SeriesMode};
use locoh::homology::FieldSpec;
use locoh::io::{ProblemInput, SeriesOutput};
use locoh::monomial::MonomialIdeal;
use locoh::tame::tameness_report;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

pub const LOCOH_OK: i32 = 0;
pub const LOCOH_ERR_INPUT: i32 = 2;
pub const LOCOH_ERR_MISMATCH: i32 = 3;
pub const LOCOH_ERR_NULL: i32 = 5;
pub const LOCOH_ERR_INTERNAL: i32 = 6;

/// Opaque problem handle: a validated ideal plus the resolved field.
pub struct LocohProblem {
    ideal: MonomialIdeal,
    field: FieldSpec,
}

fn guarded<F: FnOnce() -> i32>(f: F) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => LOCOH_ERR_INTERNAL,
    }
}

fn emit_string(text: String, out: *mut *mut c_char) -> i32 {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            LOCOH_OK
        }
        Err(_) => LOCOH_ERR_INTERNAL,
    }
}

/// Parses a JSON problem description into an opaque handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn locoh_problem_parse(
    json: *const c_char,
    out: *mut *mut LocohProblem,
) -> i32 {
    if json.is_null() || out.is_null() {
        return LOCOH_ERR_NULL;
    }
    guarded(|| {
        let Ok(text) = unsafe { CStr::from_ptr(json) }.to_str() else {
            return LOCOH_ERR_INPUT;
        };
        let problem = match ProblemInput::from_json(text) {
            Ok(p) => p,
            Err(_) => return LOCOH_ERR_INPUT,
        };
        let (ideal, field) = match (problem.to_ideal(), problem.resolve_field()) {
            (Ok(i), Ok(f)) => (i, f),
            _ => return LOCOH_ERR_INPUT,
        };
        let handle = Box::new(LocohProblem { ideal, field });
        unsafe { *out = Box::into_raw(handle) };
        LOCOH_OK
    })
}

/// Releases a handle created by `locoh_problem_parse`.  Accepts NULL.
///
/// # Safety
/// `p` must be NULL or a pointer previously returned by
/// `locoh_problem_parse` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn locoh_problem_free(p: *mut LocohProblem) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of y variables of the problem.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn locoh_y_count(p: *const LocohProblem, out: *mut usize) -> i32 {
    if p.is_null() || out.is_null() {
        return LOCOH_ERR_NULL;
    }
    unsafe { *out = (*p).ideal.partition().n() };
    LOCOH_OK
}

/// Dimension of the fine component of `H^i_P(R)` at the bidegree `(a, b)`.
///
/// # Safety
/// `p` must be a live handle; `a` and `b` must point to `a_len` and `b_len`
/// readable values; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn locoh_component_dim(
    p: *const LocohProblem,
    i: i64,
    a: *const i64,
    a_len: usize,
    b: *const i64,
    b_len: usize,
    out: *mut i64,
) -> i32 {
    if p.is_null() || out.is_null() || (a.is_null() && a_len > 0) || (b.is_null() && b_len > 0)
    {
        return LOCOH_ERR_NULL;
    }
    guarded(|| {
        let problem = unsafe { &*p };
        let part = problem.ideal.partition();
        if a_len != part.m() || b_len != part.n() {
            return LOCOH_ERR_INPUT;
        }
        let a = unsafe { std::slice::from_raw_parts(a, a_len) };
        let b = unsafe { std::slice::from_raw_parts(b, b_len) };
        let series =
            match fine_series_monomial(&problem.ideal, i, problem.field, SeriesMode::PerPattern)
            {
                Ok(s) => s,
                Err(_) => return LOCOH_ERR_INPUT,
            };
        let d: Vec<i64> = a.iter().chain(b.iter()).copied().collect();
        unsafe { *out = series.coefficient_at(&d) };
        LOCOH_OK
    })
}

/// Hilbert series of `H^i_P(R)` as a JSON document (the same schema as the
/// CLI); `coarse != 0` regrades to the coarse `(s, t)` bigrading.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer; the returned string
/// must be freed with `locoh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn locoh_series_json(
    p: *const LocohProblem,
    i: i64,
    coarse: i32,
    out: *mut *mut c_char,
) -> i32 {
    if p.is_null() || out.is_null() {
        return LOCOH_ERR_NULL;
    }
    guarded(|| {
        let problem = unsafe { &*p };
        let series =
            match fine_series_monomial(&problem.ideal, i, problem.field, SeriesMode::PerPattern)
            {
                Ok(s) => s,
                Err(_) => return LOCOH_ERR_INPUT,
            };
        let series = if coarse != 0 {
            match coarse_series(&series) {
                Ok(s) => s,
                Err(_) => return LOCOH_ERR_INPUT,
            }
        } else {
            series
        };
        let text = serde_json::to_string(&SeriesOutput::from_series(&series)).unwrap();
        emit_string(text, out)
    })
}

/// Tameness report for index `i` as a JSON document.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer; the returned string
/// must be freed with `locoh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn locoh_tameness_json(
    p: *const LocohProblem,
    i: i64,
    out: *mut *mut c_char,
) -> i32 {
    if p.is_null() || out.is_null() {
        return LOCOH_ERR_NULL;
    }
    guarded(|| {
        let problem = unsafe { &*p };
        let report = match tameness_report(&problem.ideal, i, problem.field) {
            Ok(r) => r,
            Err(_) => return LOCOH_ERR_INPUT,
        };
        emit_string(serde_json::to_string(&report).unwrap(), out)
    })
}

/// Verifies the closed-form series against the Cech strand oracle over the
/// box `a in [0, sigma+a_pad]^m, b in [b_min, rho]^n` for every `i`.
/// Returns `LOCOH_OK` when everything matches and `LOCOH_ERR_MISMATCH`
/// otherwise.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn locoh_check_box(
    p: *const LocohProblem,
    a_pad: i64,
    b_min: i64,
) -> i32 {
    if p.is_null() {
        return LOCOH_ERR_NULL;
    }
    guarded(|| {
        let problem = unsafe { &*p };
        match check_box_with(&problem.ideal, problem.field, a_pad, b_min, 0) {
            Ok(None) => LOCOH_OK,
            Ok(Some(_)) => LOCOH_ERR_MISMATCH,
            Err(_) => LOCOH_ERR_INPUT,
        }
    })
}

/// Releases a string returned by this library.  Accepts NULL.
///
/// # Safety
/// `s` must be NULL or a string previously returned by this library that
/// has not been freed.
#[no_mangle]
pub unsafe extern "C" fn locoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
