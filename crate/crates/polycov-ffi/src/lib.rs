//! C ABI for the polycov library.
//!
//! Callers work with opaque handles (`polycov_polytope`, `polycov_sggi`),
//! integer error codes, and JSON strings using the same schemas as the CLI.
//! Every returned string is owned by the library and must be released with
//! `polycov_string_free`; handles are released with their `_free` functions.
//! On any non-OK return the thread-local message from
//! `polycov_last_error_message` describes the failure.
//!
//! The header `include/polycov.h` mirrors these declarations.

use libc::{c_char, c_int, c_ulonglong};
use polycov::covers::{self, Caps, StageGroup};
use polycov::monodromy;
use polycov::reconstruct;
use polycov::{Error, Polytope, Sggi};
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::ptr;

pub const POLYCOV_OK: c_int = 0;
pub const POLYCOV_ERR_NULL_ARGUMENT: c_int = 1;
pub const POLYCOV_ERR_INVALID_UTF8: c_int = 2;
pub const POLYCOV_ERR_PARSE: c_int = 3;
pub const POLYCOV_ERR_DOMAIN: c_int = 4;
pub const POLYCOV_ERR_CAP_EXCEEDED: c_int = 5;
pub const POLYCOV_ERR_INTERNAL: c_int = 6;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn code_of(e: &Error) -> c_int {
    match e {
        Error::Parse(_) => POLYCOV_ERR_PARSE,
        Error::CapExceeded { .. } => POLYCOV_ERR_CAP_EXCEEDED,
        Error::Internal(_) => POLYCOV_ERR_INTERNAL,
        _ => POLYCOV_ERR_DOMAIN,
    }
}

fn fail(e: Error) -> c_int {
    let code = code_of(&e);
    set_error(&e.to_string());
    code
}

/// Opaque polytope handle.
pub struct PolycovPolytope(Polytope);
/// Opaque sggi handle.
pub struct PolycovSggi(Sggi);

unsafe fn cstr_arg<'a>(s: *const c_char) -> Result<&'a str, c_int> {
    if s.is_null() {
        set_error("null string argument");
        return Err(POLYCOV_ERR_NULL_ARGUMENT);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        POLYCOV_ERR_INVALID_UTF8
    })
}

fn string_out(s: String, out: *mut *mut c_char) -> c_int {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior NUL");
            return POLYCOV_ERR_INTERNAL;
        }
    };
    unsafe { *out = c.into_raw() };
    POLYCOV_OK
}

/// Message for the most recent error on this thread, or NULL.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn polycov_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.as_ptr(),
        None => ptr::null(),
    })
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through an `out` string
/// parameter of this library, not yet freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn polycov_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a polytope from a construction expression such as
/// `pyramid(toroid44(3))`.
///
/// # Safety
/// `expr` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_make(
    expr: *const c_char,
    out: *mut *mut PolycovPolytope,
) -> c_int {
    if out.is_null() {
        set_error("null output pointer");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let expr = match cstr_arg(expr) {
        Ok(s) => s,
        Err(c) => return c,
    };
    match polycov::constructors::parse_construction(expr) {
        Ok(q) => {
            *out = Box::into_raw(Box::new(PolycovPolytope(q)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Parse a polytope from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_from_json(
    json: *const c_char,
    out: *mut *mut PolycovPolytope,
) -> c_int {
    if out.is_null() {
        set_error("null output pointer");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let json = match cstr_arg(json) {
        Ok(s) => s,
        Err(c) => return c,
    };
    match Polytope::from_json(json) {
        Ok(q) => {
            *out = Box::into_raw(Box::new(PolycovPolytope(q)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Serialize a polytope to JSON (free with `polycov_string_free`).
///
/// # Safety
/// `p` must be a live polytope handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_to_json(
    p: *const PolycovPolytope,
    out: *mut *mut c_char,
) -> c_int {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    string_out((*p).0.to_json(), out)
}

/// Check axioms A, B, C. `passed` receives 1 or 0; the full report JSON goes
/// to `report` when it is non-NULL.
///
/// # Safety
/// `p` must be a live polytope handle; `passed` a valid pointer; `report`
/// NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_validate(
    p: *const PolycovPolytope,
    passed: *mut c_int,
    report: *mut *mut c_char,
) -> c_int {
    if p.is_null() || passed.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let r = (*p).0.validate();
    *passed = r.passed as c_int;
    if !report.is_null() {
        match serde_json::to_string_pretty(r) {
            Ok(s) => return string_out(s, report),
            Err(e) => return fail(Error::Parse(e.to_string())),
        }
    }
    POLYCOV_OK
}

/// Number of flags of a validated polytope.
///
/// # Safety
/// `p` must be a live polytope handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_flag_count(
    p: *const PolycovPolytope,
    out: *mut c_ulonglong,
) -> c_int {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    match (*p).0.flags() {
        Ok(f) => {
            *out = f.len() as c_ulonglong;
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Dual polytope.
///
/// # Safety
/// `p` must be a live polytope handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_dual(
    p: *const PolycovPolytope,
    out: *mut *mut PolycovPolytope,
) -> c_int {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    match (*p).0.dual() {
        Ok(d) => {
            *out = Box::into_raw(Box::new(PolycovPolytope(d)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `p` must be a handle from this library not yet freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn polycov_polytope_free(p: *mut PolycovPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Monodromy group of a validated polytope.
///
/// # Safety
/// `p` must be a live polytope handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_monodromy(
    p: *const PolycovPolytope,
    out: *mut *mut PolycovSggi,
) -> c_int {
    if p.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    match monodromy::monodromy(&(*p).0) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(PolycovSggi(s)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Parse an sggi from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_from_json(
    json: *const c_char,
    out: *mut *mut PolycovSggi,
) -> c_int {
    if out.is_null() {
        set_error("null output pointer");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let json = match cstr_arg(json) {
        Ok(s) => s,
        Err(c) => return c,
    };
    match Sggi::from_json(json) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(PolycovSggi(s)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Serialize an sggi to JSON (free with `polycov_string_free`).
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_to_json(
    s: *const PolycovSggi,
    out: *mut *mut c_char,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    string_out((*s).0.to_json(), out)
}

/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_rank(s: *const PolycovSggi, out: *mut c_ulonglong) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    *out = (*s).0.rank() as c_ulonglong;
    POLYCOV_OK
}

/// Exact group order in factored text form, e.g. `2^12 * 3^11 * 5`.
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_order_string(
    s: *const PolycovSggi,
    out: *mut *mut c_char,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    string_out((*s).0.order().to_string(), out)
}

/// Schläfli type, e.g. `{12,12,12}`.
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_schlafli_string(
    s: *const PolycovSggi,
    out: *mut *mut c_char,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    match (*s).0.schlafli_type() {
        Ok(t) => string_out(t.to_string(), out),
        Err(e) => fail(e),
    }
}

/// Decide the intersection condition under `cap`: `out` receives 1 or 0.
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_is_string_c_group(
    s: *const PolycovSggi,
    cap: c_ulonglong,
    out: *mut c_int,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    match (*s).0.is_string_c_group(cap) {
        Ok(b) => {
            *out = b as c_int;
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// Run the regular-cover construction; returns the report as JSON
/// (free with `polycov_string_free`). `cap`/`domain_cap` of 0 keep defaults.
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_regular_cover_json(
    s: *const PolycovSggi,
    cap: c_ulonglong,
    domain_cap: c_ulonglong,
    out: *mut *mut c_char,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let mut caps = Caps::default();
    if cap > 0 {
        caps.enumeration = cap;
    }
    if domain_cap > 0 {
        caps.domain = domain_cap as usize;
    }
    match covers::regular_cover(&(*s).0, &caps) {
        Ok(outcome) => match serde_json::to_string_pretty(&outcome.report) {
            Ok(j) => string_out(j, out),
            Err(e) => fail(Error::Parse(e.to_string())),
        },
        Err(e) => fail(e),
    }
}

/// Extend a string C-group one rank up. Explicit results come back as a new
/// sggi handle in `group`; symbolic results leave `group` NULL and put the
/// ledger JSON in `report` either way.
///
/// # Safety
/// `s` must be a live sggi handle; `group` and `report` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn polycov_extend_2k(
    s: *const PolycovSggi,
    cap: c_ulonglong,
    domain_cap: c_ulonglong,
    group: *mut *mut PolycovSggi,
    report: *mut *mut c_char,
) -> c_int {
    if s.is_null() || group.is_null() || report.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let mut caps = Caps::default();
    if cap > 0 {
        caps.enumeration = cap;
    }
    if domain_cap > 0 {
        caps.domain = domain_cap as usize;
    }
    match covers::extend_2k(&(*s).0, &caps) {
        Ok(StageGroup::Explicit(e)) => {
            let summary = format!(
                "{{\"mode\":\"explicit\",\"order\":\"{}\",\"schlafli\":\"{}\"}}",
                e.order(),
                e.schlafli_type().map(|t| t.to_string()).unwrap_or_default()
            );
            *group = Box::into_raw(Box::new(PolycovSggi(e)));
            string_out(summary, report)
        }
        Ok(StageGroup::Symbolic(sym)) => {
            *group = ptr::null_mut();
            match serde_json::to_string_pretty(&sym) {
                Ok(j) => string_out(j, report),
                Err(e) => fail(Error::Parse(e.to_string())),
            }
        }
        Err(e) => fail(e),
    }
}

/// Coset geometry of an sggi, as a new polytope handle.
///
/// # Safety
/// `s` must be a live sggi handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycov_reconstruct(
    s: *const PolycovSggi,
    cap: c_ulonglong,
    out: *mut *mut PolycovPolytope,
) -> c_int {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return POLYCOV_ERR_NULL_ARGUMENT;
    }
    let cap = if cap > 0 { cap } else { Caps::default().enumeration };
    match reconstruct::polytope_from_group(&(*s).0, cap) {
        Ok(q) => {
            *out = Box::into_raw(Box::new(PolycovPolytope(q)));
            POLYCOV_OK
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `s` must be a handle from this library not yet freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn polycov_sggi_free(s: *mut PolycovSggi) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
