//! C ABI for the kernel: opaque algebra handles, integer status codes, and
//! canonical-JSON outputs, with a thread-local last-error string.
//!
//! Conventions, mirrored in the generated header:
//! - every fallible call returns an [`HcStatus`] and writes results through
//!   out pointers, which are touched only on `HC_STATUS_OK`;
//! - strings returned through out pointers are NUL-terminated, owned by the
//!   caller, and must be released with [`hc_string_free`];
//! - handles must be released with [`hc_algebra_free`];
//! - after any non-OK status, [`hc_last_error`] describes the failure until
//!   the next call on the same thread;
//! - a Rust panic is caught at the boundary and surfaces as
//!   `HC_STATUS_PANIC` instead of unwinding into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hopfcheck::algebra::StructuredAlgebra;
use hopfcheck::construct::{group_algebra, group_dual, MAX_CONSTRUCTED_DIM};
use hopfcheck::format;
use hopfcheck::groups::GroupTable;
use hopfcheck::invariants::{is_semisimple, jacobson_radical};
use hopfcheck::linalg::is_prime;
use hopfcheck::masuoka::{masuoka_report, run_suite, SuiteSpec};
use hopfcheck::Error;

/// Result of every fallible call in this ABI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HcStatus {
    /// The call succeeded and all out pointers are filled.
    Ok = 0,
    /// A mathematical failure: broken axioms, structural obstructions.
    MathError = 1,
    /// Malformed input: bad JSON, bad names, bad moduli, IO problems.
    ParseError = 2,
    /// A null pointer or non-UTF-8 string was passed in.
    InvalidArgument = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Opaque handle to a loaded algebra, coalgebra, bialgebra, or Hopf algebra.
pub struct HcAlgebra {
    inner: StructuredAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    let c = CString::new(sanitized).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(e: &Error) -> HcStatus {
    set_error(&e.to_string());
    if e.is_parse() {
        HcStatus::ParseError
    } else {
        HcStatus::MathError
    }
}

/// Runs the body with a panic guard; the closure only returns a status.
fn guarded(f: impl FnOnce() -> HcStatus) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("internal panic: {msg}"));
            HcStatus::Panic
        }
    }
}

macro_rules! nonnull {
    ($ptr:expr) => {
        if $ptr.is_null() {
            set_error(concat!("null pointer passed for ", stringify!($ptr)));
            return HcStatus::InvalidArgument;
        }
    };
}

/// Copies `text` out of C, rejecting null and non-UTF-8 data.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, HcStatus> {
    if text.is_null() {
        set_error("null pointer passed for a string argument");
        return Err(HcStatus::InvalidArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        HcStatus::InvalidArgument
    })
}

fn give_string(out: *mut *mut c_char, s: String) -> HcStatus {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior NUL byte");
            return HcStatus::Panic;
        }
    };
    unsafe { *out = c.into_raw() };
    clear_error();
    HcStatus::Ok
}

fn give_algebra(out: *mut *mut HcAlgebra, h: StructuredAlgebra) -> HcStatus {
    unsafe { *out = Box::into_raw(Box::new(HcAlgebra { inner: h })) };
    clear_error();
    HcStatus::Ok
}

fn catalog_group(name: &str, p: u64) -> Result<GroupTable, HcStatus> {
    if !is_prime(p) || p > 251 {
        set_error("modulus not prime or too large (p must be a prime <= 251)");
        return Err(HcStatus::ParseError);
    }
    let g = GroupTable::from_catalog(name).map_err(|e| match e {
        Error::UnknownGroup(n) => {
            set_error(&format!("unknown catalog group '{n}'"));
            HcStatus::ParseError
        }
        other => fail(&other),
    })?;
    if g.order() > MAX_CONSTRUCTED_DIM {
        set_error(&format!(
            "group order {} exceeds the construction bound {MAX_CONSTRUCTED_DIM}",
            g.order()
        ));
        return Err(HcStatus::MathError);
    }
    Ok(g)
}

/// Returns the message for the most recent failure on this thread, or null
/// if the last call succeeded.
///
/// # Safety
/// The pointer is borrowed: it stays valid until the next `hc_*` call on the
/// same thread and must not be freed.
#[no_mangle]
pub unsafe extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map(|c| c.as_ptr())).unwrap_or(std::ptr::null())
}

/// Parses an algebra/1 JSON document into a handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to a writable
/// pointer slot. On `HC_STATUS_OK` the caller owns the handle and must
/// release it with `hc_algebra_free`.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_from_json(
    text: *const c_char,
    out: *mut *mut HcAlgebra,
) -> HcStatus {
    guarded(|| {
        nonnull!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match format::parse_algebra(text) {
            Ok(h) => give_algebra(out, h),
            Err(e) => fail(&e),
        }
    })
}

/// Serializes a handle back to the canonical algebra/1 JSON document.
///
/// # Safety
/// `h` must be a live handle from this library and `out` a writable pointer
/// slot. On `HC_STATUS_OK` the caller owns the string and must release it
/// with `hc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_to_json(
    h: *const HcAlgebra,
    out: *mut *mut c_char,
) -> HcStatus {
    guarded(|| {
        nonnull!(h);
        nonnull!(out);
        give_string(out, format::algebra_to_string(&(*h).inner))
    })
}

/// Builds the dual of the group algebra of a catalog group over F_p.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer slot.
/// On `HC_STATUS_OK` the caller owns the handle.
#[no_mangle]
pub unsafe extern "C" fn hc_build_group_dual(
    name: *const c_char,
    p: u64,
    out: *mut *mut HcAlgebra,
) -> HcStatus {
    guarded(|| {
        nonnull!(out);
        let name = match read_str(name) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match catalog_group(name, p) {
            Ok(g) => give_algebra(out, group_dual(p, &g)),
            Err(status) => status,
        }
    })
}

/// Builds the group algebra of a catalog group over F_p.
///
/// # Safety
/// Same contract as `hc_build_group_dual`.
#[no_mangle]
pub unsafe extern "C" fn hc_build_group_algebra(
    name: *const c_char,
    p: u64,
    out: *mut *mut HcAlgebra,
) -> HcStatus {
    guarded(|| {
        nonnull!(out);
        let name = match read_str(name) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match catalog_group(name, p) {
            Ok(g) => give_algebra(out, group_algebra(p, &g)),
            Err(status) => status,
        }
    })
}

/// Dimension of the algebra behind the handle; 0 if the handle is null.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_dim(h: *const HcAlgebra) -> usize {
    if h.is_null() {
        0
    } else {
        (*h).inner.dim
    }
}

/// Field modulus of the algebra behind the handle; 0 if the handle is null.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_modulus(h: *const HcAlgebra) -> u64 {
    if h.is_null() {
        0
    } else {
        (*h).inner.p
    }
}

/// Checks the axioms of the handle's declared kind and writes the number of
/// violations. On violations the first one is available via `hc_last_error`
/// while the status stays `HC_STATUS_OK`: the check itself succeeded.
///
/// # Safety
/// `h` must be a live handle and `out_violations` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_validate(
    h: *const HcAlgebra,
    out_violations: *mut usize,
) -> HcStatus {
    guarded(|| {
        nonnull!(h);
        nonnull!(out_violations);
        let violations = (*h).inner.validate();
        *out_violations = violations.len();
        match violations.first() {
            Some(first) => set_error(&first.to_string()),
            None => clear_error(),
        }
        HcStatus::Ok
    })
}

/// Writes the dimension of the Jacobson radical.
///
/// # Safety
/// `h` must be a live handle and `out_dim` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn hc_radical_dim(h: *const HcAlgebra, out_dim: *mut usize) -> HcStatus {
    guarded(|| {
        nonnull!(h);
        nonnull!(out_dim);
        let inner = &(*h).inner;
        if !inner.kind.has_algebra() {
            return fail(&Error::MissingAlgebra);
        }
        *out_dim = jacobson_radical(inner).dim();
        clear_error();
        HcStatus::Ok
    })
}

/// Writes whether the algebra behind the handle is semisimple.
///
/// # Safety
/// `h` must be a live handle and `out` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn hc_is_semisimple(h: *const HcAlgebra, out: *mut bool) -> HcStatus {
    guarded(|| {
        nonnull!(h);
        nonnull!(out);
        let inner = &(*h).inner;
        if !inner.kind.has_algebra() {
            return fail(&Error::MissingAlgebra);
        }
        *out = is_semisimple(inner);
        clear_error();
        HcStatus::Ok
    })
}

/// Runs the seven-way semisimplicity report and returns it as canonical
/// JSON (the report/1 document).
///
/// # Safety
/// `h` must be a live handle and `out` a writable pointer slot. On
/// `HC_STATUS_OK` the caller owns the string.
#[no_mangle]
pub unsafe extern "C" fn hc_masuoka_report_json(
    h: *const HcAlgebra,
    out: *mut *mut c_char,
) -> HcStatus {
    guarded(|| {
        nonnull!(h);
        nonnull!(out);
        match masuoka_report(&(*h).inner) {
            Ok(report) => give_string(out, format::report_json(&report)),
            Err(e) => fail(&e),
        }
    })
}

/// Runs the full instance suite at the given modulus and group-order bound,
/// returning the suite/1 JSON document and whether every instance passed.
///
/// # Safety
/// `out_json` and `out_passed` must be writable slots. On `HC_STATUS_OK`
/// the caller owns the string.
#[no_mangle]
pub unsafe extern "C" fn hc_suite_json(
    p: u64,
    max_group_order: usize,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> HcStatus {
    guarded(|| {
        nonnull!(out_json);
        nonnull!(out_passed);
        if !is_prime(p) || p > 251 {
            set_error("modulus not prime or too large (p must be a prime <= 251)");
            return HcStatus::ParseError;
        }
        let report = run_suite(&SuiteSpec::new(p, max_group_order));
        *out_passed = report.passed();
        give_string(out_json, format::suite_json(&report))
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `h` must be null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn hc_algebra_free(h: *mut HcAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
