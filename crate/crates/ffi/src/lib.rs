//! C ABI over `quadpoisson`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`QpStatus`]; on failure the message is available from
//! [`qp_last_error`] until the next failing call on the same thread.
//! Strings returned by the library are freed with [`qp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quadpoisson::catalog::{self, CatalogAlgebra};
use quadpoisson::poisson::jacobiator;
use quadpoisson::scalar::parse_rational;
use quadpoisson::yang_baxter::{ad_invariance_residual, cybe_residual, quadratic_from_r, schouten};
use quadpoisson::{io, poisson, Algebra, Error, PolyTensor, QuadraticTensor, RMatrix};

/// Result of a call. Identity checks that run to completion return `Ok` and
/// report the verdict through their `pass` out-parameter.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, rational literal or inline r-matrix.
    Parse = 3,
    /// Unknown catalog name or bad catalog parameters.
    UnknownAlgebra = 4,
    /// Dimension, index, degree or antisymmetry violation.
    InvalidInput = 5,
    /// The operation needs a unital algebra.
    NoUnit = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// A finite-dimensional associative algebra.
pub struct QpAlgebra(Algebra);

/// An antisymmetric r-matrix.
pub struct QpRMatrix(RMatrix);

/// A polynomial bracket of any degree.
pub struct QpBracket(PolyTensor);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QpStatus {
    match e {
        Error::InvalidRational(_) | Error::ZeroDenominator(_) | Error::Format(_) | Error::Io(_) => QpStatus::Parse,
        Error::UnknownAlgebra(_) | Error::InvalidParams(_) => QpStatus::UnknownAlgebra,
        Error::NoUnit => QpStatus::NoUnit,
        _ => QpStatus::InvalidInput,
    }
}

struct Fail(QpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QpStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            QpStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    // SAFETY: callers pass handles obtained from this library or null
    unsafe { p.as_ref() }.ok_or_else(|| Fail(QpStatus::NullArgument, format!("{what} is null")))
}

fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(QpStatus::NullArgument, format!("{what} is null")));
    }
    // SAFETY: non-null and nul-terminated by contract
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|e| Fail(QpStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    // SAFETY: callers pass writable storage or null
    unsafe { p.as_mut() }.ok_or_else(|| Fail(QpStatus::NullArgument, format!("{what} is null")))
}

fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let slot = out_ptr(out, "out")?;
    let c = CString::new(s).map_err(|e| Fail(QpStatus::InvalidInput, e.to_string()))?;
    *slot = c.into_raw();
    Ok(())
}

/// Message of the last failing call on this thread, or null. Owned by the
/// library; valid until the next failing call.
#[no_mangle]
pub extern "C" fn qp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Catalog algebra by name, e.g. `"quaternions"` or `"matrix(3)"`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_algebra_catalog(name: *const c_char, out: *mut *mut QpAlgebra) -> QpStatus {
    guard(|| {
        let which: CatalogAlgebra = string(name, "name")?.parse()?;
        let alg = catalog::get_algebra(&which)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpAlgebra(alg)));
        Ok(())
    })
}

/// Algebra from its JSON file contents.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_algebra_from_json(json: *const c_char, out: *mut *mut QpAlgebra) -> QpStatus {
    guard(|| {
        let alg = io::algebra_from_json(string(json, "json")?)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpAlgebra(alg)));
        Ok(())
    })
}

/// Dimension of the algebra, 0 for null.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qp_algebra_dim(alg: *const QpAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.dim())
}

/// Associativity and unit axioms.
///
/// # Safety
/// `alg` must be a live handle; `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_algebra_validate(alg: *const QpAlgebra, pass: *mut bool) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        *out_ptr(pass, "pass")? = alg.0.validate().pass;
        Ok(())
    })
}

/// # Safety
/// `alg` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qp_algebra_free(alg: *mut QpAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// r-matrix from inline shorthand over a catalog algebra with basis labels,
/// e.g. `"2*i^j - 1/2*j^k"`.
///
/// # Safety
/// `alg` must be a live handle, `text` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_rmatrix_parse(alg: *const QpAlgebra, text: *const c_char, out: *mut *mut QpRMatrix) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        let r = io::parse_r_inline(&alg.0, string(text, "text")?)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpRMatrix(r)));
        Ok(())
    })
}

/// r-matrix from its JSON file contents.
///
/// # Safety
/// `json` must be nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_rmatrix_from_json(json: *const c_char, out: *mut *mut QpRMatrix) -> QpStatus {
    guard(|| {
        let r = io::r_from_json(string(json, "json")?)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpRMatrix(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qp_rmatrix_free(r: *mut QpRMatrix) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The quadratic bracket `scale·[r, x⊗x]`; `scale` is a rational literal
/// such as `"1/2"`.
///
/// # Safety
/// Handles must be live, `scale` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_derive(
    alg: *const QpAlgebra,
    r: *const QpRMatrix,
    scale: *const c_char,
    out: *mut *mut QpBracket,
) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        let r = non_null(r, "r")?;
        let s = parse_rational(string(scale, "scale")?)?;
        let qt = quadratic_from_r(&alg.0, &r.0, &s)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpBracket(qt.into_poly())));
        Ok(())
    })
}

/// Bracket from its JSON file contents (any degree).
///
/// # Safety
/// `json` must be nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_bracket_from_json(json: *const c_char, out: *mut *mut QpBracket) -> QpStatus {
    guard(|| {
        let pt = io::bracket_from_json(string(json, "json")?)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(QpBracket(pt)));
        Ok(())
    })
}

/// Canonical JSON of a bracket; free the result with [`qp_string_free`].
///
/// # Safety
/// `b` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_bracket_to_json(b: *const QpBracket, out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        let b = non_null(b, "bracket")?;
        emit_string(out, io::to_pretty(&io::bracket_to_json(&b.0)))
    })
}

/// Coefficient of `x^k x^l` in `{x^i, x^j}` of a quadratic bracket, as text.
///
/// # Safety
/// `b` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_bracket_coefficient(
    b: *const QpBracket,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    out: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        let b = non_null(b, "bracket")?;
        let n = b.0.dim();
        if let Some(&index) = [i, j, k, l].iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index, dim: n }.into());
        }
        if b.0.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: b.0.degree() }.into());
        }
        let mut m = [k, l];
        m.sort_unstable();
        let monomial = quadpoisson::poly::monomial(&m);
        emit_string(out, quadpoisson::scalar::emit_rational(&b.0.entry(i, j).coeff(&monomial)))
    })
}

/// # Safety
/// `b` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qp_bracket_free(b: *mut QpBracket) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Jacobi identity, exact.
///
/// # Safety
/// `b` must be a live handle; `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_check_jacobi(b: *const QpBracket, pass: *mut bool) -> QpStatus {
    guard(|| {
        let b = non_null(b, "bracket")?;
        *out_ptr(pass, "pass")? = jacobiator(&b.0).is_zero();
        Ok(())
    })
}

/// Compatibility of a quadratic bracket with the algebra product.
///
/// # Safety
/// Handles must be live; `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_check_multiplicative(alg: *const QpAlgebra, b: *const QpBracket, pass: *mut bool) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        let b = non_null(b, "bracket")?;
        let qt = QuadraticTensor::new(b.0.clone())?;
        *out_ptr(pass, "pass")? = poisson::multiplicativity_residual(&alg.0, &qt)?.pass;
        Ok(())
    })
}

/// Classical Yang–Baxter equation; needs a unit.
///
/// # Safety
/// Handles must be live; `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_check_cybe(alg: *const QpAlgebra, r: *const QpRMatrix, pass: *mut bool) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        let r = non_null(r, "r")?;
        *out_ptr(pass, "pass")? = cybe_residual(&alg.0, &r.0)?.is_zero();
        Ok(())
    })
}

/// ad-invariance of the Schouten bracket of `r`; needs a unit.
///
/// # Safety
/// Handles must be live; `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_check_schouten_invariance(alg: *const QpAlgebra, r: *const QpRMatrix, pass: *mut bool) -> QpStatus {
    guard(|| {
        let alg = non_null(alg, "algebra")?;
        let r = non_null(r, "r")?;
        *out_ptr(pass, "pass")? = ad_invariance_residual(&alg.0, &schouten(&alg.0, &r.0)?)?.pass;
        Ok(())
    })
}
