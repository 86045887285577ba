//! C ABI for `xmoon`.
//!
//! Conventions:
//! - Every fallible function returns an [`XmStatus`]; results come back
//!   through out-pointers, which are written only on `XM_STATUS_OK`.
//! - Series and families are opaque handles owned by the caller and
//!   released with [`xm_series_free`] / [`xm_family_free`].
//! - Strings returned through out-pointers are NUL-terminated UTF-8 owned by
//!   the caller and released with [`xm_string_free`].
//! - Big integers cross the boundary as decimal strings.
//! - Orders and exponents are powers of `q` (always even for these forms).
//! - After a failure, [`xm_last_error_message`] describes it (per thread).
//! - Panics never unwind into C; they surface as `XM_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::{json, Value};
use xmoon::cli::{decomposition_json, family_json, named_form, series_json, CliError};
use xmoon::extremal::build_family;
use xmoon::forms::FormCatalog;
use xmoon::identity::{builtin_table1, parse_file, run_identities, IdentityAst};
use xmoon::moonshine::MonsterDims;
use xmoon::series::json::from_q_exponent;
use xmoon::{ExtremalFamily, IntSeries, QInt};

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XmStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was out of range or malformed (including integers).
    InvalidArgument = 3,
    /// Unknown form or lattice name.
    UnknownForm = 4,
    /// The requested coefficient lies beyond the truncation order.
    BeyondTruncation = 5,
    /// The extremal solver rejected its input.
    Extremal = 6,
    /// A moonshine decomposition failed.
    Moonshine = 7,
    /// An identity failed to parse or evaluate.
    Identity = 8,
    /// Internal error; the library caught a panic.
    Panic = 99,
}

/// Opaque handle to a truncated integer q-series.
pub struct XmSeries(IntSeries);

/// Opaque handle to an extremal family `G_k(x)`.
pub struct XmFamily(ExtremalFamily);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(XmStatus, String);

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        let status = match e {
            CliError::UnknownForm(_) | CliError::UnknownLattice(_) => XmStatus::UnknownForm,
            CliError::Extremal(_) => XmStatus::Extremal,
            CliError::Moonshine(_) => XmStatus::Moonshine,
            CliError::Identity(_) => XmStatus::Identity,
            CliError::Io { .. } => XmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: XmStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Run `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> XmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            XmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {msg}"));
            XmStatus::Panic
        }
    }
}

/// # Safety
/// `p` is NULL or points to a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(XmStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(XmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_int(p: *const c_char, what: &str) -> Result<QInt, Failure> {
    let s = read_str(p, what)?;
    s.trim().parse().map_err(|_| fail(XmStatus::InvalidArgument, format!("{what}: not an integer: {s:?}")))
}

fn check_out<T>(out: *mut T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        Err(fail(XmStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(XmStatus::NullPointer, format!("{what} is NULL")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = to_c_string(s);
}

fn internal_order(order_q: i64) -> Result<i64, Failure> {
    if order_q < 0 {
        return Err(fail(XmStatus::InvalidArgument, format!("order must be non-negative, got {order_q}")));
    }
    Ok(order_q.div_euclid(2))
}

fn reports_json(ids: &[IdentityAst], i_max: i64, all_pass: &mut bool) -> Result<String, Failure> {
    if i_max < 0 {
        return Err(fail(XmStatus::InvalidArgument, "i_max must be non-negative"));
    }
    let reports = run_identities(&FormCatalog::new(), ids, 0, i_max).map_err(CliError::from)?;
    *all_pass = reports.iter().all(|r| r.all_pass);
    let v = json!({
        "all_pass": *all_pass,
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<Value>>(),
    });
    Ok(v.to_string())
}

/// Library version as a static NUL-terminated string (do not free).
#[no_mangle]
pub extern "C" fn xm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread, or NULL if the last call
/// succeeded. The caller frees the result with [`xm_string_free`].
#[no_mangle]
pub extern "C" fn xm_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` is NULL or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Expand a named form up to `q^order`. Names: `delta`, `e4`, `j` (or `J`,
/// zero constant term), `j-classical`, `niemeier:<lattice>`.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_series_form(name: *const c_char, order: i64, out: *mut *mut XmSeries) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let name = read_str(name, "name")?;
        let s = named_form(&FormCatalog::new(), name, internal_order(order)?)?;
        *out = Box::into_raw(Box::new(XmSeries(s)));
        Ok(())
    })
}

/// Release a series handle. NULL is ignored.
///
/// # Safety
/// `s` is NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn xm_series_free(s: *mut XmSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Truncation order of a series in powers of `q` (coefficients are known
/// through `q^order`).
///
/// # Safety
/// `s` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_series_order(s: *const XmSeries, out: *mut i64) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = 2 * deref(s, "series")?.0.order();
        Ok(())
    })
}

/// Coefficient of `q^exponent` as a decimal string.
///
/// # Safety
/// `s` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_series_coefficient(s: *const XmSeries, exponent: i64, out: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = &deref(s, "series")?.0;
        if exponent > 2 * s.order() + 1 {
            return Err(fail(
                XmStatus::BeyondTruncation,
                format!("q^{exponent} lies beyond the truncation order q^{}", 2 * s.order()),
            ));
        }
        let value = match from_q_exponent(exponent) {
            Some(n) => s.coefficient(n).map_err(|e| fail(XmStatus::BeyondTruncation, e.to_string()))?,
            None => QInt::from(0),
        };
        write_string(out, value.to_string());
        Ok(())
    })
}

/// Serialize a series as JSON (`{"variable":"q","unit":2,"terms":[...],"order":N}`).
///
/// # Safety
/// `s` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_series_to_json(s: *const XmSeries, out: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        write_string(out, series_json(&deref(s, "series")?.0).to_string());
        Ok(())
    })
}

/// Build the extremal family `G_k(x)` up to `q^order`, `1 <= k <= 6`,
/// `order >= 2`.
///
/// # Safety
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_family_build(k: u32, order: i64, out: *mut *mut XmFamily) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let f = build_family(k, internal_order(order)?).map_err(CliError::from)?;
        *out = Box::into_raw(Box::new(XmFamily(f)));
        Ok(())
    })
}

/// Release a family handle. NULL is ignored.
///
/// # Safety
/// `f` is NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn xm_family_free(f: *mut XmFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// The `q^0` coefficient `g0(x)` as a JSON array of decimal strings, lowest
/// degree first (for k=2: `["393192","-48","-1"]`).
///
/// # Safety
/// `f` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_family_g0(f: *const XmFamily, out: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let p = deref(f, "family")?.0.g0_poly();
        let v: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        write_string(out, json!(v).to_string());
        Ok(())
    })
}

/// Serialize the whole family (g0, symmetric functions, series) as JSON.
///
/// # Safety
/// `f` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_family_to_json(f: *const XmFamily, out: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        write_string(out, family_json(&deref(f, "family")?.0).to_string());
        Ok(())
    })
}

/// Substitute the integer `x` (decimal string) into the family.
///
/// # Safety
/// `f` is a live handle; `x` is a NUL-terminated string; `out` is valid.
#[no_mangle]
pub unsafe extern "C" fn xm_family_specialize(
    f: *const XmFamily,
    x: *const c_char,
    out: *mut *mut XmSeries,
) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let fam = &deref(f, "family")?.0;
        let x = read_int(x, "x")?;
        *out = Box::into_raw(Box::new(XmSeries(fam.specialize(&x))));
        Ok(())
    })
}

/// All integer `x` with `g0(x) = target`, largest first, as a JSON array of
/// decimal strings.
///
/// # Safety
/// `f` is a live handle; `target` is a NUL-terminated string; `out` is valid.
#[no_mangle]
pub unsafe extern "C" fn xm_family_solve_g0(
    f: *const XmFamily,
    target: *const c_char,
    out: *mut *mut c_char,
) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let fam = &deref(f, "family")?.0;
        let t = read_int(target, "target")?;
        let roots: Vec<String> = fam.solve_g0(&t).iter().map(ToString::to_string).collect();
        write_string(out, json!(roots).to_string());
        Ok(())
    })
}

/// Greedy decomposition of a non-negative integer into Monster irreducible
/// dimensions, as JSON `{"exponent":null,"coefficient":"…","terms":[[dim,mult],…]}`.
///
/// # Safety
/// `value` is a NUL-terminated string; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xm_decompose(value: *const c_char, out: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(out, "out")?;
        let v = read_int(value, "value")?;
        let d = MonsterDims::standard().greedy_decompose(&v).map_err(CliError::from)?;
        write_string(out, decomposition_json(None, &d).to_string());
        Ok(())
    })
}

/// Run the built-in identity table for `0 <= i <= i_max`. Writes whether
/// every row passed and a JSON report `{"all_pass":…,"reports":[…]}`.
/// A failing row is not an error: the call still returns `XM_STATUS_OK`.
///
/// # Safety
/// `all_pass` and `out_json` are valid pointers.
#[no_mangle]
pub unsafe extern "C" fn xm_verify_builtin(i_max: i64, all_pass: *mut bool, out_json: *mut *mut c_char) -> XmStatus {
    guard(|| {
        check_out(all_pass, "all_pass")?;
        check_out(out_json, "out_json")?;
        let mut ok = false;
        let text = reports_json(&builtin_table1(), i_max, &mut ok)?;
        *all_pass = ok;
        write_string(out_json, text);
        Ok(())
    })
}

/// Parse identities (one per line, `#` comments) and run them like
/// [`xm_verify_builtin`].
///
/// # Safety
/// `text` is a NUL-terminated string; `all_pass` and `out_json` are valid.
#[no_mangle]
pub unsafe extern "C" fn xm_verify_text(
    text: *const c_char,
    i_max: i64,
    all_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> XmStatus {
    guard(|| {
        check_out(all_pass, "all_pass")?;
        check_out(out_json, "out_json")?;
        let ids = parse_file(read_str(text, "text")?).map_err(CliError::from)?;
        let mut ok = false;
        let json = reports_json(&ids, i_max, &mut ok)?;
        *all_pass = ok;
        write_string(out_json, json);
        Ok(())
    })
}
