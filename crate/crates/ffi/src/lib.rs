//! C ABI over `qtet-core`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`-style
//! constructors and released by the matching `*_free`. Every fallible call
//! returns a [`QtetStatus`]; on failure the message is available from
//! [`qtet_last_error`] on the same thread until the next failing call.
//! Strings returned through `char **` outputs are owned by the caller and
//! released with [`qtet_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtet_core::criterion::{decide, DecideOptions, Decision};
use qtet_core::generate::{derive_qmixed, generate_qgeometric};
use qtet_core::operators::serre_alpha;
use qtet_core::pairfile::PairFile;
use qtet_core::scalar::parse_scalar;
use qtet_core::tdp::TriPair;
use qtet_core::words::{AlgebraElement, AqAlpha};
use qtet_core::{Error, FieldSpec};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtetStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    PairFile = 4,
    Domain = 5,
    Precondition = 6,
    Structural = 7,
    Generation = 8,
    NoAction = 9,
    Panic = 10,
}

/// A verified-shape pair of square matrices over a fixed field.
pub struct QtetPair {
    inner: TriPair,
}

/// The outcome of the full existence pipeline for one pair.
pub struct QtetDecision {
    inner: Decision,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QtetStatus {
    match e {
        Error::Parse { .. } => QtetStatus::Parse,
        Error::PairFile(_) | Error::Json(_) | Error::Io(_) => QtetStatus::PairFile,
        Error::Domain(_) => QtetStatus::Domain,
        Error::Precondition { .. } => QtetStatus::Precondition,
        Error::Structural { .. } => QtetStatus::Structural,
        Error::Generation(_) => QtetStatus::Generation,
    }
}

struct Failure(QtetStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QtetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QtetStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            QtetStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(QtetStatus::NullArgument, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QtetStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_opt_str<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        read_str(p, what).map(Some)
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(QtetStatus::NullArgument, format!("{what} is NULL")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(QtetStatus::NullArgument, "output pointer is NULL".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(QtetStatus::Structural, "output contains NUL".into()))?;
    write_out(out, c.into_raw())
}

fn field_of(q: Option<&str>) -> Result<FieldSpec, Failure> {
    let Some(lit) = q else {
        return Ok(FieldSpec::Symbolic);
    };
    let value = parse_scalar(lit, &FieldSpec::Symbolic)?;
    let q = value
        .as_rational()
        .cloned()
        .ok_or_else(|| Failure(QtetStatus::Domain, format!("q = {lit} is not rational")))?;
    Ok(FieldSpec::specialized(q)?)
}

/// Message of the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qtet_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qtet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a pair file in JSON form.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_pair_from_json(json: *const c_char, out: *mut *mut QtetPair) -> QtetStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let pair = PairFile::parse_json(text)?.to_pair()?;
        write_out(out, Box::into_raw(Box::new(QtetPair { inner: pair })))
    })
}

/// Generates a verified q-geometric pair of diameter `d`, or the q-mixed
/// pair derived from it when `c` is non-NULL. `q` selects a rational
/// specialization; NULL means symbolic.
///
/// # Safety
/// `c` and `q` are NULL or NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_pair_generate(
    d: usize,
    c: *const c_char,
    q: *const c_char,
    out: *mut *mut QtetPair,
) -> QtetStatus {
    guard(|| {
        let field = field_of(read_opt_str(q, "q")?)?;
        let geo = generate_qgeometric(d, &field)?;
        let pair = match read_opt_str(c, "c")? {
            None => geo,
            Some(lit) => derive_qmixed(&geo, &parse_scalar(lit, &field)?)?,
        };
        write_out(out, Box::into_raw(Box::new(QtetPair { inner: pair })))
    })
}

/// Dimension of the underlying space; 0 for NULL.
///
/// # Safety
/// `pair` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtet_pair_dimension(pair: *const QtetPair) -> usize {
    pair.as_ref().map_or(0, |p| p.inner.n())
}

/// The pair as a pair-file JSON string.
///
/// # Safety
/// `pair` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_pair_to_json(pair: *const QtetPair, out: *mut *mut c_char) -> QtetStatus {
    guard(|| {
        let pair = deref(pair, "pair")?;
        write_string(out, PairFile::from_pair(&pair.inner, Default::default()).to_json())
    })
}

/// # Safety
/// `pair` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qtet_pair_free(pair: *mut QtetPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Runs the existence pipeline on a q-mixed pair.
///
/// # Safety
/// `pair` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_decide(pair: *const QtetPair, out: *mut *mut QtetDecision) -> QtetStatus {
    guard(|| {
        let pair = deref(pair, "pair")?;
        let decision = decide(&pair.inner, &DecideOptions::default())?;
        write_out(out, Box::into_raw(Box::new(QtetDecision { inner: decision })))
    })
}

/// Whether the module exists.
///
/// # Safety
/// `decision` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_decision_exists(decision: *const QtetDecision, out: *mut bool) -> QtetStatus {
    guard(|| write_out(out, deref(decision, "decision")?.inner.exists))
}

/// Whether every cross-check and relation passed.
///
/// # Safety
/// `decision` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_decision_consistent(decision: *const QtetDecision, out: *mut bool) -> QtetStatus {
    guard(|| write_out(out, deref(decision, "decision")?.inner.consistent()))
}

/// The full decision record as JSON.
///
/// # Safety
/// `decision` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_decision_to_json(decision: *const QtetDecision, out: *mut *mut c_char) -> QtetStatus {
    guard(|| {
        let d = deref(decision, "decision")?;
        let json = serde_json::to_string(&d.inner).map_err(Error::from)?;
        write_string(out, json)
    })
}

/// The constructed action as JSON; `QTET_STATUS_NO_ACTION` when the module
/// does not exist.
///
/// # Safety
/// `decision` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_decision_action_json(decision: *const QtetDecision, out: *mut *mut c_char) -> QtetStatus {
    guard(|| {
        let d = deref(decision, "decision")?;
        let action = d
            .inner
            .action
            .as_ref()
            .ok_or_else(|| Failure(QtetStatus::NoAction, "no action: P(λ*) = 0".into()))?;
        write_string(out, serde_json::to_string(action).map_err(Error::from)?)
    })
}

/// # Safety
/// `decision` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qtet_decision_free(decision: *mut QtetDecision) {
    if !decision.is_null() {
        drop(Box::from_raw(decision));
    }
}

/// Normal form of an element literal. `alpha` NULL means
/// `q^{-4}(q-q^{-1})^3[3]!`; `q` NULL means symbolic.
///
/// # Safety
/// `element` is NUL-terminated; `alpha`, `q` are NULL or NUL-terminated;
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qtet_words_reduce(
    element: *const c_char,
    alpha: *const c_char,
    q: *const c_char,
    out: *mut *mut c_char,
) -> QtetStatus {
    guard(|| {
        let field = field_of(read_opt_str(q, "q")?)?;
        let e = AlgebraElement::parse(read_str(element, "element")?, &field)?;
        let alpha = match read_opt_str(alpha, "alpha")? {
            Some(lit) => parse_scalar(lit, &field)?,
            None => serre_alpha(&field),
        };
        write_string(out, AqAlpha::new(alpha, field).reduce(&e).to_string())
    })
}
