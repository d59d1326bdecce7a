//! C ABI over `surfsat`.
//!
//! Surfaces are opaque handles built from the JSON input format. Every call
//! returns a [`SurfsatStatus`]; on failure the message is available from
//! [`surfsat_last_error`] on the same thread. Strings handed out by the
//! library must be released with [`surfsat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use surfsat::cli::{self, Command, ExitStatus, OutputFormat};
use surfsat::input::{InputDocument, Problem};
use surfsat::linalg::SymmetricMatrix;
use surfsat::saturation::{self, AffDim, SaturationError};

/// Result codes. Non-negative values mirror the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfsatStatus {
    /// Definite answer.
    Ok = 0,
    /// The data are inconsistent. From `surfsat_run_command` this also covers
    /// input errors, matching CLI exit code 1.
    Inconsistent = 1,
    /// The answer depends on information the input does not carry.
    Undecided = 2,
    NullPointer = -1,
    InvalidUtf8 = -2,
    /// Malformed JSON or a schema violation.
    InvalidInput = -3,
    UnknownCommand = -4,
    InvalidArgument = -5,
    /// A bug in the library; the message carries the panic payload.
    Panic = -6,
}

/// Affinisation dimension, i.e. the dimension of `Spec O(X)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfsatAffDim {
    Zero = 0,
    One = 1,
    Two = 2,
    /// One or zero; deciding needs a false-fibre certificate.
    OneOrZero = 3,
}

/// Opaque handle to a parsed surface.
pub struct SurfsatSurface {
    problem: Problem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(SurfsatStatus, String);

impl From<SaturationError> for Failure {
    fn from(e: SaturationError) -> Self {
        let status = match e {
            SaturationError::Inconsistent { .. } => SurfsatStatus::Inconsistent,
            _ => SurfsatStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<SurfsatStatus, Failure>) -> SurfsatStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
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
            set_error(format!("internal error: {message}"));
            SurfsatStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SurfsatStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(SurfsatStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(SurfsatStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// Parses a JSON document and stores a new handle in `*out`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfsat_surface_from_json(
    json: *const c_char,
    out: *mut *mut SurfsatSurface,
) -> SurfsatStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        let doc = InputDocument::from_json(text).map_err(|e| Failure(SurfsatStatus::InvalidInput, e.to_string()))?;
        let problem = doc.to_problem().map_err(|e| Failure(SurfsatStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(SurfsatSurface { problem }));
        Ok(SurfsatStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `surface` must come from [`surfsat_surface_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn surfsat_surface_free(surface: *mut SurfsatSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// Number of curves in the configuration.
///
/// # Safety
/// `surface` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfsat_curve_count(surface: *const SurfsatSurface, out: *mut usize) -> SurfsatStatus {
    guard(|| {
        non_null(surface, "surface")?;
        non_null(out, "out")?;
        *out = (*surface).problem.surface.ambient.len();
        Ok(SurfsatStatus::Ok)
    })
}

/// Whether the boundary has no isolated points and no negative definite component.
///
/// # Safety
/// `surface` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfsat_is_saturated(surface: *const SurfsatSurface, out: *mut bool) -> SurfsatStatus {
    guard(|| {
        non_null(surface, "surface")?;
        non_null(out, "out")?;
        *out = saturation::is_saturated(&(*surface).problem.surface).saturated;
        Ok(SurfsatStatus::Ok)
    })
}

/// Affinisation dimension of the surface, saturating it first if needed.
/// Returns `Undecided` together with `OneOrZero` when a certificate is missing.
///
/// # Safety
/// `surface` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfsat_affinisation_dimension(
    surface: *const SurfsatSurface,
    out: *mut SurfsatAffDim,
) -> SurfsatStatus {
    guard(|| {
        non_null(surface, "surface")?;
        non_null(out, "out")?;
        let s = &(*surface).problem.surface;
        let plan = saturation::saturation_plan(s)?;
        let report = if plan.is_empty() {
            saturation::affinisation_dimension(s)?
        } else {
            saturation::affinisation_dimension(&saturation::apply_plan(s, &plan)?.surface)?
        };
        *out = match report.verdict {
            AffDim::Zero => SurfsatAffDim::Zero,
            AffDim::One => SurfsatAffDim::One,
            AffDim::Two => SurfsatAffDim::Two,
            AffDim::OneOrZero => SurfsatAffDim::OneOrZero,
        };
        Ok(if report.verdict.is_definite() { SurfsatStatus::Ok } else { SurfsatStatus::Undecided })
    })
}

/// Runs a CLI command (`analyze`, `saturate`, `affdim`, `fibre`, `mumford`,
/// `hironaka`, `validate`) on a JSON document and stores the JSON report in
/// `*report`. The status is the command's exit code; the report is produced
/// for every non-negative status.
///
/// # Safety
/// `command` and `json` must be NUL-terminated strings and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfsat_run_command(
    command: *const c_char,
    json: *const c_char,
    report: *mut *mut c_char,
) -> SurfsatStatus {
    guard(|| {
        non_null(report, "report")?;
        *report = ptr::null_mut();
        let name = read_str(command, "command")?;
        let command = Command::from_name(name)
            .ok_or_else(|| Failure(SurfsatStatus::UnknownCommand, format!("unknown command {name:?}")))?;
        let text = read_str(json, "json")?;
        let outcome = cli::run_json(command, text);
        let rendered = outcome.render(OutputFormat::Json);
        *report = CString::new(rendered).expect("JSON has no NUL bytes").into_raw();
        Ok(match outcome.status {
            ExitStatus::Definite => SurfsatStatus::Ok,
            ExitStatus::Error => {
                set_error(outcome.report["error"]["message"].as_str().unwrap_or("error"));
                SurfsatStatus::Inconsistent
            }
            ExitStatus::Undecided => SurfsatStatus::Undecided,
        })
    })
}

/// Inertia `(positive, negative, zero)` of a symmetric `n × n` integer matrix
/// given row-major in `entries`.
///
/// # Safety
/// `entries` must point to `n * n` values and `out` to three writable `size_t`s.
#[no_mangle]
pub unsafe extern "C" fn surfsat_inertia(entries: *const i64, n: usize, out: *mut usize) -> SurfsatStatus {
    guard(|| {
        non_null(out, "out")?;
        if n > 0 {
            non_null(entries, "entries")?;
        }
        let len = n.checked_mul(n).ok_or_else(|| Failure(SurfsatStatus::InvalidArgument, "n too large".into()))?;
        let values = if len == 0 { &[][..] } else { std::slice::from_raw_parts(entries, len) };
        let rows: Vec<Vec<_>> =
            values.chunks(n.max(1)).map(|r| r.iter().map(|&x| surfsat::rational::int(x)).collect()).collect();
        let m = SymmetricMatrix::from_rows(rows).map_err(|e| Failure(SurfsatStatus::InvalidArgument, e.to_string()))?;
        let s = surfsat::linalg::inertia(&m);
        let out = std::slice::from_raw_parts_mut(out, 3);
        out.copy_from_slice(&[s.positive, s.negative, s.zero]);
        Ok(SurfsatStatus::Ok)
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn surfsat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn surfsat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn surfsat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
