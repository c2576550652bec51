//! C ABI over `gqs-core`.
//!
//! Every fallible function returns a [`GqsStatus`]; on failure a message is
//! available from [`gqs_last_error`] on the same thread. Handles are opaque
//! and must be released with their `_free` function. Strings returned
//! through `out` parameters are owned by the caller and released with
//! [`gqs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gqs_core::d21a::{self, format_q, D21Params, StructureTable};
use gqs_core::equivalence::classify;
use gqs_core::error::Error;
use gqs_core::grading::{analyze, GradedDecomposition, GradingSpec};
use gqs_core::render;
use gqs_core::rootdata::{Algebra, RootSystem};
use gqs_core::verify;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GqsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownSystem = 3,
    InvalidMarks = 4,
    InvalidAlpha = 5,
    OutOfRange = 6,
    VerificationFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// Root system of one algebra.
pub struct GqsRootSystem(&'static RootSystem);

/// One grading with its level decomposition.
pub struct GqsGrading(GradedDecomposition);

/// Normalized structure table of D(2,1;alpha).
pub struct GqsStructureTable(StructureTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(GqsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownAlgebra(_) => GqsStatus::UnknownSystem,
            Error::MarksLength { .. } | Error::MarkRange(_) => GqsStatus::InvalidMarks,
            Error::InvalidAlpha(_) | Error::Notation { .. } => GqsStatus::InvalidAlpha,
            _ => GqsStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: GqsStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GqsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GqsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GqsStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(GqsStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(GqsStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, Failure> {
    h.as_ref().ok_or_else(|| fail(GqsStatus::NullPointer, "null handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(GqsStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(GqsStatus::Internal, "interior NUL in output"))?;
    write(out, c.into_raw())
}

unsafe fn algebra(name: *const c_char) -> Result<Algebra, Failure> {
    Ok(text(name)?.parse::<Algebra>()?)
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn gqs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gqs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gqs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up the root system named `name` (G2, F4, E6, E7, E8, D21A, G3, F4S).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_root_system_new(name: *const c_char, out: *mut *mut GqsRootSystem) -> GqsStatus {
    guard(|| {
        let a = algebra(name)?;
        write(out, Box::into_raw(Box::new(GqsRootSystem(RootSystem::shared(a)))))
    })
}

/// # Safety
/// `h` must come from [`gqs_root_system_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gqs_root_system_free(h: *mut GqsRootSystem) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Rank and numbers of even and odd roots.
///
/// # Safety
/// `h` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_root_system_counts(
    h: *const GqsRootSystem,
    rank: *mut usize,
    even: *mut usize,
    odd: *mut usize,
) -> GqsStatus {
    guard(|| {
        let sys = handle(h)?.0;
        write(rank, sys.rank())?;
        write(even, sys.even_count())?;
        write(odd, sys.odd_count())
    })
}

/// Root listing as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_root_system_json(h: *const GqsRootSystem, out: *mut *mut c_char) -> GqsStatus {
    guard(|| {
        let json = render::roots_json(handle(h)?.0)?;
        write_string(out, json)
    })
}

/// Classification of the length-3 and length-5 gradings of `name` as JSON,
/// with the number of classes in `count`.
///
/// # Safety
/// `name` must be a NUL-terminated string and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_classify_json(name: *const c_char, count: *mut usize, out: *mut *mut c_char) -> GqsStatus {
    guard(|| {
        let entries = classify(algebra(name)?)?;
        write(count, entries.len())?;
        write_string(out, render::classification_json(&entries)?)
    })
}

/// Grading of `name` given by `len` marks on the simple roots.
///
/// # Safety
/// `marks` must point to `len` readable integers and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_grading_new(
    name: *const c_char,
    marks: *const i32,
    len: usize,
    out: *mut *mut GqsGrading,
) -> GqsStatus {
    guard(|| {
        let a = algebra(name)?;
        if marks.is_null() && len > 0 {
            return Err(fail(GqsStatus::NullPointer, "null marks"));
        }
        let m = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(marks, len).to_vec() };
        let g = analyze(&GradingSpec::new(a, m)?);
        write(out, Box::into_raw(Box::new(GqsGrading(g))))
    })
}

/// # Safety
/// `h` must come from [`gqs_grading_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gqs_grading_free(h: *mut GqsGrading) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Admissibility, length (3 or 5, 0 if not admissible) and consistency.
///
/// # Safety
/// `h` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_grading_info(
    h: *const GqsGrading,
    admissible: *mut bool,
    length: *mut u8,
    consistent: *mut bool,
) -> GqsStatus {
    guard(|| {
        let g = &handle(h)?.0;
        write(admissible, g.admissible())?;
        write(length, if g.admissible() { g.length() } else { 0 })?;
        write(consistent, g.consistent)
    })
}

/// Even and odd root counts at `level` in [-2, 2].
///
/// # Safety
/// `h` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_grading_level_dims(
    h: *const GqsGrading,
    level: i32,
    even: *mut usize,
    odd: *mut usize,
) -> GqsStatus {
    guard(|| {
        let g = &handle(h)?.0;
        if !(-2..=2).contains(&level) {
            return Err(fail(GqsStatus::OutOfRange, format!("level {level} outside [-2, 2]")));
        }
        let (e, o) = g.dims(level);
        write(even, e)?;
        write(odd, o)
    })
}

/// Levels and module components as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_grading_json(h: *const GqsGrading, out: *mut *mut c_char) -> GqsStatus {
    guard(|| {
        let json = render::grading_json(&handle(h)?.0)?;
        write_string(out, json)
    })
}

/// Builds the normalized D(2,1;alpha) table; `alpha` is an integer or `p/q`.
///
/// # Safety
/// `alpha` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_new(alpha: *const c_char, out: *mut *mut GqsStructureTable) -> GqsStatus {
    guard(|| {
        let p: D21Params = text(alpha)?.parse()?;
        let t = d21a::build(&p)?;
        write(out, Box::into_raw(Box::new(GqsStructureTable(t))))
    })
}

/// # Safety
/// `h` must come from [`gqs_d21a_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_free(h: *mut GqsStructureTable) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Dimension of the table (17).
///
/// # Safety
/// `h` must be a live handle and `dim` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_dim(h: *const GqsStructureTable, dim: *mut usize) -> GqsStatus {
    guard(|| write(dim, handle(h)?.0.dim()))
}

/// Coefficient of basis element `k` in `[b_i, b_j]`, as exact `p/q` text.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_structure_constant(
    h: *const GqsStructureTable,
    i: usize,
    j: usize,
    k: usize,
    out: *mut *mut c_char,
) -> GqsStatus {
    guard(|| {
        let t = &handle(h)?.0;
        let n = t.dim();
        if i >= n || j >= n || k >= n {
            return Err(fail(GqsStatus::OutOfRange, format!("basis index outside 0..{n}")));
        }
        let c = t
            .structure(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map_or_else(|| "0".to_string(), |(_, q)| format_q(q));
        write_string(out, c)
    })
}

/// Counts super-Jacobi violations and failed relation instances. Returns
/// `VerificationFailed` when either is nonzero.
///
/// # Safety
/// `h` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_check(
    h: *const GqsStructureTable,
    jacobi_violations: *mut usize,
    failed_relations: *mut usize,
) -> GqsStatus {
    guard(|| {
        let t = &handle(h)?.0;
        let jac = d21a::check_super_jacobi(t).len();
        let rel = d21a::verify_relations(t).iter().filter(|c| !c.holds).count();
        write(jacobi_violations, jac)?;
        write(failed_relations, rel)?;
        if jac + rel > 0 {
            return Err(fail(GqsStatus::VerificationFailed, format!("{jac} Jacobi violations, {rel} failed relations")));
        }
        Ok(())
    })
}

/// Basis, weights and brackets as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_d21a_json(h: *const GqsStructureTable, out: *mut *mut c_char) -> GqsStatus {
    guard(|| {
        let json = render::d21a_json(&handle(h)?.0)?;
        write_string(out, json)
    })
}

/// Full verification against the embedded reference tables. Writes the
/// report as JSON and returns `VerificationFailed` if any check failed.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gqs_verify_json(out: *mut *mut c_char) -> GqsStatus {
    guard(|| {
        let r = verify::verify_all();
        write_string(out, render::json_text(&r)?)?;
        if !r.passed() {
            let n = r.failures().count();
            return Err(fail(GqsStatus::VerificationFailed, format!("{n} checks failed")));
        }
        Ok(())
    })
}
