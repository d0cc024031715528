//! C bindings for `latpoly`.
//!
//! Polytopes live behind the opaque `LatpolyPolytope` handle. Every fallible
//! call returns a `LatpolyStatus`; on failure a description is available
//! from `latpoly_last_error_message` on the same thread. Strings handed out
//! by the library must be released with `latpoly_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latpoly::report::{self, Command, Options};
use latpoly::{Error, ErrorKind, Polytope};

/// Result codes. The first four agree with the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatpolyStatus {
    Ok = 0,
    InvalidInput = 1,
    Unsupported = 2,
    Internal = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque polytope handle.
pub struct LatpolyPolytope {
    inner: Polytope,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LatpolyStatus {
    match e.kind() {
        ErrorKind::InvalidInput => LatpolyStatus::InvalidInput,
        ErrorKind::Unsupported => LatpolyStatus::Unsupported,
        ErrorKind::Internal => LatpolyStatus::Internal,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LatpolyStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LatpolyStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            LatpolyStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            LatpolyStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Lib(Error::InvalidInput(format!("{what} is not valid UTF-8"))))
}

unsafe fn handle<'a>(p: *const LatpolyPolytope, what: &'static str) -> Result<&'a Polytope, Failure> {
    p.as_ref().map(|h| &h.inner).ok_or(Failure::Null(what))
}

unsafe fn emit_polytope(p: Polytope, out: *mut *mut LatpolyPolytope) -> Result<(), Failure> {
    *out = Box::into_raw(Box::new(LatpolyPolytope { inner: p }));
    Ok(())
}

unsafe fn emit_string(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::Lib(Error::Internal("string contains NUL".into())))?;
    *out = c.into_raw();
    Ok(())
}

/// Builds the convex hull of `count` integer points of dimension `dim`,
/// stored row by row in `coords` (`count * dim` values).
///
/// # Safety
/// `coords` must point to `count * dim` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_from_vertices(
    dim: usize,
    count: usize,
    coords: *const i64,
    out: *mut *mut LatpolyPolytope,
) -> LatpolyStatus {
    guard(|| {
        if coords.is_null() || out.is_null() {
            return Err(Failure::Null("coords/out"));
        }
        if dim == 0 || count == 0 {
            return Err(Error::InvalidInput("dim and count must be positive".into()).into());
        }
        let flat = std::slice::from_raw_parts(coords, dim * count);
        let points: Vec<Vec<i64>> = flat.chunks(dim).map(<[i64]>::to_vec).collect();
        emit_polytope(Polytope::from_int_vertices(&points)?, out)
    })
}

/// Parses a JSON polytope document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_from_json(
    json: *const c_char,
    out: *mut *mut LatpolyPolytope,
) -> LatpolyStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        emit_polytope(report::load(Some(text), None)?, out)
    })
}

/// Builds a named polytope such as `simplex:2:3` or `hirzebruch:1`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_builtin(
    name: *const c_char,
    out: *mut *mut LatpolyPolytope,
) -> LatpolyStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        emit_polytope(report::load(None, Some(name))?, out)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_free(p: *mut LatpolyPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_dim(p: *const LatpolyPolytope) -> usize {
    p.as_ref().map_or(0, |h| h.inner.dim())
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn latpoly_polytope_vertex_count(p: *const LatpolyPolytope) -> usize {
    p.as_ref().map_or(0, |h| h.inner.vertices().len())
}

/// Number of lattice points in `m·P`, written as a decimal string since it
/// may exceed 64 bits.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_count_points(
    p: *const LatpolyPolytope,
    m: i64,
    out: *mut *mut c_char,
) -> LatpolyStatus {
    guard(|| {
        let p = handle(p, "polytope")?;
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        emit_string(latpoly::enumerate(p, m)?.count.to_string(), out)
    })
}

/// Whether every vertex has a lattice basis of primitive edge directions.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_is_delzant(p: *const LatpolyPolytope, out: *mut bool) -> LatpolyStatus {
    guard(|| {
        let p = handle(p, "polytope")?;
        let out = out.as_mut().ok_or(Failure::Null("out"))?;
        *out = latpoly::delzant_check(p)?.is_delzant;
        Ok(())
    })
}

/// Reflexivity after moving the unique interior lattice point to the
/// origin. Polytopes without exactly one interior lattice point are not
/// reflexive.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_is_reflexive(p: *const LatpolyPolytope, out: *mut bool) -> LatpolyStatus {
    guard(|| {
        let p = handle(p, "polytope")?;
        let out = out.as_mut().ok_or(Failure::Null("out"))?;
        *out = match p.translate_interior_point_to_origin() {
            Ok((q, _)) => latpoly::hibi_reflexive(&q)?,
            Err(Error::InteriorPointNotUnique { .. }) => false,
            Err(e) => return Err(e.into()),
        };
        Ok(())
    })
}

/// Runs a command by its command-line name (`ehrhart`, `classify`, ...)
/// and writes the JSON result. `other` is only read by `equiv` and may be
/// null otherwise.
///
/// # Safety
/// `command` must be a NUL-terminated string, `p` a live handle, `other`
/// null or a live handle, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latpoly_run_json(
    command: *const c_char,
    p: *const LatpolyPolytope,
    other: *const LatpolyPolytope,
    out: *mut *mut c_char,
) -> LatpolyStatus {
    guard(|| {
        let name = str_arg(command, "command")?;
        let cmd = Command::from_name(name).ok_or_else(|| Error::InvalidInput(format!("unknown command '{name}'")))?;
        let p = handle(p, "polytope")?;
        let other = other.as_ref().map(|h| &h.inner);
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let v = report::run(cmd, p, other, &Options::default())?;
        emit_string(v.to_string(), out)
    })
}

/// Ehrhart polynomial as JSON.
///
/// # Safety
/// As for `latpoly_run_json`.
#[no_mangle]
pub unsafe extern "C" fn latpoly_ehrhart_json(p: *const LatpolyPolytope, out: *mut *mut c_char) -> LatpolyStatus {
    latpoly_run_json(c"ehrhart".as_ptr(), p, ptr::null(), out)
}

/// Classification verdict as JSON.
///
/// # Safety
/// As for `latpoly_run_json`.
#[no_mangle]
pub unsafe extern "C" fn latpoly_classify_json(p: *const LatpolyPolytope, out: *mut *mut c_char) -> LatpolyStatus {
    latpoly_run_json(c"classify".as_ptr(), p, ptr::null(), out)
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latpoly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn latpoly_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
