//! C interface to `fracfactor`.
//!
//! Graphs cross the boundary as opaque `FfGraph` handles created by the
//! `ff_graph_*` constructors and released with [`ff_graph_free`]. Every
//! fallible function returns an [`FfStatus`] and writes its result through an
//! out-pointer; on failure a message is available from
//! [`ff_last_error_message`] on the same thread. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fracfactor::factor::{decide, Method, Property};
use fracfactor::graph::{construct_h, construct_l, is_h_graph};
use fracfactor::graph6::{from_graph6, to_graph6};
use fracfactor::spectral::{largest_eigenvalue, MatrixKind};
use fracfactor::{Error, FactorBounds, Graph};

pub const FF_MATRIX_ADJACENCY: u32 = 0;
pub const FF_MATRIX_SIGNLESS_LAPLACIAN: u32 = 1;
pub const FF_METHOD_STRUCTURAL: u32 = 0;
pub const FF_METHOD_LP: u32 = 1;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Capacity = 4,
    NoConvergence = 5,
    Disconnected = 6,
    BufferTooSmall = 7,
    Io = 8,
    Panic = 9,
}

/// Opaque graph handle.
pub struct FfGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> FfStatus {
    match e {
        Error::Graph6(_) | Error::AtLine { .. } => FfStatus::Parse,
        Error::CapExceeded { .. } => FfStatus::Capacity,
        Error::NoConvergence(_) => FfStatus::NoConvergence,
        Error::Disconnected(_) => FfStatus::Disconnected,
        Error::Io(_) => FfStatus::Io,
        _ => FfStatus::InvalidArgument,
    }
}

struct Failure(FfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FfStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FfStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            FfStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const FfGraph) -> Result<&'a Graph, Failure> {
    // SAFETY: the caller passes a handle obtained from this library.
    unsafe { g.as_ref() }
        .map(|h| &h.0)
        .ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; the caller guarantees it is writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn emit_graph(out: *mut *mut FfGraph, g: Graph) -> Result<(), Failure> {
    unsafe { write_out(out, Box::into_raw(Box::new(FfGraph(g)))) }
}

fn matrix_kind(matrix: u32) -> Result<MatrixKind, Failure> {
    match matrix {
        FF_MATRIX_ADJACENCY => Ok(MatrixKind::Adjacency),
        FF_MATRIX_SIGNLESS_LAPLACIAN => Ok(MatrixKind::SignlessLaplacian),
        _ => Err(Failure(
            FfStatus::InvalidArgument,
            format!("unknown matrix kind {matrix}"),
        )),
    }
}

fn method(m: u32) -> Result<Method, Failure> {
    match m {
        FF_METHOD_STRUCTURAL => Ok(Method::Structural),
        FF_METHOD_LP => Ok(Method::Lp),
        _ => Err(Failure(
            FfStatus::InvalidArgument,
            format!("unknown method {m}"),
        )),
    }
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut FfGraph,
) -> FfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: non-null C string per the contract above.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Failure(FfStatus::Parse, "graph6 text is not UTF-8".into()))?;
        let g = from_graph6(s)?;
        unsafe { emit_graph(out, g) }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_complete(n: usize, out: *mut *mut FfGraph) -> FfStatus {
    guard(|| unsafe { emit_graph(out, Graph::complete(n)?) })
}

/// `K_{a-1} ∇ (K_1 ∪ K_{n-a})`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_construct_h(
    n: usize,
    a: usize,
    out: *mut *mut FfGraph,
) -> FfStatus {
    guard(|| unsafe { emit_graph(out, construct_h(n, a)?) })
}

/// `K_{4a+1} ∇ (K_2 ∪ K_{n-4a-3})`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_construct_l(
    n: usize,
    a: usize,
    out: *mut *mut FfGraph,
) -> FfStatus {
    guard(|| unsafe { emit_graph(out, construct_l(n, a)?.graph) })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_free(g: *mut FfGraph) {
    if !g.is_null() {
        // SAFETY: created by Box::into_raw in emit_graph.
        let _ = catch_unwind(AssertUnwindSafe(|| drop(unsafe { Box::from_raw(g) })));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_vertex_count(g: *const FfGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::n)
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ff_graph_edge_count(g: *const FfGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::m)
}

/// Writes the graph6 encoding, NUL-terminated, into `buf` of `len` bytes.
/// `required` (if non-null) receives the needed size including the NUL;
/// `FF_STATUS_BUFFER_TOO_SMALL` is returned when `len` is smaller.
///
/// # Safety
/// `buf` must be writable for `len` bytes (or null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn ff_graph_to_graph6(
    g: *const FfGraph,
    buf: *mut c_char,
    len: usize,
    required: *mut usize,
) -> FfStatus {
    guard(|| {
        let text = to_graph6(unsafe { graph_ref(g) }?)?;
        let need = text.len() + 1;
        if !required.is_null() {
            unsafe { required.write(need) };
        }
        if len < need {
            return Err(Failure(
                FfStatus::BufferTooSmall,
                format!("graph6 needs {need} bytes, got {len}"),
            ));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        // SAFETY: buf has room for need <= len bytes.
        unsafe {
            ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
            buf.add(text.len()).write(0);
        }
        Ok(())
    })
}

/// Largest eigenvalue of the adjacency (`FF_MATRIX_ADJACENCY`) or signless
/// Laplacian (`FF_MATRIX_SIGNLESS_LAPLACIAN`) matrix.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_spectral_radius(
    g: *const FfGraph,
    matrix: u32,
    tol: f64,
    out: *mut f64,
) -> FfStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let value = largest_eigenvalue(&matrix_kind(matrix)?.of(g), tol)?.value;
        unsafe { write_out(out, value) }
    })
}

unsafe fn decide_into(
    g: *const FfGraph,
    a: u32,
    b: u32,
    m: u32,
    property: Property,
    out: *mut bool,
) -> FfStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let verdict = decide(g, FactorBounds::new(a, b)?, property, method(m)?)?;
        unsafe { write_out(out, verdict.holds) }
    })
}

/// Fractional `[a,b]`-coveredness by `FF_METHOD_STRUCTURAL` or `FF_METHOD_LP`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_is_covered(
    g: *const FfGraph,
    a: u32,
    b: u32,
    method: u32,
    out: *mut bool,
) -> FfStatus {
    unsafe { decide_into(g, a, b, method, Property::Covered, out) }
}

/// Existence of a fractional `[a,b]`-factor.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_has_factor(
    g: *const FfGraph,
    a: u32,
    b: u32,
    method: u32,
    out: *mut bool,
) -> FfStatus {
    unsafe { decide_into(g, a, b, method, Property::Factor, out) }
}

/// Whether the graph is isomorphic to `H(n,a)` with `n` its order.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_is_h_graph(g: *const FfGraph, a: usize, out: *mut bool) -> FfStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write_out(out, is_h_graph(g, a)) }
    })
}

/// The coveredness verdict with its certificate as a JSON string. Release it
/// with [`ff_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ff_covered_certificate_json(
    g: *const FfGraph,
    a: u32,
    b: u32,
    method: u32,
    out: *mut *mut c_char,
) -> FfStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let verdict = decide(
            g,
            FactorBounds::new(a, b)?,
            Property::Covered,
            self::method(method)?,
        )?;
        let text =
            serde_json::to_string(&verdict).map_err(|e| Failure(FfStatus::Io, e.to_string()))?;
        let c =
            CString::new(text).map_err(|_| Failure(FfStatus::Io, "JSON contained NUL".into()))?;
        unsafe { write_out(out, c.into_raw()) }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ff_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ff_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ff_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(status_of(&from_graph6("").unwrap_err()), FfStatus::Parse);
        assert_eq!(
            status_of(&FactorBounds::new(3, 2).unwrap_err()),
            FfStatus::InvalidArgument
        );
        assert_eq!(
            status_of(&Error::NoConvergence(10)),
            FfStatus::NoConvergence
        );
    }

    #[test]
    fn panics_become_a_status() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, FfStatus::Panic);
        let msg = unsafe { CStr::from_ptr(ff_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "internal panic");
    }

    #[test]
    fn interior_nul_in_messages_is_replaced() {
        set_last_error("a\0b");
        let msg = unsafe { CStr::from_ptr(ff_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "a b");
    }
}
