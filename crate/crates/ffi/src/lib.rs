//! C ABI over `girth7`.
//!
//! Graphs and reports are opaque heap handles released with the matching
//! `*_free` function. Every call returns a [`G7Status`]; on failure the
//! message is available from [`g7_last_error`] on the same thread.
//! Strings returned through out-parameters are released with [`g7_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use girth7::classify::{classify, ClassificationReport};
use girth7::cycles::{girth, girth_regular_signature};
use girth7::families::{a_graph, cayley_446, coxeter, gen_petersen};
use girth7::graph::{parse_graph6, write_graph6, SimpleGraph};
use girth7::maps::klein_map;
use girth7::schemes::{k77_cyclic_scheme, truncate};
use girth7::symmetry::{are_isomorphic, automorphism_group};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G7Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    DomainError = 5,
    Overflow = 6,
    Panic = 7,
}

/// Opaque cubic or general simple graph.
pub struct G7Graph {
    inner: SimpleGraph,
}

/// Opaque classification report.
pub struct G7Report {
    inner: ClassificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

type FfiResult<T> = Result<T, (G7Status, String)>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> G7Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => G7Status::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            G7Status::Panic
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> (G7Status, String) {
    (G7Status::DomainError, e.to_string())
}

fn invalid<E: std::fmt::Display>(e: E) -> (G7Status, String) {
    (G7Status::InvalidArgument, e.to_string())
}

fn null(what: &str) -> (G7Status, String) {
    (G7Status::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const G7Graph) -> FfiResult<&'a SimpleGraph> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_graph(out: *mut *mut G7Graph, g: SimpleGraph) -> FfiResult<()> {
    write_out(out, Box::into_raw(Box::new(G7Graph { inner: g })))
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|e| (G7Status::InvalidArgument, e.to_string()))?;
    write_out(out, c.into_raw())
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn g7_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut G7Graph,
) -> G7Status {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (G7Status::InvalidUtf8, e.to_string()))?;
        let g = parse_graph6(s.trim()).map_err(|e| (G7Status::ParseError, e.to_string()))?;
        emit_graph(out, g)
    })
}

/// Encodes a graph as graph6; free the result with [`g7_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_to_graph6(g: *const G7Graph, out: *mut *mut c_char) -> G7Status {
    guard(|| emit_string(out, write_graph6(graph_ref(g)?)))
}

/// Builds the graph on `n` vertices from `edges`, a flat array of `2 * m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn g7_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut G7Graph,
) -> G7Status {
    guard(|| {
        let flat: &[usize] = match (edges.is_null(), m) {
            (_, 0) => &[],
            (true, _) => return Err(null("edges")),
            (false, _) => std::slice::from_raw_parts(edges, 2 * m),
        };
        let g = SimpleGraph::new(n, flat.chunks(2).map(|c| (c[0], c[1]))).map_err(invalid)?;
        emit_graph(out, g)
    })
}

/// A(n) for `n >= 8`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_a(n: usize, out: *mut *mut G7Graph) -> G7Status {
    guard(|| emit_graph(out, a_graph(n).map_err(invalid)?))
}

/// Generalized Petersen graph Pet(n, k).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_petersen(n: usize, k: usize, out: *mut *mut G7Graph) -> G7Status {
    guard(|| emit_graph(out, gen_petersen(n, k).map_err(invalid)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_coxeter(out: *mut *mut G7Graph) -> G7Status {
    guard(|| emit_graph(out, coxeter()))
}

/// Cayley graph of the order-12i group with signature (4,4,6), `i >= 3`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_cayley446(i: usize, out: *mut *mut G7Graph) -> G7Status {
    guard(|| emit_graph(out, cayley_446(i).map_err(invalid)?))
}

/// Skeleton of the rotary {7,3} map on 56 vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_klein(out: *mut *mut G7Graph) -> G7Status {
    guard(|| emit_graph(out, klein_map().map_err(domain)?.skeleton().clone()))
}

/// Truncation of K_{7,7} under its cyclic scheme.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_k77_truncation(out: *mut *mut G7Graph) -> G7Status {
    guard(|| {
        let (base, scheme) = k77_cyclic_scheme();
        emit_graph(out, truncate(&base, &scheme).map_err(domain)?.0)
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_order(g: *const G7Graph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_size(g: *const G7Graph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.size())
}

/// Girth; `DomainError` for forests.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_girth(g: *const G7Graph, out: *mut usize) -> G7Status {
    guard(|| {
        let gi = girth(graph_ref(g)?).ok_or_else(|| domain("graph is acyclic"))?;
        write_out(out, gi)
    })
}

/// Common girth signature of a girth-regular cubic graph, sorted ascending.
///
/// # Safety
/// `g` must be a live handle; `out` must point to 3 writable values.
#[no_mangle]
pub unsafe extern "C" fn g7_signature(g: *const G7Graph, out: *mut usize) -> G7Status {
    guard(|| {
        let s = girth_regular_signature(graph_ref(g)?).map_err(domain)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        std::slice::from_raw_parts_mut(out, 3).copy_from_slice(&s.0);
        Ok(())
    })
}

/// Automorphism group order; `Overflow` if it exceeds 64 bits.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_automorphism_group_order(g: *const G7Graph, out: *mut u64) -> G7Status {
    guard(|| {
        let order = automorphism_group(graph_ref(g)?).order().clone();
        let small = u64::try_from(&order)
            .map_err(|_| (G7Status::Overflow, format!("order {order} exceeds 64 bits")))?;
        write_out(out, small)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_is_vertex_transitive(g: *const G7Graph, out: *mut bool) -> G7Status {
    guard(|| write_out(out, automorphism_group(graph_ref(g)?).is_transitive()))
}

/// Whether two graphs are isomorphic.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_are_isomorphic(
    a: *const G7Graph,
    b: *const G7Graph,
    out: *mut bool,
) -> G7Status {
    guard(|| write_out(out, are_isomorphic(graph_ref(a)?, graph_ref(b)?).is_some()))
}

/// Classifies a cubic vertex-transitive graph of girth 7. Preconditions
/// that fail (girth, transitivity, ...) give `DomainError`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_classify(g: *const G7Graph, out: *mut *mut G7Report) -> G7Status {
    guard(|| {
        let report = classify(graph_ref(g)?).map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(G7Report { inner: report })))
    })
}

/// Case number 1..=5 of a report, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn g7_report_case(r: *const G7Report) -> u32 {
    r.as_ref().map_or(0, |r| r.inner.case.number() as u32)
}

/// Report as JSON; free the result with [`g7_string_free`].
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g7_report_json(r: *const G7Report, out: *mut *mut c_char) -> G7Status {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        emit_string(out, r.inner.to_json())
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn g7_graph_free(g: *mut G7Graph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `r` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn g7_report_free(r: *mut G7Report) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn g7_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
