//! C interface to `polycomp`.
//!
//! Graphs and censuses cross the boundary as opaque handles that the caller
//! frees with the matching `*_free` function. Every fallible call returns a
//! [`PcStatus`] and writes its result through an out-pointer; strings
//! returned this way are NUL-terminated and freed with [`pc_string_free`].
//! Panics are caught at the boundary and reported as `PC_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use polycomp::classify::{is_polyhedral, solve_question, PRUNED_LIMITS};
use polycomp::connectivity::is_3_connected;
use polycomp::duality::{dual, is_self_dual};
use polycomp::enumeration::{enumerate_by_size, enumerate_polyhedra, Census};
use polycomp::graph6;
use polycomp::isomorphism::{are_isomorphic, canonical_form, is_self_complementary};
use polycomp::planarity::is_planar;
use polycomp::Graph;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotPolyhedral = 4,
    OutOfRange = 5,
    Internal = 6,
}

/// Opaque graph handle.
pub struct PcGraph {
    graph: Graph,
}

/// Opaque list of polyhedra.
pub struct PcCensus {
    graphs: Vec<Graph>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PcProperties {
    pub planar: bool,
    pub three_connected: bool,
    pub polyhedral: bool,
    pub self_dual: bool,
    pub self_complementary: bool,
}

fn guard(f: impl FnOnce() -> Result<(), PcStatus> + UnwindSafe) -> PcStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => PcStatus::Internal,
    }
}

unsafe fn graph_ref<'a>(g: *const PcGraph) -> Result<&'a Graph, PcStatus> {
    g.as_ref().map(|h| &h.graph).ok_or(PcStatus::NullPointer)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), PcStatus> {
    if out.is_null() {
        return Err(PcStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn new_graph(graph: Graph) -> *mut PcGraph {
    Box::into_raw(Box::new(PcGraph { graph }))
}

fn new_string(s: String) -> Result<*mut c_char, PcStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| PcStatus::Internal)
}

/// Static description of a status code. Never NULL; do not free.
#[no_mangle]
pub extern "C" fn pc_status_message(status: PcStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        PcStatus::Ok => c"ok",
        PcStatus::NullPointer => c"null pointer argument",
        PcStatus::InvalidUtf8 => c"string is not valid UTF-8",
        PcStatus::ParseError => c"malformed graph6",
        PcStatus::NotPolyhedral => c"graph is not polyhedral",
        PcStatus::OutOfRange => c"parameters outside the supported range",
        PcStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Parses one graph6 line into a new graph handle.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        if text.is_null() {
            return Err(PcStatus::NullPointer);
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| PcStatus::InvalidUtf8)?;
        let g = graph6::decode(s).map_err(|_| PcStatus::ParseError)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        put(out, new_graph(g))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_order(g: *const PcGraph) -> usize {
    graph_ref(g).map_or(0, Graph::order)
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_size(g: *const PcGraph) -> usize {
    graph_ref(g).map_or(0, Graph::size)
}

/// # Safety
/// `g` must be NULL or a live graph handle; `out` must be NULL or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_to_graph6(g: *const PcGraph, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        put(out, new_string(graph6::encode(g))?)
    })
}

/// Hex string of the canonical form; equal strings mean isomorphic graphs.
///
/// # Safety
/// As for [`pc_graph_to_graph6`].
#[no_mangle]
pub unsafe extern "C" fn pc_graph_certificate_hex(
    g: *const PcGraph,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        put(out, new_string(canonical_form(g).to_hex())?)
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be NULL or a live graph handle; `out` must be NULL or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_complement(
    g: *const PcGraph,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        put(out, new_graph(g.complement()))
    })
}

/// Dual of a polyhedron; `PC_STATUS_NOT_POLYHEDRAL` otherwise.
///
/// # Safety
/// As for [`pc_graph_complement`].
#[no_mangle]
pub unsafe extern "C" fn pc_graph_dual(g: *const PcGraph, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        let d = dual(g).map_err(|_| PcStatus::NotPolyhedral)?;
        put(out, new_graph(d))
    })
}

/// `self_dual` is false for graphs that are not polyhedral.
///
/// # Safety
/// `g` must be NULL or a live graph handle; `out` must be NULL or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_properties(
    g: *const PcGraph,
    out: *mut PcProperties,
) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let polyhedral = is_polyhedral(g);
        let props = PcProperties {
            planar: is_planar(g),
            three_connected: is_3_connected(g),
            polyhedral,
            self_dual: polyhedral && is_self_dual(g).unwrap_or(false),
            self_complementary: is_self_complementary(g),
        };
        put(out, props)
    })
}

/// # Safety
/// `a` and `b` must be NULL or live graph handles; `out` must be NULL or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_is_isomorphic(
    a: *const PcGraph,
    b: *const PcGraph,
    out: *mut bool,
) -> PcStatus {
    guard(|| {
        let (a, b) = (graph_ref(a)?, graph_ref(b)?);
        put(out, are_isomorphic(a, b))
    })
}

/// Polyhedra with `q` edges and, when `p >= 0`, exactly `p` vertices,
/// sorted by canonical form. Sizes below 6 and anything beyond 9 vertices
/// or 14 edges give `PC_STATUS_OUT_OF_RANGE`.
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_census_enumerate(q: u32, p: i32, out: *mut *mut PcCensus) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        let q = q as usize;
        let graphs = match usize::try_from(p) {
            Ok(p) => enumerate_polyhedra(p, q),
            Err(_) => enumerate_by_size(q),
        }
        .map_err(|_| PcStatus::OutOfRange)?;
        put(out, Box::into_raw(Box::new(PcCensus { graphs })))
    })
}

/// # Safety
/// `c` must be NULL or a live census handle.
#[no_mangle]
pub unsafe extern "C" fn pc_census_len(c: *const PcCensus) -> usize {
    c.as_ref().map_or(0, |c| c.graphs.len())
}

/// A new graph handle holding a copy of entry `index`.
///
/// # Safety
/// `c` must be NULL or a live census handle; `out` must be NULL or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pc_census_get(
    c: *const PcCensus,
    index: usize,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        let c = c.as_ref().ok_or(PcStatus::NullPointer)?;
        let g = *c.graphs.get(index).ok_or(PcStatus::OutOfRange)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        put(out, new_graph(g))
    })
}

/// # Safety
/// `c` must be NULL or a census handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pc_census_free(c: *mut PcCensus) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Runs the classification and returns its report as JSON.
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_classify_report_json(out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        let census = Census::generate(PRUNED_LIMITS);
        let report = solve_question(&census).map_err(|_| PcStatus::Internal)?;
        put(out, new_string(report.to_json())?)
    })
}
