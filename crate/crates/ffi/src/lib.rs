//! C interface to polycut.
//!
//! Objects cross the boundary as opaque pointers that the caller releases
//! with the matching `*_free` function. Every fallible call returns a
//! [`PolycutStatus`] and writes its result through an out-pointer; on
//! failure, [`polycut_last_error_message`] describes what went wrong on the
//! calling thread. Strings returned by the library are released with
//! [`polycut_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polycut::complex::BoundaryComplex;
use polycut::cuts::{global_min_cut, min_nontrivial_cut, Cut, Graph};
use polycut::formats::{canonical_json, complex_from_json, complex_to_json};
use polycut::generators::{cyclic, ladder_stacked, random_plane_triangulation, simplex, waist_polytope};
use polycut::verify::verify_waist;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolycutStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    InvalidComplex = 4,
    /// The requested object does not exist, e.g. a nontrivial cut of a
    /// graph with fewer than four vertices.
    NotFound = 5,
    Panic = 99,
}

/// Boundary complex of a simplicial polytope.
pub struct PolycutComplex(BoundaryComplex);

/// Simple undirected graph.
pub struct PolycutGraph(Graph);

/// Edge cut with its canonical side.
pub struct PolycutCut(Cut);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Error(PolycutStatus, String);

impl Error {
    fn new(status: PolycutStatus, message: impl ToString) -> Self {
        Error(status, message.to_string())
    }
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn guard<F: FnOnce() -> Result<(), Error>>(f: F) -> PolycutStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PolycutStatus::Ok,
        Ok(Err(Error(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            PolycutStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Error> {
    if p.is_null() {
        Err(Error::new(PolycutStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

/// Moves `value` to the heap and stores it in `*out`.
unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Error> {
    non_null(out, "out")?;
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Error> {
    non_null(out, "out")?;
    let s = CString::new(s).map_err(|e| Error::new(PolycutStatus::InvalidArgument, e))?;
    *out = s.into_raw();
    Ok(())
}

fn invalid(e: impl ToString) -> Error {
    Error::new(PolycutStatus::InvalidArgument, e)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn polycut_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn polycut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- complexes ----

/// Boundary of the `d`-simplex.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_simplex(d: usize, out: *mut *mut PolycutComplex) -> PolycutStatus {
    guard(|| emit(out, PolycutComplex(simplex(d).map_err(invalid)?)))
}

/// Cyclic `d`-polytope on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_cyclic(d: usize, n: usize, out: *mut *mut PolycutComplex) -> PolycutStatus {
    guard(|| emit(out, PolycutComplex(cyclic(d, n).map_err(invalid)?)))
}

/// Stacked `d`-polytope on `2d` vertices with disjoint facets
/// `{0..d-1}` and `{d..2d-1}`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_ladder_stacked(d: usize, out: *mut *mut PolycutComplex) -> PolycutStatus {
    guard(|| emit(out, PolycutComplex(ladder_stacked(d).map_err(invalid)?.complex)))
}

/// The `C # S # C` polytope for `d >= 4`. When `left_out` is not null it
/// receives the first copy of `C` as a cut certificate.
///
/// # Safety
/// `out` must be a valid pointer; `left_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn polycut_waist(
    d: usize,
    out: *mut *mut PolycutComplex,
    left_out: *mut *mut PolycutCut,
) -> PolycutStatus {
    guard(|| {
        non_null(out, "out")?;
        let w = waist_polytope(d).map_err(invalid)?;
        if !left_out.is_null() {
            let g = w.complex.skeleton_graph().map_err(invalid)?;
            let cut = polycut::cuts::crossing_edges(&g, &w.left).map_err(invalid)?;
            emit(left_out, PolycutCut(cut))?;
        }
        emit(out, PolycutComplex(w.complex))
    })
}

/// Random plane triangulation on `v` vertices after up to `flips` flips.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_plane_triangulation(
    v: usize,
    flips: usize,
    seed: u64,
    out: *mut *mut PolycutComplex,
) -> PolycutStatus {
    guard(|| {
        let t = random_plane_triangulation(v, flips, seed).map_err(invalid)?;
        emit(out, PolycutComplex(t.complex))
    })
}

/// Parses the JSON complex format `{"dim":d,"n":n,"facets":[[...],...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_from_json(json: *const c_char, out: *mut *mut PolycutComplex) -> PolycutStatus {
    guard(|| {
        non_null(json, "json")?;
        let text = CStr::from_ptr(json).to_str().map_err(|e| Error::new(PolycutStatus::ParseError, e))?;
        let c = complex_from_json(text).map_err(|e| Error::new(PolycutStatus::ParseError, e))?;
        emit(out, PolycutComplex(c))
    })
}

/// Canonical JSON of `c`; release with [`polycut_string_free`].
///
/// # Safety
/// `c` must be a live complex; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_to_json(c: *const PolycutComplex, out: *mut *mut c_char) -> PolycutStatus {
    guard(|| {
        non_null(c, "complex")?;
        emit_string(out, complex_to_json(&(*c).0))
    })
}

/// Non-zero when `c` passes structural validation. Null gives 0.
///
/// # Safety
/// `c` must be null or a live complex.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_is_valid(c: *const PolycutComplex) -> bool {
    !c.is_null() && (*c).0.validate().is_valid()
}

/// # Safety
/// `c` must be null or a live complex.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_dim(c: *const PolycutComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.dim())
}

/// # Safety
/// `c` must be null or a live complex.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_vertex_count(c: *const PolycutComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.vertex_count())
}

/// # Safety
/// `c` must be null or a live complex.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_facet_count(c: *const PolycutComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.facet_count())
}

/// Edge graph of a valid complex.
///
/// # Safety
/// `c` must be a live complex; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_skeleton(c: *const PolycutComplex, out: *mut *mut PolycutGraph) -> PolycutStatus {
    guard(|| {
        non_null(c, "complex")?;
        let g = (*c).0.skeleton_graph().map_err(|e| Error::new(PolycutStatus::InvalidComplex, e))?;
        emit(out, PolycutGraph(g))
    })
}

/// # Safety
/// `c` must be null or a complex from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polycut_complex_free(c: *mut PolycutComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

// ---- graphs ----

/// Graph on `n` vertices from `m` edges stored as `2m` consecutive
/// endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` values (or be null when `m = 0`); `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut PolycutGraph,
) -> PolycutStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else {
            non_null(edges, "edges")?;
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let g = Graph::from_edges(n, flat.chunks(2).map(|e| (e[0], e[1]))).map_err(invalid)?;
        emit(out, PolycutGraph(g))
    })
}

/// # Safety
/// `g` must be null or a live graph.
#[no_mangle]
pub unsafe extern "C" fn polycut_graph_vertex_count(g: *const PolycutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be null or a live graph.
#[no_mangle]
pub unsafe extern "C" fn polycut_graph_edge_count(g: *const PolycutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be null or a live graph.
#[no_mangle]
pub unsafe extern "C" fn polycut_graph_min_degree(g: *const PolycutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.min_degree())
}

/// # Safety
/// `g` must be null or a graph from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polycut_graph_free(g: *mut PolycutGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---- cuts ----

/// Global minimum cut of a connected graph.
///
/// # Safety
/// `g` must be a live graph; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_global_min_cut(g: *const PolycutGraph, out: *mut *mut PolycutCut) -> PolycutStatus {
    guard(|| {
        non_null(g, "graph")?;
        emit(out, PolycutCut(global_min_cut(&(*g).0).map_err(invalid)?))
    })
}

/// Minimum cut with at least two vertices on each side;
/// `POLYCUT_STATUS_NOT_FOUND` for graphs with fewer than four vertices.
///
/// # Safety
/// `g` must be a live graph; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_min_nontrivial_cut(g: *const PolycutGraph, out: *mut *mut PolycutCut) -> PolycutStatus {
    guard(|| {
        non_null(g, "graph")?;
        match min_nontrivial_cut(&(*g).0).map_err(invalid)? {
            Some(cut) => emit(out, PolycutCut(cut)),
            None => Err(Error::new(PolycutStatus::NotFound, "graph has fewer than four vertices")),
        }
    })
}

/// # Safety
/// `cut` must be null or a live cut.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_size(cut: *const PolycutCut) -> usize {
    cut.as_ref().map_or(0, |c| c.0.size)
}

/// # Safety
/// `cut` must be null or a live cut.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_is_trivial(cut: *const PolycutCut) -> bool {
    cut.as_ref().is_some_and(|c| c.0.trivial)
}

/// Number of vertices on the canonical side.
///
/// # Safety
/// `cut` must be null or a live cut.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_side_len(cut: *const PolycutCut) -> usize {
    cut.as_ref().map_or(0, |c| c.0.side.len())
}

/// Copies the canonical side into `buf`, which holds `len` entries;
/// `len` must be at least [`polycut_cut_side_len`].
///
/// # Safety
/// `cut` must be a live cut; `buf` must be writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_side(cut: *const PolycutCut, buf: *mut usize, len: usize) -> PolycutStatus {
    guard(|| {
        non_null(cut, "cut")?;
        let side = &(*cut).0.side;
        if len < side.len() {
            return Err(invalid(format!("buffer holds {len} entries, side has {}", side.len())));
        }
        if !side.is_empty() {
            non_null(buf, "buf")?;
            ptr::copy_nonoverlapping(side.as_ptr(), buf, side.len());
        }
        Ok(())
    })
}

/// Canonical JSON of the cut; release with [`polycut_string_free`].
///
/// # Safety
/// `cut` must be a live cut; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_to_json(cut: *const PolycutCut, out: *mut *mut c_char) -> PolycutStatus {
    guard(|| {
        non_null(cut, "cut")?;
        emit_string(out, canonical_json(&(*cut).0))
    })
}

/// # Safety
/// `cut` must be null or a cut from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polycut_cut_free(cut: *mut PolycutCut) {
    if !cut.is_null() {
        drop(Box::from_raw(cut));
    }
}

// ---- verification ----

/// Runs the waist-construction check for dimension `d`. `passed` receives
/// the verdict; `report_json`, when not null, receives the full report.
///
/// # Safety
/// `passed` must be a valid pointer; `report_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn polycut_verify_waist(d: usize, passed: *mut bool, report_json: *mut *mut c_char) -> PolycutStatus {
    guard(|| {
        non_null(passed, "passed")?;
        let r = verify_waist(d).map_err(invalid)?;
        *passed = r.passed;
        if !report_json.is_null() {
            emit_string(report_json, canonical_json(&r))?;
        }
        Ok(())
    })
}
