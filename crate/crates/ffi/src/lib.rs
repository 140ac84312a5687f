//! C interface. Graphs and decompositions are opaque handles owned by the
//! caller and released with their `_free` functions. Every fallible call
//! returns a [`CwStatus`]; the message of the last failure on the calling
//! thread is available from [`cw_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use circumwidth::bounds::{compose_blockwise, thm1_decompose};
use circumwidth::decomp::validate;
use circumwidth::ep::thm2_pipeline;
use circumwidth::graph::io::{parse_graph, Format};
use circumwidth::oracles::{circumference, exact_pathwidth, OracleBudget};
use circumwidth::{Error, Graph, PathDecomposition};

/// Status codes; the nonzero values below 5 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    Verification = 1,
    Parse = 2,
    Precondition = 3,
    Budget = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwFormat {
    EdgeList = 0,
    Graph6 = 1,
}

/// Opaque graph handle.
pub struct CwGraph(Graph);

/// Opaque path decomposition handle.
pub struct CwDecomposition(PathDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CwStatus {
    match e.exit_code() {
        1 => CwStatus::Verification,
        2 => CwStatus::Parse,
        4 => CwStatus::Budget,
        _ => CwStatus::Precondition,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), CwStatus>) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CwStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            CwStatus::Panic
        }
    }
}

fn fail(e: Error) -> CwStatus {
    set_error(&e.to_string());
    status_of(&e)
}

unsafe fn graph_ref<'a>(g: *const CwGraph) -> Result<&'a Graph, CwStatus> {
    if g.is_null() {
        set_error("null graph handle");
        return Err(CwStatus::NullPointer);
    }
    Ok(&(*g).0)
}

unsafe fn decomposition_ref<'a>(d: *const CwDecomposition) -> Result<&'a PathDecomposition, CwStatus> {
    if d.is_null() {
        set_error("null decomposition handle");
        return Err(CwStatus::NullPointer);
    }
    Ok(&(*d).0)
}

fn check_out<T>(out: *mut T) -> Result<(), CwStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(CwStatus::NullPointer);
    }
    Ok(())
}

/// Message of the last failure on this thread; valid until the next call
/// that fails on the same thread. Never null.
#[no_mangle]
pub extern "C" fn cw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// A graph with `n` vertices and no edges.
#[no_mangle]
pub extern "C" fn cw_graph_new(n: usize) -> *mut CwGraph {
    Box::into_raw(Box::new(CwGraph(Graph::new(n))))
}

/// # Safety
/// `g` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_add_edge(g: *mut CwGraph, u: usize, v: usize) -> CwStatus {
    guard(|| {
        if g.is_null() {
            set_error("null graph handle");
            return Err(CwStatus::NullPointer);
        }
        (*g).0.add_edge(u, v).map_err(fail)
    })
}

/// Parses a NUL-terminated graph text.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_parse(text: *const c_char, format: CwFormat, out: *mut *mut CwGraph) -> CwStatus {
    guard(|| {
        check_out(out)?;
        if text.is_null() {
            set_error("null text");
            return Err(CwStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("input is not UTF-8");
            CwStatus::Parse
        })?;
        let f = match format {
            CwFormat::EdgeList => Format::EdgeList,
            CwFormat::Graph6 => Format::Graph6,
        };
        let g = parse_graph(s, f).map_err(fail)?;
        *out = Box::into_raw(Box::new(CwGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_free(g: *mut CwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_vertex_count(g: *const CwGraph) -> usize {
    graph_ref(g).map_or(0, Graph::n)
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_edge_count(g: *const CwGraph) -> usize {
    graph_ref(g).map_or(0, Graph::m)
}

/// Depth-first decomposition of a 2-connected graph; `t = 0` uses the exact
/// circumference.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_decompose_thm1(g: *const CwGraph, t: usize, out: *mut *mut CwDecomposition) -> CwStatus {
    guard(|| {
        check_out(out)?;
        let g = graph_ref(g)?;
        let cert = thm1_decompose(g, (t > 0).then_some(t)).map_err(fail)?;
        *out = Box::into_raw(Box::new(CwDecomposition(cert.decomposition)));
        Ok(())
    })
}

/// Block-by-block decomposition of any graph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_compose_lemma2(g: *const CwGraph, out: *mut *mut CwDecomposition) -> CwStatus {
    guard(|| {
        check_out(out)?;
        let g = graph_ref(g)?;
        let r = compose_blockwise(g).map_err(fail)?;
        *out = Box::into_raw(Box::new(CwDecomposition(r.decomposition)));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_free(d: *mut CwDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Width, or -1 for an empty or null decomposition.
///
/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_width(d: *const CwDecomposition) -> isize {
    decomposition_ref(d).ok().and_then(|d| d.width().ok()).map_or(-1, |w| w as isize)
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_bag_count(d: *const CwDecomposition) -> usize {
    decomposition_ref(d).map_or(0, PathDecomposition::len)
}

/// Copies bag `i` into `buf` (capacity `cap`) and stores its size in
/// `out_len`. With a short buffer only `out_len` is written.
///
/// # Safety
/// `d` must be a live handle, `buf` valid for `cap` writes, `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_bag(
    d: *const CwDecomposition,
    i: usize,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CwStatus {
    guard(|| {
        check_out(out_len)?;
        let d = decomposition_ref(d)?;
        let Some(bag) = d.bags().get(i) else {
            set_error(&format!("bag {i} out of range"));
            return Err(CwStatus::Precondition);
        };
        *out_len = bag.len();
        if cap >= bag.len() && !bag.is_empty() {
            check_out(buf)?;
            ptr::copy_nonoverlapping(bag.as_ptr(), buf, bag.len());
        }
        Ok(())
    })
}

/// Checks `d` against `g`; `*out_valid` reports the verdict.
///
/// # Safety
/// Both handles must be live and `out_valid` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_validate(
    g: *const CwGraph,
    d: *const CwDecomposition,
    out_valid: *mut bool,
) -> CwStatus {
    guard(|| {
        check_out(out_valid)?;
        let report = validate(graph_ref(g)?, decomposition_ref(d)?).map_err(fail)?;
        *out_valid = report.valid;
        Ok(())
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// The `{"width", "bags"}` certificate; release with [`cw_string_free`].
///
/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_decomposition_to_json(d: *const CwDecomposition) -> *mut c_char {
    match decomposition_ref(d) {
        Ok(d) => into_c_string(serde_json::to_string(&d.to_json()).expect("plain data")),
        Err(_) => ptr::null_mut(),
    }
}

/// Runs the decomposition-or-packing pipeline and returns its JSON report in
/// `*out`; release it with [`cw_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_pipeline_thm2_json(g: *const CwGraph, k: usize, t: usize, out: *mut *mut c_char) -> CwStatus {
    guard(|| {
        check_out(out)?;
        let g = graph_ref(g)?;
        let outcome = thm2_pipeline(g, k, t, None).map_err(fail)?;
        outcome.verify(g).map_err(fail)?;
        *out = into_c_string(outcome.to_json_value().to_string());
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact circumference (0 for acyclic graphs).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_circumference(g: *const CwGraph, out: *mut usize) -> CwStatus {
    guard(|| {
        check_out(out)?;
        *out = circumference(graph_ref(g)?, &OracleBudget::CYCLES).map_err(fail)?;
        Ok(())
    })
}

/// Exact pathwidth.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_pathwidth(g: *const CwGraph, out: *mut usize) -> CwStatus {
    guard(|| {
        check_out(out)?;
        *out = exact_pathwidth(graph_ref(g)?, &OracleBudget::PATHWIDTH).map_err(fail)?.width;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_round_trip() {
        unsafe {
            let text = CString::new("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
            let mut g = ptr::null_mut();
            assert_eq!(cw_graph_parse(text.as_ptr(), CwFormat::EdgeList, &mut g), CwStatus::Ok);
            assert_eq!(cw_graph_vertex_count(g), 4);
            let mut d = ptr::null_mut();
            assert_eq!(cw_decompose_thm1(g, 0, &mut d), CwStatus::Ok);
            assert_eq!(cw_decomposition_width(d), 3);
            let mut valid = false;
            assert_eq!(cw_decomposition_validate(g, d, &mut valid), CwStatus::Ok);
            assert!(valid);
            let mut buf = [0usize; 8];
            let mut len = 0;
            assert_eq!(cw_decomposition_bag(d, 0, buf.as_mut_ptr(), buf.len(), &mut len), CwStatus::Ok);
            assert!(len >= 1);
            cw_decomposition_free(d);
            cw_graph_free(g);
        }
    }

    #[test]
    fn errors_carry_codes_and_messages() {
        unsafe {
            let path = cw_graph_new(3);
            assert_eq!(cw_graph_add_edge(path, 0, 1), CwStatus::Ok);
            assert_eq!(cw_graph_add_edge(path, 1, 2), CwStatus::Ok);
            assert_eq!(cw_graph_add_edge(path, 1, 2), CwStatus::Precondition);
            let mut d = ptr::null_mut();
            assert_eq!(cw_decompose_thm1(path, 0, &mut d), CwStatus::Precondition);
            let msg = CStr::from_ptr(cw_last_error()).to_str().unwrap();
            assert!(msg.contains("2-connected"), "{msg}");
            assert_eq!(cw_decompose_thm1(ptr::null(), 0, &mut d), CwStatus::NullPointer);
            let bad = CString::new("3 1\n0 7\n").unwrap();
            let mut g = ptr::null_mut();
            assert_ne!(cw_graph_parse(bad.as_ptr(), CwFormat::EdgeList, &mut g), CwStatus::Ok);
            cw_graph_free(path);
        }
    }
}
