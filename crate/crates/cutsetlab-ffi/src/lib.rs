//! C ABI over the cutsetlab core: opaque graph handles, integer error codes,
//! and JSON strings for structured results.
//!
//! The companion header lives at `include/cutsetlab.h` and is maintained by
//! hand; keep the two in sync when adding functions.
//!
//! Conventions: every function returns a `CslStatus` code; outputs go through
//! out-pointers. Strings returned via `char**` are NUL-terminated, UTF-8, and
//! must be released with `csl_string_free`. Graph handles must be released
//! with `csl_graph_free`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cutsetlab::complex::delta_complex;
use cutsetlab::cutset::{cut_sets, is_unmixed};
use cutsetlab::graph::Graph;
use cutsetlab::system::is_accessible_graph;
use cutsetlab::verify::satisfies_s2;

/// Status codes shared with the header.
pub const CSL_OK: i32 = 0;
pub const CSL_NULL_ARGUMENT: i32 = 1;
pub const CSL_INVALID_UTF8: i32 = 2;
pub const CSL_PARSE_ERROR: i32 = 3;
pub const CSL_UNSUPPORTED: i32 = 4;
pub const CSL_INTERNAL_ERROR: i32 = 5;

/// Opaque graph handle; the C side only ever holds pointers to it.
pub struct CslGraph(Graph);

fn catch<F: FnOnce() -> i32>(f: F) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CSL_INTERNAL_ERROR)
}

/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
unsafe fn parse_with(
    text: *const c_char,
    out: *mut *mut CslGraph,
    parse: fn(&str) -> cutsetlab::Result<Graph>,
) -> i32 {
    if text.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    let s = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => return CSL_INVALID_UTF8,
    };
    catch(|| match parse(s) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(CslGraph(g)));
            CSL_OK
        }
        Err(_) => CSL_PARSE_ERROR,
    })
}

/// Parses the adjacency-list text format.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn csl_graph_parse_text(
    text: *const c_char,
    out: *mut *mut CslGraph,
) -> i32 {
    parse_with(text, out, Graph::parse_text)
}

/// Parses a header-less graph6 string.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn csl_graph_parse_graph6(
    text: *const c_char,
    out: *mut *mut CslGraph,
) -> i32 {
    parse_with(text, out, |s| Graph::parse_graph6(s.trim()))
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be a pointer returned by a `csl_graph_parse_*` function, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn csl_graph_free(g: *mut CslGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices of the graph.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn csl_graph_vertex_count(g: *const CslGraph, out: *mut u32) -> i32 {
    if g.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    *out = (*g).0.n() as u32;
    CSL_OK
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> i32 {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CSL_OK
        }
        Err(_) => CSL_INTERNAL_ERROR,
    }
}

/// Cut sets of the graph as a JSON array of sorted vertex arrays.
///
/// # Safety
/// `g` and `out` must be valid pointers; free the string with
/// `csl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn csl_cut_sets_json(g: *const CslGraph, out: *mut *mut c_char) -> i32 {
    if g.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    catch(|| {
        let family = cut_sets(&(*g).0);
        match serde_json::to_string(&family.sets) {
            Ok(json) => emit_string(out, json),
            Err(_) => CSL_INTERNAL_ERROR,
        }
    })
}

/// Writes 1 to `out` when the graph is unmixed, 0 otherwise.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn csl_is_unmixed(g: *const CslGraph, out: *mut i32) -> i32 {
    if g.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    catch(|| {
        *out = is_unmixed(&(*g).0) as i32;
        CSL_OK
    })
}

/// Accessibility verdict as a JSON report {"verdict", "witness"?, "stats"}.
///
/// # Safety
/// `g` and `out` must be valid pointers; free the string with
/// `csl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn csl_accessible_report_json(
    g: *const CslGraph,
    out: *mut *mut c_char,
) -> i32 {
    if g.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    catch(|| {
        let report = is_accessible_graph(&(*g).0);
        match serde_json::to_string(&report) {
            Ok(json) => emit_string(out, json),
            Err(_) => CSL_INTERNAL_ERROR,
        }
    })
}

/// (S₂) verdict for Δ_G as a JSON report. Fails with `CSL_UNSUPPORTED` for
/// disconnected graphs or more than 8 vertices.
///
/// # Safety
/// `g` and `out` must be valid pointers; free the string with
/// `csl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn csl_s2_report_json(g: *const CslGraph, out: *mut *mut c_char) -> i32 {
    if g.is_null() || out.is_null() {
        return CSL_NULL_ARGUMENT;
    }
    catch(|| {
        let graph = &(*g).0;
        if graph.n() > 8 {
            return CSL_UNSUPPORTED;
        }
        let complex = match delta_complex(graph) {
            Ok(d) => d.complex,
            Err(_) => return CSL_UNSUPPORTED,
        };
        let report = satisfies_s2(&complex);
        match serde_json::to_string(&report) {
            Ok(json) => emit_string(out, json),
            Err(_) => CSL_INTERNAL_ERROR,
        }
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a pointer returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn csl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn parse(text: &str) -> *mut CslGraph {
        let c = CString::new(text).unwrap();
        let mut g: *mut CslGraph = ptr::null_mut();
        assert_eq!(csl_graph_parse_text(c.as_ptr(), &mut g), CSL_OK);
        g
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        csl_string_free(p);
        s
    }

    #[test]
    fn round_trip_through_the_c_surface() {
        unsafe {
            let g = parse("5\n1 2\n2 3\n1 4\n2 4\n2 5\n1 5\n");
            let mut n = 0u32;
            assert_eq!(csl_graph_vertex_count(g, &mut n), CSL_OK);
            assert_eq!(n, 5);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(csl_cut_sets_json(g, &mut out), CSL_OK);
            assert_eq!(take_string(out), "[[],[2],[1,2]]");

            let mut unmixed = -1;
            assert_eq!(csl_is_unmixed(g, &mut unmixed), CSL_OK);
            assert_eq!(unmixed, 1);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(csl_accessible_report_json(g, &mut out), CSL_OK);
            let report: serde_json::Value =
                serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(report["verdict"], serde_json::json!(true));

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(csl_s2_report_json(g, &mut out), CSL_OK);
            let report: serde_json::Value =
                serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(report["verdict"], serde_json::json!(true));

            csl_graph_free(g);
        }
    }

    #[test]
    fn error_codes() {
        unsafe {
            let mut g: *mut CslGraph = ptr::null_mut();
            assert_eq!(
                csl_graph_parse_text(ptr::null(), &mut g),
                CSL_NULL_ARGUMENT
            );
            let bad = CString::new("not a graph").unwrap();
            assert_eq!(csl_graph_parse_text(bad.as_ptr(), &mut g), CSL_PARSE_ERROR);

            let g6 = CString::new("DQc").unwrap();
            assert_eq!(csl_graph_parse_graph6(g6.as_ptr(), &mut g), CSL_OK);
            let mut n = 0u32;
            assert_eq!(csl_graph_vertex_count(g, &mut n), CSL_OK);
            assert_eq!(n, 5);
            csl_graph_free(g);

            // disconnected graphs have no delta complex
            let disconnected = parse("4\n1 2\n3 4\n");
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(csl_s2_report_json(disconnected, &mut out), CSL_UNSUPPORTED);
            csl_graph_free(disconnected);

            csl_graph_free(ptr::null_mut());
            csl_string_free(ptr::null_mut());
        }
    }
}
