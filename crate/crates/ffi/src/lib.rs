//! C ABI over `kirchhoff-core`.
//!
//! Handles are opaque and owned by the caller; every `*_new`/`*_from_*`
//! has a matching `*_free`. Strings returned through out-parameters are
//! owned by the caller and released with [`kc_string_free`]. Every call
//! returns a [`KcStatus`]; on failure [`kc_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kirchhoff_core::cli::parse_point;
use kirchhoff_core::rational::{format_rational, parse_rational};
use kirchhoff_core::{
    check_log_concavity, graph_slp_report, hessian_and_gradient_at, kirchhoff_polynomial, slp_degree_one, Error,
    Graph, KirchhoffRoute, LogConcavityMode, Polynomial, RationalPoint,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    Precondition = 5,
    Graph = 6,
    Arithmetic = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KcMode {
    Plain = 0,
    Strict = 1,
    Homogeneous = 2,
    StrictHomogeneous = 3,
}

impl From<KcMode> for LogConcavityMode {
    fn from(m: KcMode) -> Self {
        match m {
            KcMode::Plain => LogConcavityMode::Plain,
            KcMode::Strict => LogConcavityMode::Strict,
            KcMode::Homogeneous => LogConcavityMode::Homogeneous,
            KcMode::StrictHomogeneous => LogConcavityMode::StrictHomogeneous,
        }
    }
}

/// Opaque graph handle.
pub struct KcGraph(Graph);

/// Opaque polynomial handle.
pub struct KcPolynomial(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(KcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => KcStatus::Parse,
            Error::VariableCountMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NotSquare { .. } => KcStatus::Dimension,
            Error::Disconnected
            | Error::NotSimple(_)
            | Error::Loop(_)
            | Error::Coloop(_)
            | Error::ElementInBasis(_)
            | Error::NotABasis
            | Error::InvalidMatroid(_) => KcStatus::Graph,
            Error::InexactDivision | Error::DivisionByZero | Error::ZeroPolynomial => KcStatus::Arithmetic,
            _ => KcStatus::Precondition,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            KcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(KcStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(KcStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(KcStatus::NullPointer, "null handle".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(KcStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

unsafe fn point_or_ones(point: *const c_char, n: usize) -> Result<RationalPoint, Failure> {
    let p = if point.is_null() { RationalPoint::ones(n) } else { parse_point(text(point)?)? };
    if p.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.dim() }.into());
    }
    Ok(p)
}

/// Message for the most recent failing call on this thread; empty after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from `K<m>` or the `p`/`e` text format.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_spec(spec: *const c_char, out: *mut *mut KcGraph) -> KcStatus {
    guard(|| {
        let g = Graph::build(text(spec)?)?;
        write(out, Box::into_raw(Box::new(KcGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_free(g: *mut KcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_size(g: *const KcGraph, vertices: *mut usize, edges: *mut usize) -> KcStatus {
    guard(|| {
        let g = &borrow(g)?.0;
        write(vertices, g.num_vertices())?;
        write(edges, g.num_edges())
    })
}

/// Number of spanning trees; 0 for a disconnected graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_tree_count(g: *const KcGraph, out: *mut u64) -> KcStatus {
    guard(|| {
        let g = &borrow(g)?.0;
        write(out, g.spanning_trees().len() as u64)
    })
}

/// Kirchhoff polynomial of `g`, one variable per edge.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_kirchhoff(g: *const KcGraph, out: *mut *mut KcPolynomial) -> KcStatus {
    guard(|| {
        let f = kirchhoff_polynomial(&borrow(g)?.0, KirchhoffRoute::MatrixTree);
        write(out, Box::into_raw(Box::new(KcPolynomial(f))))
    })
}

/// Parses text such as `x1*x2 + 3/2*x3^2`. A negative `num_vars` infers
/// the variable count from the largest index.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_polynomial_parse(
    source: *const c_char,
    num_vars: i64,
    out: *mut *mut KcPolynomial,
) -> KcStatus {
    guard(|| {
        let n = usize::try_from(num_vars).ok();
        let f = Polynomial::parse(text(source)?, n)?;
        write(out, Box::into_raw(Box::new(KcPolynomial(f))))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kc_polynomial_free(p: *mut KcPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_polynomial_num_vars(p: *const KcPolynomial, out: *mut usize) -> KcStatus {
    guard(|| write(out, borrow(p)?.0.num_vars()))
}

/// Canonical text form; free with [`kc_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_polynomial_to_string(p: *const KcPolynomial, out: *mut *mut c_char) -> KcStatus {
    guard(|| write(out, to_c(borrow(p)?.0.to_string())))
}

/// Exact value at a comma-separated rational point, written as `p/q`.
///
/// # Safety
/// `p` must be a live handle, `point` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kc_polynomial_evaluate(
    p: *const KcPolynomial,
    point: *const c_char,
    out: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let f = &borrow(p)?.0;
        let a = parse_point(text(point)?)?;
        let v = f.evaluate(a.coords())?;
        write(out, to_c(format_rational(&v)))
    })
}

/// Inertia of the Hessian at `point` (null for all ones).
///
/// # Safety
/// `p` must be a live handle, `point` null or a NUL-terminated string and
/// the out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn kc_hessian_inertia(
    p: *const KcPolynomial,
    point: *const c_char,
    n_plus: *mut usize,
    n_minus: *mut usize,
    n_zero: *mut usize,
) -> KcStatus {
    guard(|| {
        let f = &borrow(p)?.0;
        let a = point_or_ones(point, f.num_vars())?;
        let inertia = hessian_and_gradient_at(f, a.coords())?.hessian.inertia();
        write(n_plus, inertia.n_plus)?;
        write(n_minus, inertia.n_minus)?;
        write(n_zero, inertia.n_zero)
    })
}

/// Log-concavity verdict at `point` (null for all ones). `s` may be null
/// to quantify over the threshold range. `out_json`, when not null,
/// receives the full verdict as JSON.
///
/// # Safety
/// `p` must be a live handle, string arguments null or NUL-terminated,
/// `verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_check_log_concavity(
    p: *const KcPolynomial,
    point: *const c_char,
    mode: KcMode,
    s: *const c_char,
    verdict: *mut bool,
    out_json: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let f = &borrow(p)?.0;
        let a = point_or_ones(point, f.num_vars())?;
        let s = if s.is_null() { None } else { Some(parse_rational(text(s)?)?) };
        let v = check_log_concavity(f, &a, mode.into(), s.as_ref())?;
        write(verdict, v.verdict)?;
        if !out_json.is_null() {
            out_json.write(to_c(serde_json::to_string(&v).expect("serializable")));
        }
        Ok(())
    })
}

/// Degree-one strong Lefschetz report as JSON.
///
/// # Safety
/// `p` must be a live handle, `point` null or NUL-terminated, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kc_slp_report(
    p: *const KcPolynomial,
    point: *const c_char,
    slp_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let f = &borrow(p)?.0;
        let a = point_or_ones(point, f.num_vars())?;
        let rep = slp_degree_one(f, &a)?;
        write(slp_holds, rep.slp_holds)?;
        if !out_json.is_null() {
            out_json.write(to_c(serde_json::to_string(&rep).expect("serializable")));
        }
        Ok(())
    })
}

/// Same as [`kc_slp_report`] but also enforces that `g` is simple and
/// connected.
///
/// # Safety
/// As for [`kc_slp_report`].
#[no_mangle]
pub unsafe extern "C" fn kc_graph_slp_report(
    g: *const KcGraph,
    point: *const c_char,
    slp_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let g = &borrow(g)?.0;
        let a = point_or_ones(point, g.num_edges())?;
        let rep = graph_slp_report(g, &a)?;
        write(slp_holds, rep.slp_holds)?;
        if !out_json.is_null() {
            out_json.write(to_c(serde_json::to_string(&rep).expect("serializable")));
        }
        Ok(())
    })
}

/// Runs a command-line invocation (`argv[0]` is the program name).
/// Writes the process exit code and the captured stdout and stderr.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn kc_run(
    argc: usize,
    argv: *const *const c_char,
    exit_code: *mut i32,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(Failure(KcStatus::NullPointer, "null argv".into()));
        }
        let mut args = Vec::with_capacity(argc);
        for k in 0..argc {
            args.push(text(*argv.add(k))?.to_owned());
        }
        let out = kirchhoff_core::cli::run(args);
        write(exit_code, out.code)?;
        write(out_stdout, to_c(out.stdout))?;
        write(out_stderr, to_c(out.stderr))
    })
}
