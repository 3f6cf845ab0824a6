use std::ffi::{c_char, CStr, CString};
use std::ptr;

use kirchhoff_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    kc_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(kc_last_error()).to_str().unwrap().to_owned() }
}

#[test]
fn k4_round_trip() {
    unsafe {
        let spec = CString::new("K4").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(kc_graph_from_spec(spec.as_ptr(), &mut g), KcStatus::Ok);
        let (mut v, mut e, mut trees) = (0, 0, 0);
        assert_eq!(kc_graph_size(g, &mut v, &mut e), KcStatus::Ok);
        assert_eq!((v, e), (4, 6));
        assert_eq!(kc_graph_tree_count(g, &mut trees), KcStatus::Ok);
        assert_eq!(trees, 16);

        let mut f = ptr::null_mut();
        assert_eq!(kc_graph_kirchhoff(g, &mut f), KcStatus::Ok);
        let mut value = ptr::null_mut();
        let ones = CString::new("1,1,1,1,1,1").unwrap();
        assert_eq!(kc_polynomial_evaluate(f, ones.as_ptr(), &mut value), KcStatus::Ok);
        assert_eq!(take(value), "16/1");

        let (mut p, mut m, mut z) = (0, 0, 0);
        assert_eq!(kc_hessian_inertia(f, ptr::null(), &mut p, &mut m, &mut z), KcStatus::Ok);
        assert_eq!((p, m, z), (1, 5, 0));

        let mut verdict = false;
        let mut json = ptr::null_mut();
        assert_eq!(
            kc_check_log_concavity(f, ptr::null(), KcMode::StrictHomogeneous, ptr::null(), &mut verdict, &mut json),
            KcStatus::Ok
        );
        assert!(verdict);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["verdict"], true);

        let mut slp = false;
        assert_eq!(kc_graph_slp_report(g, ptr::null(), &mut slp, ptr::null_mut()), KcStatus::Ok);
        assert!(slp);

        kc_polynomial_free(f);
        kc_graph_free(g);
    }
}

#[test]
fn polynomial_parse_and_print() {
    unsafe {
        let src = CString::new("x1*x2 + x1*x3 + 4*x1*x4 + x2*x3 + x2*x4 + x3*x4").unwrap();
        let mut f = ptr::null_mut();
        assert_eq!(kc_polynomial_parse(src.as_ptr(), -1, &mut f), KcStatus::Ok);
        let mut n = 0;
        assert_eq!(kc_polynomial_num_vars(f, &mut n), KcStatus::Ok);
        assert_eq!(n, 4);
        let mut text = ptr::null_mut();
        assert_eq!(kc_polynomial_to_string(f, &mut text), KcStatus::Ok);
        assert!(take(text).contains("4/1 * x1^1 * x4^1"));
        let mut slp = true;
        let mut json = ptr::null_mut();
        assert_eq!(kc_slp_report(f, ptr::null(), &mut slp, &mut json), KcStatus::Ok);
        assert!(!slp);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["kernel_dim"], 1);
        kc_polynomial_free(f);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(kc_graph_from_spec(ptr::null(), &mut g), KcStatus::NullPointer);
        let bad = CString::new("x1 +* x2").unwrap();
        let mut f = ptr::null_mut();
        assert_eq!(kc_polynomial_parse(bad.as_ptr(), -1, &mut f), KcStatus::Parse);
        assert!(!last_error().is_empty());

        let src = CString::new("x1*x2").unwrap();
        assert_eq!(kc_polynomial_parse(src.as_ptr(), -1, &mut f), KcStatus::Ok);
        assert!(last_error().is_empty());
        let short = CString::new("1").unwrap();
        let (mut p, mut m, mut z) = (0, 0, 0);
        assert_eq!(kc_hessian_inertia(f, short.as_ptr(), &mut p, &mut m, &mut z), KcStatus::Dimension);
        let zero_den = CString::new("1/0,1").unwrap();
        assert_eq!(kc_hessian_inertia(f, zero_den.as_ptr(), &mut p, &mut m, &mut z), KcStatus::Parse);
        kc_polynomial_free(f);
        kc_polynomial_free(ptr::null_mut());
        kc_string_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_cli_contract() {
    let args: Vec<CString> =
        ["kirchhoff", "cayley", "--r", "3", "--format", "json"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    unsafe {
        let (mut code, mut out, mut err) = (-1, ptr::null_mut(), ptr::null_mut());
        assert_eq!(kc_run(ptrs.len(), ptrs.as_ptr(), &mut code, &mut out, &mut err), KcStatus::Ok);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["command"], "cayley");
        assert_eq!(take(err), "");
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/kirchhoff.h")).unwrap();
    for name in [
        "kc_last_error",
        "kc_string_free",
        "kc_graph_from_spec",
        "kc_graph_free",
        "kc_graph_kirchhoff",
        "kc_polynomial_parse",
        "kc_polynomial_evaluate",
        "kc_hessian_inertia",
        "kc_check_log_concavity",
        "kc_slp_report",
        "kc_run",
        "typedef struct KcGraph KcGraph",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn header_parses_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/kirchhoff.h");
    let Ok(out) = std::process::Command::new("cc").args(["-fsyntax-only", "-std=c99", "-x", "c", header]).output() else {
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
