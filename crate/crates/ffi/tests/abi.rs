use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use fracfactor_ffi::*;

fn parse(text: &str) -> *mut FfGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { ff_graph_from_graph6(c.as_ptr(), &mut g) },
        FfStatus::Ok
    );
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = ff_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn graph6_round_trip() {
    let g = parse("D~{");
    unsafe {
        assert_eq!(ff_graph_vertex_count(g), 5);
        let mut need = 0usize;
        assert_eq!(
            ff_graph_to_graph6(g, ptr::null_mut(), 0, &mut need),
            FfStatus::BufferTooSmall
        );
        assert_eq!(need, 4);
        let mut buf = vec![0 as std::ffi::c_char; need];
        assert_eq!(
            ff_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), ptr::null_mut()),
            FfStatus::Ok
        );
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "D~{");
        ff_graph_free(g);
    }
}

#[test]
fn constructors_and_spectra() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(ff_graph_complete(6, &mut k), FfStatus::Ok);
        assert_eq!(ff_graph_edge_count(k), 15);
        let mut rho = 0.0;
        assert_eq!(
            ff_spectral_radius(k, FF_MATRIX_ADJACENCY, 1e-10, &mut rho),
            FfStatus::Ok
        );
        assert!((rho - 5.0).abs() < 1e-8);
        let mut q = 0.0;
        assert_eq!(
            ff_spectral_radius(k, FF_MATRIX_SIGNLESS_LAPLACIAN, 1e-10, &mut q),
            FfStatus::Ok
        );
        assert!((q - 10.0).abs() < 1e-8);
        assert_eq!(
            ff_spectral_radius(k, 7, 1e-10, &mut q),
            FfStatus::InvalidArgument
        );
        assert!(last_error().contains("matrix"));
        ff_graph_free(k);

        let mut h = ptr::null_mut();
        assert_eq!(ff_graph_construct_h(12, 3, &mut h), FfStatus::Ok);
        let mut yes = false;
        assert_eq!(ff_is_h_graph(h, 3, &mut yes), FfStatus::Ok);
        assert!(yes);
        assert_eq!(ff_graph_vertex_count(h), 12);
        ff_graph_free(h);

        let mut l = ptr::null_mut();
        assert_eq!(
            ff_graph_construct_l(11, 2, &mut l),
            FfStatus::InvalidArgument
        );
        assert!(l.is_null());
        assert_eq!(ff_graph_construct_l(12, 2, &mut l), FfStatus::Ok);
        assert_eq!(ff_graph_vertex_count(l), 12);
        ff_graph_free(l);
    }
}

#[test]
fn decisions_agree_across_methods() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(ff_graph_construct_h(10, 2, &mut h), FfStatus::Ok);
        for method in [FF_METHOD_STRUCTURAL, FF_METHOD_LP] {
            let mut covered = true;
            assert_eq!(ff_is_covered(h, 2, 2, method, &mut covered), FfStatus::Ok);
            assert!(!covered);
            let mut factor = true;
            assert_eq!(ff_has_factor(h, 2, 2, method, &mut factor), FfStatus::Ok);
            assert!(!factor);
        }
        let mut s = ptr::null_mut();
        assert_eq!(
            ff_covered_certificate_json(h, 2, 2, FF_METHOD_STRUCTURAL, &mut s),
            FfStatus::Ok
        );
        let json: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(json["holds"], false);
        ff_string_free(s);
        ff_graph_free(h);

        let mut k = ptr::null_mut();
        assert_eq!(ff_graph_complete(8, &mut k), FfStatus::Ok);
        let mut covered = false;
        assert_eq!(
            ff_is_covered(k, 2, 3, FF_METHOD_LP, &mut covered),
            FfStatus::Ok
        );
        assert!(covered);
        assert_eq!(
            ff_is_covered(k, 3, 2, FF_METHOD_LP, &mut covered),
            FfStatus::InvalidArgument
        );
        assert_eq!(
            ff_is_covered(k, 2, 3, 9, &mut covered),
            FfStatus::InvalidArgument
        );
        ff_graph_free(k);
    }
}

#[test]
fn null_and_malformed_inputs() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            ff_graph_from_graph6(ptr::null(), &mut g),
            FfStatus::NullPointer
        );
        let bad = CString::new("D~").unwrap();
        assert_eq!(ff_graph_from_graph6(bad.as_ptr(), &mut g), FfStatus::Parse);
        assert!(!last_error().is_empty());
        let ok = CString::new("A_").unwrap();
        assert_eq!(
            ff_graph_from_graph6(ok.as_ptr(), ptr::null_mut()),
            FfStatus::NullPointer
        );

        let mut out = false;
        assert_eq!(
            ff_is_covered(ptr::null(), 1, 1, FF_METHOD_LP, &mut out),
            FfStatus::NullPointer
        );
        assert_eq!(ff_graph_vertex_count(ptr::null()), 0);
        ff_graph_free(ptr::null_mut());
        ff_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_manifest() {
    let v = unsafe { CStr::from_ptr(ff_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include.join("fracfactor.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "ff_graph_from_graph6",
        "ff_is_covered",
        "ff_last_error_message",
        "FF_STATUS_BUFFER_TOO_SMALL",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping compile check");
        return;
    };
    if !cc.status.success() {
        return;
    }
    let src = std::env::temp_dir().join(format!("ff_header_check_{}.c", std::process::id()));
    std::fs::write(
        &src,
        r#"#include "fracfactor.h"
int main(void) {
    FfGraph *g = NULL;
    bool covered = false;
    double rho = 0.0;
    if (ff_graph_construct_h(10, 2, &g) != FF_STATUS_OK) return 1;
    if (ff_is_covered(g, 2, 2, FF_METHOD_LP, &covered) != FF_STATUS_OK) return 2;
    if (ff_spectral_radius(g, FF_MATRIX_ADJACENCY, 1e-9, &rho) != FF_STATUS_OK) return 3;
    ff_graph_free(g);
    return covered ? 4 : 0;
}
"#,
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success(), "header failed to compile");
}
