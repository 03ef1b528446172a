use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use polycut_ffi::*;

fn last_error() -> String {
    let p = polycut_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(s: *mut std::os::raw::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    polycut_string_free(s);
    out
}

#[test]
fn generators_and_accessors() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(polycut_cyclic(4, 8, &mut c), PolycutStatus::Ok);
        assert!(polycut_complex_is_valid(c));
        assert_eq!(polycut_complex_dim(c), 4);
        assert_eq!(polycut_complex_vertex_count(c), 8);
        // C(4,8) has n(n-3)/2 facets.
        assert_eq!(polycut_complex_facet_count(c), 20);

        let mut g = ptr::null_mut();
        assert_eq!(polycut_complex_skeleton(c, &mut g), PolycutStatus::Ok);
        assert_eq!(polycut_graph_edge_count(g), 28);
        assert_eq!(polycut_graph_min_degree(g), 7);
        polycut_graph_free(g);
        polycut_complex_free(c);

        let mut s = ptr::null_mut();
        assert_eq!(polycut_simplex(3, &mut s), PolycutStatus::Ok);
        assert_eq!(polycut_complex_facet_count(s), 4);
        polycut_complex_free(s);

        let mut l = ptr::null_mut();
        assert_eq!(polycut_ladder_stacked(3, &mut l), PolycutStatus::Ok);
        assert_eq!(polycut_complex_vertex_count(l), 6);
        polycut_complex_free(l);

        let mut p = ptr::null_mut();
        assert_eq!(polycut_plane_triangulation(12, 30, 5, &mut p), PolycutStatus::Ok);
        assert_eq!(polycut_complex_facet_count(p), 2 * 12 - 4);
        polycut_complex_free(p);
    }
}

#[test]
fn json_round_trip() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(polycut_waist(4, &mut c, ptr::null_mut()), PolycutStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(polycut_complex_to_json(c, &mut s), PolycutStatus::Ok);
        let json = take_string(s);

        let text = CString::new(json.clone()).unwrap();
        let mut d = ptr::null_mut();
        assert_eq!(polycut_complex_from_json(text.as_ptr(), &mut d), PolycutStatus::Ok);
        let mut s2 = ptr::null_mut();
        assert_eq!(polycut_complex_to_json(d, &mut s2), PolycutStatus::Ok);
        assert_eq!(take_string(s2), json);
        polycut_complex_free(c);
        polycut_complex_free(d);
    }
}

#[test]
fn cuts() {
    // Octahedron: complete graph on six vertices minus three antipodal pairs.
    let edges: Vec<usize> = (0..6usize)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2)
        .flat_map(|(u, v)| [u, v])
        .collect();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(polycut_graph_from_edges(6, edges.as_ptr(), edges.len() / 2, &mut g), PolycutStatus::Ok);
        assert_eq!(polycut_graph_vertex_count(g), 6);
        assert_eq!(polycut_graph_edge_count(g), 12);

        let mut global = ptr::null_mut();
        assert_eq!(polycut_global_min_cut(g, &mut global), PolycutStatus::Ok);
        assert_eq!(polycut_cut_size(global), 4);
        assert!(polycut_cut_is_trivial(global));

        let mut cut = ptr::null_mut();
        assert_eq!(polycut_min_nontrivial_cut(g, &mut cut), PolycutStatus::Ok);
        assert_eq!(polycut_cut_size(cut), 6);
        assert!(!polycut_cut_is_trivial(cut));
        let len = polycut_cut_side_len(cut);
        assert!((2..=4).contains(&len));
        let mut side = vec![usize::MAX; len];
        assert_eq!(polycut_cut_side(cut, side.as_mut_ptr(), len), PolycutStatus::Ok);
        assert!(side.windows(2).all(|w| w[0] < w[1]) && side[len - 1] < 6);
        let crossing = edges.chunks(2).filter(|e| side.contains(&e[0]) != side.contains(&e[1])).count();
        assert_eq!(crossing, 6);

        let mut small = vec![0; len - 1];
        assert_eq!(polycut_cut_side(cut, small.as_mut_ptr(), len - 1), PolycutStatus::InvalidArgument);

        let mut s = ptr::null_mut();
        assert_eq!(polycut_cut_to_json(cut, &mut s), PolycutStatus::Ok);
        assert!(take_string(s).contains("\"size\":6"));

        polycut_cut_free(global);
        polycut_cut_free(cut);
        polycut_graph_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(polycut_waist(3, &mut c, ptr::null_mut()), PolycutStatus::InvalidArgument);
        assert!(c.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(polycut_simplex(3, ptr::null_mut()), PolycutStatus::NullPointer);
        assert!(last_error().contains("null"));

        let truncated = CString::new("{\"dim\":3,\"n\":4,").unwrap();
        assert_eq!(polycut_complex_from_json(truncated.as_ptr(), &mut c), PolycutStatus::ParseError);
        assert!(c.is_null());

        // Parses, but a single triangle is not a sphere.
        let open = CString::new("{\"dim\":3,\"n\":4,\"facets\":[[0,1,2]]}").unwrap();
        assert_eq!(polycut_complex_from_json(open.as_ptr(), &mut c), PolycutStatus::Ok);
        assert!(!polycut_complex_is_valid(c));
        let mut skeleton = ptr::null_mut();
        assert_eq!(polycut_complex_skeleton(c, &mut skeleton), PolycutStatus::InvalidComplex);
        polycut_complex_free(c);

        let edges = [0usize, 1, 1, 2];
        let mut g = ptr::null_mut();
        assert_eq!(polycut_graph_from_edges(3, edges.as_ptr(), 2, &mut g), PolycutStatus::Ok);
        let mut cut = ptr::null_mut();
        assert_eq!(polycut_min_nontrivial_cut(g, &mut cut), PolycutStatus::NotFound);
        assert!(cut.is_null());
        polycut_graph_free(g);

        let out_of_range = [0usize, 7];
        assert_eq!(polycut_graph_from_edges(3, out_of_range.as_ptr(), 1, &mut g), PolycutStatus::InvalidArgument);

        assert_eq!(polycut_complex_vertex_count(ptr::null()), 0);
        assert!(!polycut_complex_is_valid(ptr::null()));
        polycut_complex_free(ptr::null_mut());
        polycut_graph_free(ptr::null_mut());
        polycut_cut_free(ptr::null_mut());
        polycut_string_free(ptr::null_mut());
    }
}

#[test]
fn waist_verification() {
    unsafe {
        let mut passed = false;
        let mut s = ptr::null_mut();
        assert_eq!(polycut_verify_waist(5, &mut passed, &mut s), PolycutStatus::Ok);
        assert!(passed);
        let report = take_string(s);
        assert!(report.contains("\"min_nontrivial_cut\":15"), "{report}");
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/polycut.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        assert!(text.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(text.contains("typedef struct PolycutComplex PolycutComplex;"));
    assert!(text.contains("POLYCUT_STATUS_NOT_FOUND = 5"));
}

/// Compiles a small C program against the header and static library.
/// Skipped when no C compiler is available.
#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("cc not found; skipping");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libpolycut_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(out.stdout, b"ok\n");
}
