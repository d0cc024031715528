use std::ffi::{c_char, CStr, CString};
use std::ptr;

use latpoly_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { latpoly_string_free(s) };
    out
}

fn builtin(name: &str) -> *mut LatpolyPolytope {
    let name = CString::new(name).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { latpoly_polytope_builtin(name.as_ptr(), &mut p) }, LatpolyStatus::Ok);
    p
}

fn last_error() -> String {
    let m = latpoly_last_error_message();
    assert!(!m.is_null());
    unsafe { CStr::from_ptr(m) }.to_string_lossy().into_owned()
}

#[test]
fn vertices_and_counts() {
    let coords: [i64; 6] = [0, 0, 2, 0, 0, 2];
    let mut p = ptr::null_mut();
    let st = unsafe { latpoly_polytope_from_vertices(2, 3, coords.as_ptr(), &mut p) };
    assert_eq!(st, LatpolyStatus::Ok);
    unsafe {
        assert_eq!(latpoly_polytope_dim(p), 2);
        assert_eq!(latpoly_polytope_vertex_count(p), 3);
        let mut s = ptr::null_mut();
        assert_eq!(latpoly_count_points(p, 3, &mut s), LatpolyStatus::Ok);
        assert_eq!(take_string(s), "28");
        latpoly_polytope_free(p);
    }
}

#[test]
fn json_input_and_queries() {
    let doc = CString::new(r#"{"dim":2,"vertices":[["0","0"],["3","0"],["0","3"]]}"#).unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(latpoly_polytope_from_json(doc.as_ptr(), &mut p), LatpolyStatus::Ok);
        let (mut delzant, mut reflexive) = (false, false);
        assert_eq!(latpoly_is_delzant(p, &mut delzant), LatpolyStatus::Ok);
        assert_eq!(latpoly_is_reflexive(p, &mut reflexive), LatpolyStatus::Ok);
        assert!(delzant && reflexive);
        let mut s = ptr::null_mut();
        assert_eq!(latpoly_ehrhart_json(p, &mut s), LatpolyStatus::Ok);
        assert!(take_string(s).contains(r#""coeffs":["1","9/2","9/2"]"#));
        latpoly_polytope_free(p);
    }
}

#[test]
fn classify_counterexample() {
    let p = builtin("counterexample5d");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(latpoly_classify_json(p, &mut s), LatpolyStatus::Ok);
        let v = take_string(s);
        assert!(v.contains(r#""case":"counterexample_family""#), "{v}");
        assert!(v.contains(r#""acsemis":false"#));
        latpoly_polytope_free(p);
    }
}

#[test]
fn equiv_through_run_json() {
    let a = builtin("simplex:2:1");
    let b = builtin("hirzebruch:1");
    let cmd = CString::new("equiv").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(latpoly_run_json(cmd.as_ptr(), a, a, &mut s), LatpolyStatus::Ok);
        assert!(take_string(s).contains(r#""equivalent":true"#));
        assert_eq!(latpoly_run_json(cmd.as_ptr(), a, b, &mut s), LatpolyStatus::Ok);
        assert!(take_string(s).contains(r#""equivalent":false"#));
        latpoly_polytope_free(a);
        latpoly_polytope_free(b);
    }
}

#[test]
fn error_codes_and_messages() {
    let mut p = ptr::null_mut();
    let bad = CString::new(r#"{"dim":2,"vertices":[["0","0"],["x","1"]]}"#).unwrap();
    assert_eq!(unsafe { latpoly_polytope_from_json(bad.as_ptr(), &mut p) }, LatpolyStatus::InvalidInput);
    assert!(last_error().contains("vertices[1][0]"));

    let flat: [i64; 6] = [0, 0, 1, 1, 2, 2];
    assert_eq!(unsafe { latpoly_polytope_from_vertices(2, 3, flat.as_ptr(), &mut p) }, LatpolyStatus::Unsupported);
    assert!(last_error().contains("not full-dimensional"));

    assert_eq!(unsafe { latpoly_polytope_builtin(ptr::null(), &mut p) }, LatpolyStatus::NullPointer);
    let mut flag = false;
    assert_eq!(unsafe { latpoly_is_delzant(ptr::null(), &mut flag) }, LatpolyStatus::NullPointer);

    let q = builtin("box:2:1");
    let cmd = CString::new("nonsense").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { latpoly_run_json(cmd.as_ptr(), q, ptr::null(), &mut s) }, LatpolyStatus::InvalidInput);
    let dual = CString::new("dual").unwrap();
    assert_eq!(unsafe { latpoly_run_json(dual.as_ptr(), q, ptr::null(), &mut s) }, LatpolyStatus::Unsupported);
    assert!(last_error().contains("origin not in interior"));

    // A successful call clears the message.
    assert_eq!(unsafe { latpoly_is_delzant(q, &mut flag) }, LatpolyStatus::Ok);
    assert!(latpoly_last_error_message().is_null());
    unsafe { latpoly_polytope_free(q) };
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        latpoly_polytope_free(ptr::null_mut());
        latpoly_string_free(ptr::null_mut());
        assert_eq!(latpoly_polytope_dim(ptr::null()), 0);
        assert_eq!(latpoly_polytope_vertex_count(ptr::null()), 0);
    }
}
