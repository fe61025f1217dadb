use std::ffi::{c_char, CStr, CString};
use std::ptr;

use quadpoisson_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = qp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qp_string_free(s);
    out
}

unsafe fn algebra(name: &str) -> *mut QpAlgebra {
    let mut a = ptr::null_mut();
    assert_eq!(qp_algebra_catalog(c(name).as_ptr(), &mut a), QpStatus::Ok, "{name}");
    a
}

unsafe fn rmatrix(alg: *const QpAlgebra, text: &str) -> *mut QpRMatrix {
    let mut r = ptr::null_mut();
    assert_eq!(qp_rmatrix_parse(alg, c(text).as_ptr(), &mut r), QpStatus::Ok, "{text}");
    r
}

unsafe fn derive(alg: *const QpAlgebra, r: *const QpRMatrix, scale: &str) -> *mut QpBracket {
    let mut b = ptr::null_mut();
    assert_eq!(qp_derive(alg, r, c(scale).as_ptr(), &mut b), QpStatus::Ok);
    b
}

unsafe fn verdict(f: impl FnOnce(*mut bool) -> QpStatus) -> bool {
    let mut pass = false;
    assert_eq!(f(&mut pass), QpStatus::Ok);
    pass
}

#[test]
fn quaternion_bracket_round_trip() {
    unsafe {
        let alg = algebra("quaternions");
        assert_eq!(qp_algebra_dim(alg), 4);
        assert!(verdict(|p| qp_algebra_validate(alg, p)));
        let r = rmatrix(alg, "j^k");
        let b = derive(alg, r, "1/2");

        assert!(verdict(|p| qp_check_jacobi(b, p)));
        assert!(verdict(|p| qp_check_multiplicative(alg, b, p)));
        assert!(!verdict(|p| qp_check_cybe(alg, r, p)));
        assert!(verdict(|p| qp_check_schouten_invariance(alg, r, p)));

        // {x1,x2} = x3^2 + x4^2
        let mut s = ptr::null_mut();
        assert_eq!(qp_bracket_coefficient(b, 0, 1, 2, 2, &mut s), QpStatus::Ok);
        assert_eq!(take(s), "1");
        assert_eq!(qp_bracket_coefficient(b, 1, 0, 3, 3, &mut s), QpStatus::Ok);
        assert_eq!(take(s), "-1");
        assert_eq!(qp_bracket_coefficient(b, 2, 3, 0, 1, &mut s), QpStatus::Ok);
        assert_eq!(take(s), "0");

        let mut json = ptr::null_mut();
        assert_eq!(qp_bracket_to_json(b, &mut json), QpStatus::Ok);
        let text = c(&take(json));
        let mut back = ptr::null_mut();
        assert_eq!(qp_bracket_from_json(text.as_ptr(), &mut back), QpStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(qp_bracket_to_json(back, &mut again), QpStatus::Ok);
        assert_eq!(take(again), text.to_str().unwrap());

        qp_bracket_free(back);
        qp_bracket_free(b);
        qp_rmatrix_free(r);
        qp_algebra_free(alg);
    }
}

#[test]
fn ab_ba_solves_cybe_through_the_abi() {
    unsafe {
        let alg = algebra("upper_triangular(2)");
        let r = rmatrix(alg, "e11^e12");
        assert!(verdict(|p| qp_check_cybe(alg, r, p)));
        qp_rmatrix_free(r);
        qp_algebra_free(alg);
    }
}

#[test]
fn json_constructors_match_catalog() {
    let alg = quadpoisson::catalog::get_algebra(&"quaternions".parse().unwrap()).unwrap();
    let alg_json = c(&quadpoisson::io::to_pretty(&quadpoisson::io::algebra_to_json(&alg)));
    let r = quadpoisson::io::parse_r_inline(&alg, "i^k").unwrap();
    let r_json = c(&quadpoisson::io::to_pretty(&quadpoisson::io::r_to_json(&r)));
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(qp_algebra_from_json(alg_json.as_ptr(), &mut a), QpStatus::Ok);
        let mut rr = ptr::null_mut();
        assert_eq!(qp_rmatrix_from_json(r_json.as_ptr(), &mut rr), QpStatus::Ok);
        let from_json = derive(a, rr, "1/2");

        let ca = algebra("quaternions");
        let cr = rmatrix(ca, "i^k");
        let from_catalog = derive(ca, cr, "1/2");

        let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
        qp_bracket_to_json(from_json, &mut x);
        qp_bracket_to_json(from_catalog, &mut y);
        assert_eq!(take(x), take(y));

        for h in [from_json, from_catalog] {
            qp_bracket_free(h);
        }
        qp_rmatrix_free(rr);
        qp_rmatrix_free(cr);
        qp_algebra_free(a);
        qp_algebra_free(ca);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(qp_algebra_catalog(c("octonions").as_ptr(), &mut a), QpStatus::UnknownAlgebra);
        assert!(a.is_null());
        assert!(last_error().contains("octonions"));

        assert_eq!(qp_algebra_catalog(ptr::null(), &mut a), QpStatus::NullArgument);
        assert_eq!(qp_algebra_from_json(c("{ nope").as_ptr(), &mut a), QpStatus::Parse);

        let alg = algebra("quaternions");
        let mut r = ptr::null_mut();
        assert_eq!(qp_rmatrix_parse(alg, c("i^m").as_ptr(), &mut r), QpStatus::Parse);
        let mut bad = ptr::null_mut();
        assert_eq!(
            qp_rmatrix_from_json(c(r#"{"dim": 4, "r": [[1, 2, "1"], [2, 1, "1"]]}"#).as_ptr(), &mut bad),
            QpStatus::InvalidInput
        );

        let r = rmatrix(alg, "i^j");
        let mut b = ptr::null_mut();
        assert_eq!(qp_derive(alg, r, c("1/0").as_ptr(), &mut b), QpStatus::Parse);
        let b = derive(alg, r, "1");
        let mut s = ptr::null_mut();
        assert_eq!(qp_bracket_coefficient(b, 0, 1, 2, 7, &mut s), QpStatus::InvalidInput);
        assert!(s.is_null());
        assert_eq!(qp_check_jacobi(b, ptr::null_mut()), QpStatus::NullArgument);

        let nil = algebra("heisenberg");
        let nr = rmatrix(nil, "p^q");
        let mut pass = false;
        assert_eq!(qp_check_cybe(nil, nr, &mut pass), QpStatus::NoUnit);

        qp_rmatrix_free(nr);
        qp_algebra_free(nil);
        qp_bracket_free(b);
        qp_rmatrix_free(r);
        qp_algebra_free(alg);
    }
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        qp_algebra_free(ptr::null_mut());
        qp_rmatrix_free(ptr::null_mut());
        qp_bracket_free(ptr::null_mut());
        qp_string_free(ptr::null_mut());
        assert_eq!(qp_algebra_dim(ptr::null()), 0);
    }
    let v = unsafe { CStr::from_ptr(qp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
